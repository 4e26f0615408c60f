#include "minindex/element.hpp"

namespace minindex {

namespace {

using Poly4 = std::array<Int, 4>;

/* Product of two cubics in xi reduced modulo P_t, where
 * xi^4 = t xi^3 + 6 xi^2 - t xi - 1. */
Poly4 mul_mod(Poly4 const& a, Poly4 const& b, Int const& t)
{
    std::array<Int, 7> prod;
    for (auto& c : prod) c = 0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) prod[i + j] += a[i] * b[j];
    for (int k = 6; k >= 4; --k) {
        Int const c = prod[k];
        if (c == 0) continue;
        prod[k] = 0;
        prod[k - 1] += t * c;
        prod[k - 2] += 6 * c;
        prod[k - 3] -= t * c;
        prod[k - 4] -= c;
    }
    return {prod[0], prod[1], prod[2], prod[3]};
}

/* Numerators over basis.denom of the power coefficients of sum X_i b_i. */
Poly4 power_numerators(std::array<Int, 4> const& coords, IntegralBasis const& basis)
{
    Poly4 c;
    for (int j = 0; j < 4; ++j) {
        c[j] = 0;
        for (int i = 0; i < 4; ++i) c[j] += coords[i] * basis.rows[i][j];
    }
    return c;
}

/* Solve sum_i X_i rows[i][j] = rhs_j exactly.  rows is lower triangular. */
std::array<Rat, 4> solve_basis(std::array<Rat, 4> const& rhs, IntegralBasis const& basis)
{
    std::array<Rat, 4> x;
    for (int j = 3; j >= 0; --j) {
        Rat s = rhs[j];
        for (int i = j + 1; i < 4; ++i) s -= x[i] * Rat(basis.rows[i][j]);
        x[j] = s / Rat(basis.rows[j][j]);
    }
    return x;
}

std::array<Int, 4> integral_coords(Poly4 const& num, Int const& den, IntegralBasis const& basis)
{
    // Power coefficients num/den; basis coordinates solve rows^T X = denom * num / den.
    std::array<Rat, 4> rhs;
    for (int j = 0; j < 4; ++j) {
        rhs[j] = Rat(basis.denom * num[j], den);
        rhs[j].canonicalize();
    }
    auto const x = solve_basis(rhs, basis);
    std::array<Int, 4> out;
    for (int i = 0; i < 4; ++i) {
        if (x[i].get_den() != 1) throw NotIntegral("element is not an algebraic integer of K");
        out[i] = x[i].get_num();
    }
    return out;
}

}  // namespace

void PowerRep::normalize()
{
    if (d == 0) throw std::invalid_argument("PowerRep with zero denominator");
    if (d < 0) {
        a = -a; x = -x; y = -y; z = -z; d = -d;
    }
    Int g = gcd(gcd(gcd(a, x), gcd(y, z)), d);
    if (a == 0 && x == 0 && y == 0 && z == 0) g = d;
    if (g > 1) {
        a /= g; x /= g; y /= g; z /= g; d /= g;
    }
}

PowerRep to_power_rep(AlgebraicInt const& e, FamilyParameter const& param)
{
    auto const basis = integral_basis(param);
    auto const c = power_numerators(e.coords, basis);
    PowerRep p{c[0], c[1], c[2], c[3], basis.denom};
    p.normalize();
    return p;
}

AlgebraicInt from_power_rep(PowerRep const& p, FamilyParameter const& param)
{
    if (p.d <= 0) throw std::invalid_argument("PowerRep denominator must be positive");
    return {integral_coords({p.a, p.x, p.y, p.z}, p.d, integral_basis(param))};
}

MultiplicationTable multiplication_table(FamilyParameter const& param)
{
    auto const basis = integral_basis(param);
    MultiplicationTable tab;
    for (int i = 0; i < 4; ++i) {
        for (int j = i; j < 4; ++j) {
            Poly4 const prod = mul_mod(basis.rows[i], basis.rows[j], param.t);
            auto const coords = integral_coords(prod, basis.denom * basis.denom, basis);
            tab.c[i][j] = coords;
            tab.c[j][i] = coords;
        }
    }
    return tab;
}

AlgebraicInt multiply(AlgebraicInt const& u, AlgebraicInt const& v, MultiplicationTable const& table)
{
    AlgebraicInt r{{0, 0, 0, 0}};
    for (int i = 0; i < 4; ++i) {
        if (u.coords[i] == 0) continue;
        for (int j = 0; j < 4; ++j) {
            if (v.coords[j] == 0) continue;
            Int const s = u.coords[i] * v.coords[j];
            for (int k = 0; k < 4; ++k) r.coords[k] += s * table.c[i][j][k];
        }
    }
    return r;
}

AlgebraicInt multiply(AlgebraicInt const& u, AlgebraicInt const& v, FamilyParameter const& param)
{
    return multiply(u, v, multiplication_table(param));
}

std::array<std::array<Int, 4>, 4> multiplication_matrix(AlgebraicInt const& e, MultiplicationTable const& table)
{
    std::array<std::array<Int, 4>, 4> m;
    for (int k = 0; k < 4; ++k)
        for (int j = 0; j < 4; ++j) {
            m[k][j] = 0;
            for (int i = 0; i < 4; ++i) m[k][j] += e.coords[i] * table.c[i][j][k];
        }
    return m;
}

std::vector<Int> char_poly(AlgebraicInt const& e, FamilyParameter const& param)
{
    auto const m = multiplication_matrix(e, multiplication_table(param));

    // det(xI - M) = x^4 - s1 x^3 + s2 x^2 - s3 x + s4, s_k the sum of the
    // principal k x k minors.
    std::array<Int, 5> s;
    s[0] = 1;
    for (int k = 1; k <= 4; ++k) {
        s[k] = 0;
        for (unsigned mask = 0; mask < 16; ++mask) {
            if (__builtin_popcount(mask) != k) continue;
            std::vector<int> idx;
            for (int i = 0; i < 4; ++i)
                if (mask & (1u << i)) idx.push_back(i);
            std::vector<std::vector<Int>> minor(k, std::vector<Int>(k));
            for (int r = 0; r < k; ++r)
                for (int c = 0; c < k; ++c) minor[r][c] = m[idx[r]][idx[c]];
            s[k] += determinant(minor);
        }
    }
    std::vector<Int> cp(5);
    for (int k = 0; k <= 4; ++k) cp[4 - k] = (k % 2 ? -s[k] : s[k]);
    return cp;
}

std::optional<Int> index_oracle(AlgebraicInt const& e, FamilyParameter const& param)
{
    Int const disc = poly_discriminant(char_poly(e, param));
    if (disc == 0) return std::nullopt;
    if (!mpz_divisible_p(disc.get_mpz_t(), param.disc_K.get_mpz_t()))
        throw std::logic_error("disc(char_poly) not divisible by d_K");
    Int const q = disc / param.disc_K;
    Int root;
    if (!is_square(q, &root)) throw std::logic_error("disc(char_poly)/d_K is not a square");
    return root;
}

LatticeIndex::LatticeIndex(FamilyParameter const& param) : table_(multiplication_table(param)) {}

std::optional<Int> LatticeIndex::operator()(Triple const& tail)
{
    // m_[k][j] = coefficient of b_k in alpha * b_j.
    for (int k = 0; k < 4; ++k)
        for (int j = 0; j < 4; ++j) {
            Int& e = m_[k][j];
            e = tail[0] * table_.c[1][j][k];
            e += tail[1] * table_.c[2][j][k];
            e += tail[2] * table_.c[3][j][k];
        }
    a_[0] = 0;
    a_[1] = tail[0];
    a_[2] = tail[1];
    a_[3] = tail[2];
    for (int k = 0; k < 4; ++k) {
        a2_[k] = m_[k][1] * a_[1];
        a2_[k] += m_[k][2] * a_[2];
        a2_[k] += m_[k][3] * a_[3];
    }
    for (int k = 0; k < 4; ++k) {
        a3_[k] = m_[k][0] * a2_[0];
        for (int j = 1; j < 4; ++j) a3_[k] += m_[k][j] * a2_[j];
    }
    // The row of 1 is (1,0,0,0): the index is the 3x3 minor on coordinates 1..3.
    tmp_ = a2_[2] * a3_[3];
    tmp_ -= a2_[3] * a3_[2];
    det_ = a_[1] * tmp_;
    tmp_ = a2_[1] * a3_[3];
    tmp_ -= a2_[3] * a3_[1];
    det_ -= a_[2] * tmp_;
    tmp_ = a2_[1] * a3_[2];
    tmp_ -= a2_[2] * a3_[1];
    det_ += a_[3] * tmp_;
    if (det_ == 0) return std::nullopt;
    return abs(det_);
}

Triple canonical(Triple v)
{
    for (int i = 0; i < 3; ++i) {
        if (v[i] == 0) continue;
        if (v[i] < 0)
            for (auto& c : v) c = -c;
        break;
    }
    return v;
}

}  // namespace minindex
