#include "minindex/conic.hpp"

#include <algorithm>
#include <tuple>

namespace minindex {

namespace {

using Quad = std::array<Int, 3>;   // p^2, pq, q^2

std::array<Int, 5> mul(Quad const& a, Quad const& b)
{
    std::array<Int, 5> r;
    for (auto& c : r) c = 0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r[i + j] += a[i] * b[j];
    return r;
}

void add_scaled(std::array<Int, 5>& acc, Int const& s, std::array<Int, 5> const& v)
{
    if (s == 0) return;
    for (int i = 0; i < 5; ++i) acc[i] += s * v[i];
}

}  // namespace

bool is_definite(TernaryForm const& q)
{
    // Leading principal minors of the doubled Gram matrix.
    Int const m1 = 2 * q.xx;
    Int const m2 = 4 * q.xx * q.yy - q.xy * q.xy;
    Int const m3 = q.det8();
    bool const pos = m1 > 0 && m2 > 0 && m3 > 0;
    bool const neg = m1 < 0 && m2 > 0 && m3 < 0;
    return pos || neg;
}

namespace {

Triple primitive(Triple v)
{
    Int const g = gcd(v);
    if (g > 1)
        for (auto& c : v) c /= g;
    return v;
}

/* Integral zeros of a*s^2 + b*s + c (a != 0). */
std::vector<Int> integer_roots(Int const& a, Int const& b, Int const& c)
{
    std::vector<Int> out;
    Int const disc = b * b - 4 * a * c;
    Int r;
    if (!is_square(disc, &r)) return out;
    Int const den = 2 * a;
    for (Int const& num : {Int(-b + r), Int(-b - r)})
        if (mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t())) out.push_back(num / den);
    return out;
}

Triple sign_fixed(Triple v)
{
    for (auto const& c : v) {
        if (c == 0) continue;
        if (c < 0)
            for (auto& x : v) x = -x;
        break;
    }
    return v;
}

Int height(Triple const& v)
{
    return std::max({abs(v[0]), abs(v[1]), abs(v[2])});
}

}  // namespace

namespace {

/* Hilbert symbol (a,b)_p for nonzero integers and a prime p. */
int hilbert(Int a, Int b, Int const& p)
{
    auto split = [&](Int& x) {
        unsigned long e = 0;
        while (mpz_divisible_p(x.get_mpz_t(), p.get_mpz_t())) {
            mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), p.get_mpz_t());
            ++e;
        }
        return e;
    };
    unsigned long const alpha = split(a);
    unsigned long const beta = split(b);
    if (p == 2) {
        auto eps = [](Int const& u) { return static_cast<unsigned long>(mpz_fdiv_ui(u.get_mpz_t(), 4) == 3); };
        auto omega = [](Int const& u) {
            unsigned long const r = mpz_fdiv_ui(u.get_mpz_t(), 8);
            return static_cast<unsigned long>(r == 3 || r == 5);
        };
        unsigned long const e = eps(a) * eps(b) + alpha * omega(b) + beta * omega(a);
        return e % 2 ? -1 : 1;
    }
    int r = 1;
    if (alpha % 2 && beta % 2 && mpz_fdiv_ui(p.get_mpz_t(), 4) == 3) r = -r;
    if (beta % 2) r *= mpz_legendre(a.get_mpz_t(), p.get_mpz_t());
    if (alpha % 2) r *= mpz_legendre(b.get_mpz_t(), p.get_mpz_t());
    return r;
}

}  // namespace

bool has_rational_point(TernaryForm const& Q0)
{
    if (Q0.is_zero()) throw std::invalid_argument("has_rational_point on the zero form");
    if (Q0.xx == 0 || Q0.yy == 0 || Q0.zz == 0) return true;
    if (Q0.det8() == 0) return true;   // a degenerate conic has a rational singular point
    // 4 xx Q = X^2 + A y^2 + B yz + C z^2, then 4 A (A y^2 + B yz + C z^2) = Y^2 + D z^2.
    Int const A = 4 * Q0.xx * Q0.yy - Q0.xy * Q0.xy;
    Int const B = 4 * Q0.xx * Q0.yz - 2 * Q0.xy * Q0.xz;
    Int const C = 4 * Q0.xx * Q0.zz - Q0.xz * Q0.xz;
    if (A == 0) return true;
    Int const D = 4 * A * C - B * B;
    // X^2 + A Y^2 + A D Z^2 is isotropic iff (-AD, -D)_p = 1 everywhere.
    Int const a = -A * D, b = -D;
    if (a < 0 && b < 0) return false;
    for (auto const& [p, e] : factor(Int(2 * A * D)))
        if (hilbert(a, b, p) != 1) return false;
    return true;
}

std::optional<Triple> find_point(TernaryForm const& Q0, PointSearchOptions const& opts)
{
    if (Q0.is_zero()) throw std::invalid_argument("find_point on the zero form");
    if (is_definite(Q0)) return std::nullopt;

    // Solve for a variable with nonzero square coefficient.
    std::array<int, 3> perm;
    if (Q0.xx != 0) perm = {0, 1, 2};
    else if (Q0.yy != 0) perm = {1, 0, 2};
    else if (Q0.zz != 0) perm = {2, 0, 1};
    else return Triple{1, 0, 0};
    TernaryForm const f = Q0.permuted(perm);

    auto unpermute = [&](Triple const& w) {
        Triple x;
        for (int i = 0; i < 3; ++i) x[perm[i]] = w[i];
        return primitive(x);
    };
    // Every zero found up to the current radius competes; the preferred one has the
    // smallest nonzero |z| (z = 0 last), then the smallest height.
    std::vector<Triple> found;
    auto try_pair = [&](long y, long z) {
        Int const Y(y), Z(z);
        Int const b = f.xy * Y + f.xz * Z;
        Int const c = f.yy * Y * Y + f.yz * Y * Z + f.zz * Z * Z;
        for (auto const& s : integer_roots(f.xx, b, c)) found.push_back(sign_fixed(unpermute({s, Y, Z})));
    };
    auto key = [](Triple const& v) {
        return std::tuple{v[2] == 0, Int(abs(v[2])), height(v)};
    };
    auto best = [&] {
        return *std::min_element(found.begin(), found.end(), [&](Triple const& x, Triple const& y) {
            auto const kx = key(x), ky = key(y);
            return kx != ky ? kx < ky : x > y;
        });
    };

    long done = 0;
    for (long radius = std::max(1L, opts.initial_radius);; radius = std::min(2 * radius, opts.max_radius)) {
        for (long h = done + 1; h <= radius; ++h) {
            for (long a = -h; a <= h; ++a) {
                try_pair(h, a);
                try_pair(-h, a);
                if (a == -h || a == h) continue;
                try_pair(a, h);
                try_pair(a, -h);
            }
        }
        if (!found.empty()) return best();
        done = radius;
        if (radius >= opts.max_radius) break;
    }
    return std::nullopt;
}

Triple Parametrization::evaluate(Int const& p, Int const& q) const
{
    Int const pp = p * p, pq = p * q, qq = q * q;
    Triple r;
    for (int i = 0; i < 3; ++i) r[i] = C[i][0] * pp + C[i][1] * pq + C[i][2] * qq;
    return r;
}

Int Parametrization::content() const
{
    Int g = 0;
    for (auto const& row : C)
        for (auto const& c : row) g = gcd(g, c);
    return g;
}

Int Parametrization::det() const
{
    std::vector<std::vector<Int>> m(3, std::vector<Int>(3));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m[i][j] = C[i][j];
    return determinant(m);
}

Parametrization parametrize(TernaryForm const& Q0, Triple const& point)
{
    if (Q0(point) != 0) throw std::invalid_argument("base point does not lie on the conic");
    if (point[0] == 0 && point[1] == 0 && point[2] == 0) throw DegeneratePoint("base point is zero");

    static constexpr std::array<std::array<int, 3>, 6> perms{{
        {0, 1, 2}, {1, 0, 2}, {0, 2, 1}, {2, 0, 1}, {1, 2, 0}, {2, 1, 0},
    }};
    for (auto const& perm : perms) {
        // In permuted coordinates w_i = x_{perm[i]}.
        TernaryForm const f = Q0.permuted(perm);
        Triple const P{point[perm[0]], point[perm[1]], point[perm[2]]};
        if (P[2] == 0) continue;
        Triple const grad = f.gradient(P);
        Int const& l1 = grad[0];
        Int const& l2 = grad[1];
        if (l1 == 0 && l2 == 0) continue;

        // f(P r + (p,q,0)) = r (l1 p + l2 q) + M(p,q); multiply the line by -(l1 p + l2 q).
        std::array<Quad, 3> rows;
        rows[0] = {Int(-l1 + P[0] * f.xx), Int(-l2 + P[0] * f.xy), Int(P[0] * f.yy)};
        rows[1] = {Int(P[1] * f.xx), Int(-l1 + P[1] * f.xy), Int(-l2 + P[1] * f.yy)};
        rows[2] = {Int(P[2] * f.xx), Int(P[2] * f.xy), Int(P[2] * f.yy)};

        Parametrization par;
        for (int i = 0; i < 3; ++i) par.C[perm[i]] = rows[i];
        par.base_point = point;
        Int const d = par.det();
        if (d == 0) continue;

        int flip = 0;
        for (int i = 2; i >= 0 && flip == 0; --i)
            for (int j = 0; j < 3 && flip == 0; ++j)
                if (par.C[i][j] != 0) flip = par.C[i][j] > 0 ? 1 : -1;
        if (flip < 0)
            for (auto& row : par.C)
                for (auto& c : row) c = -c;

        Int const g = par.content();
        par.k_bound = abs(d) / (g * g);
        return par;
    }
    throw DegeneratePoint("no coordinate order gives a nondegenerate parametrization");
}

BinaryQuarticForm compose(TernaryForm const& Q, Parametrization const& par)
{
    auto const& X = par.C[0];
    auto const& Y = par.C[1];
    auto const& Z = par.C[2];
    std::array<Int, 5> acc;
    for (auto& c : acc) c = 0;
    add_scaled(acc, Q.xx, mul(X, X));
    add_scaled(acc, Q.xy, mul(X, Y));
    add_scaled(acc, Q.yy, mul(Y, Y));
    add_scaled(acc, Q.xz, mul(X, Z));
    add_scaled(acc, Q.yz, mul(Y, Z));
    add_scaled(acc, Q.zz, mul(Z, Z));
    return {acc};
}

ThueReduction thue_reduction(Parametrization const& par, TernaryForm const& Q, Int const& value,
                             Int const& square_part)
{
    if (value == 0) throw std::invalid_argument("thue_reduction needs a nonzero target value");
    ThueReduction red;
    red.form = compose(Q, par);
    Int const content = red.form.content();
    auto const ss = square_divisor_roots(square_part == 0 ? Int(1) : square_part);
    for (auto const& k : positive_divisors(par.k_bound)) {
        for (auto const& s : ss) {
            Int const num = value * k * k;
            Int const s2 = s * s;
            if (!mpz_divisible_p(num.get_mpz_t(), s2.get_mpz_t())) continue;
            Int const rhs = num / s2;
            if (content != 0 && !mpz_divisible_p(rhs.get_mpz_t(), content.get_mpz_t())) continue;
            red.targets.push_back({rhs, k, s, 1});
            red.targets.push_back({Int(-rhs), k, s, -1});
        }
    }
    return red;
}

}  // namespace minindex
