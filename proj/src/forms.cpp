#include "minindex/forms.hpp"

namespace minindex {

Int ResolventForm::operator()(Int const& u, Int const& v) const
{
    return ((c[0] * u + c[1] * v) * u + c[2] * v * v) * u + c[3] * v * v * v;
}

Int TernaryForm::operator()(Int const& x, Int const& y, Int const& z) const
{
    return (xx * x + xy * y + xz * z) * x + (yy * y + yz * z) * y + zz * z * z;
}

Triple TernaryForm::gradient(Triple const& p) const
{
    return {2 * xx * p[0] + xy * p[1] + xz * p[2],
            xy * p[0] + 2 * yy * p[1] + yz * p[2],
            xz * p[0] + yz * p[1] + 2 * zz * p[2]};
}

TernaryForm TernaryForm::permuted(std::array<int, 3> const& perm) const
{
    // Symmetric "doubled Gram" representation: g[i][i] = 2*square, g[i][j] = cross.
    std::array<std::array<Int, 3>, 3> g;
    g[0][0] = 2 * xx; g[1][1] = 2 * yy; g[2][2] = 2 * zz;
    g[0][1] = g[1][0] = xy;
    g[0][2] = g[2][0] = xz;
    g[1][2] = g[2][1] = yz;
    auto h = [&](int i, int j) -> Int const& { return g[perm[i]][perm[j]]; };
    return {h(0, 0) / 2, h(0, 1), h(1, 1) / 2, h(0, 2), h(1, 2), h(2, 2) / 2};
}

Int TernaryForm::det8() const
{
    std::vector<std::vector<Int>> g{{2 * xx, xy, xz}, {xy, 2 * yy, yz}, {xz, yz, 2 * zz}};
    return determinant(g);
}

TernaryForm combine(Int const& a, TernaryForm const& f, Int const& b, TernaryForm const& g)
{
    return {a * f.xx + b * g.xx, a * f.xy + b * g.xy, a * f.yy + b * g.yy,
            a * f.xz + b * g.xz, a * f.yz + b * g.yz, a * f.zz + b * g.zz};
}

IndexForms build_forms(QuarticCoeffs const& c)
{
    IndexForms f;
    f.F.c = {Int(1), Int(-c.a2), Int(c.a1 * c.a3 - 4 * c.a4),
             Int(4 * c.a2 * c.a4 - c.a3 * c.a3 - c.a1 * c.a1 * c.a4)};
    f.Q1 = {Int(1), Int(-c.a1), c.a2, Int(c.a1 * c.a1 - 2 * c.a2), Int(c.a3 - c.a1 * c.a2),
            Int(-c.a1 * c.a3 + c.a2 * c.a2 + c.a4)};
    f.Q2 = {Int(0), Int(0), Int(1), Int(-1), Int(-c.a1), c.a2};
    return f;
}

std::optional<Int> index_via_forms(PowerRep const& p, FamilyParameter const& param)
{
    auto const forms = family_forms(param.t);
    Int const u = forms.Q1(p.x, p.y, p.z);
    Int const v = forms.Q2(p.x, p.y, p.z);
    Int const f = forms.F(u, v);
    if (f == 0) return std::nullopt;
    Int const num = param.n * abs(f);
    Int const d6 = ipow(p.d, 6);
    if (!mpz_divisible_p(num.get_mpz_t(), d6.get_mpz_t()))
        throw NotIntegral("n F(u,v) not divisible by d^6: element not in Z_K");
    return num / d6;
}

RhsDecomposition rhs_decomposition(FamilyParameter const& param, Int const& m)
{
    if (m < 1 || m > param.n) throw NotInRange("m must satisfy 1 <= m <= n = " + param.n.get_str());
    Int const value = ipow(param.g, 6) * m;
    if (!mpz_divisible_p(value.get_mpz_t(), param.n.get_mpz_t())) throw std::logic_error("g^6 m not divisible by n");
    RhsDecomposition r;
    r.value = value / param.n;
    r.ell = valuation2(r.value);
    r.a = r.value;
    mpz_tdiv_q_2exp(r.a.get_mpz_t(), r.a.get_mpz_t(), r.ell);
    return r;
}

}  // namespace minindex
