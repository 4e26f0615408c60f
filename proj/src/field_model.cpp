#include "minindex/field_model.hpp"

namespace minindex {

char const* to_string(TwoAdicClass c)
{
    switch (c) {
        case TwoAdicClass::V0: return "V0";
        case TwoAdicClass::V1: return "V1";
        case TwoAdicClass::V2: return "V2";
        case TwoAdicClass::V3plus: return "V3plus";
    }
    return "?";
}

TwoAdicClass two_adic_class(Int const& t)
{
    switch (valuation2(t)) {
        case 0: return TwoAdicClass::V0;
        case 1: return TwoAdicClass::V1;
        case 2: return TwoAdicClass::V2;
        default: return TwoAdicClass::V3plus;
    }
}

Int odd_square_factor(Int const& t)
{
    Int m = t * t + 16;
    mpz_tdiv_q_2exp(m.get_mpz_t(), m.get_mpz_t(), mpz_scan1(m.get_mpz_t(), 0));
    for (Int p = 3; p * p <= m; p += 2) {
        if (!mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) continue;
        mpz_divexact(m.get_mpz_t(), m.get_mpz_t(), p.get_mpz_t());
        if (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) return p * p;
    }
    return 0;
}

std::array<Int, 5> family_polynomial(Int const& t)
{
    return {Int(1), Int(t), Int(-6), Int(-t), Int(1)};
}

FamilyParameter validate_parameter(Int const& t, bool allow_hypothesis_violation)
{
    if (t <= 0)
        throw ParameterError(ParameterErrorKind::NonPositive, "NonPositive: t must be positive, got " + t.get_str());
    if (t == 3)
        throw ParameterError(ParameterErrorKind::Excluded3, "Excluded3: t = 3 gives a reducible polynomial");
    Int const sq = odd_square_factor(t);
    if (sq != 0 && !allow_hypothesis_violation)
        throw ParameterError(ParameterErrorKind::OddSquareFactor,
                             "OddSquareFactor(" + sq.get_str() + "): t^2+16 = " + Int(t * t + 16).get_str() +
                                 " has an odd square factor",
                             sq);

    FamilyParameter p;
    p.t = t;
    p.v2_class = two_adic_class(t);
    switch (p.v2_class) {
        case TwoAdicClass::V0: p.g = 2; p.n = 2; break;
        case TwoAdicClass::V1: p.g = 2; p.n = 4; break;
        case TwoAdicClass::V2: p.g = 4; p.n = 8; break;
        case TwoAdicClass::V3plus: p.g = 4; p.n = 16; break;
    }
    p.odd_part_squarefree = (sq == 0);
    auto const f = family_polynomial(t);
    p.disc_P = poly_discriminant(std::vector<Int>(f.begin(), f.end()));
    Int const n2 = p.n * p.n;
    if (!mpz_divisible_p(p.disc_P.get_mpz_t(), n2.get_mpz_t()))
        throw std::logic_error("disc(P_t) not divisible by n^2 for t = " + t.get_str());
    p.disc_K = p.disc_P / n2;
    return p;
}

IntegralBasis integral_basis(FamilyParameter const& param)
{
    IntegralBasis b;
    using R = std::array<Int, 4>;
    switch (param.v2_class) {
        case TwoAdicClass::V0:
            b.denom = 2;
            b.rows = {R{2, 0, 0, 0}, R{0, 2, 0, 0}, R{0, 0, 2, 0}, R{1, 0, 0, 1}};
            break;
        case TwoAdicClass::V1:
            b.denom = 2;
            b.rows = {R{2, 0, 0, 0}, R{0, 2, 0, 0}, R{1, 0, 1, 0}, R{0, 1, 0, 1}};
            break;
        case TwoAdicClass::V2:
            b.denom = 4;
            b.rows = {R{4, 0, 0, 0}, R{0, 4, 0, 0}, R{2, 0, 2, 0}, R{1, 1, 1, 1}};
            break;
        case TwoAdicClass::V3plus:
            b.denom = 4;
            b.rows = {R{4, 0, 0, 0}, R{0, 4, 0, 0}, R{1, 2, -1, 0}, R{1, 1, 1, 1}};
            break;
    }
    return b;
}

Rat IntegralBasis::determinant() const
{
    std::vector<std::vector<Int>> m(4, std::vector<Int>(4));
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) m[i][j] = rows[i][j];
    Rat d(minindex::determinant(m), ipow(denom, 4));
    d.canonicalize();
    return d;
}

Int poly_discriminant(std::vector<Int> const& coeffs)
{
    if (coeffs.size() != 5 || coeffs[4] == 0) throw std::invalid_argument("WrongDegree: expected a quartic");
    if (coeffs[4] != 1) throw std::invalid_argument("NotMonic: leading coefficient must be 1");

    // Sylvester matrix of f (degree 4) and f' (degree 3), highest degree first.
    std::array<Int, 5> f;
    std::array<Int, 4> df;
    for (int i = 0; i < 5; ++i) f[i] = coeffs[4 - i];
    for (int i = 0; i < 4; ++i) df[i] = (4 - i) * coeffs[4 - i];

    std::vector<std::vector<Int>> s(7, std::vector<Int>(7, 0));
    for (int r = 0; r < 3; ++r)
        for (int j = 0; j < 5; ++j) s[r][r + j] = f[j];
    for (int r = 0; r < 4; ++r)
        for (int j = 0; j < 4; ++j) s[3 + r][r + j] = df[j];
    // (-1)^(n(n-1)/2) = +1 for n = 4, and the leading coefficient is 1.
    return determinant(s);
}

}  // namespace minindex
