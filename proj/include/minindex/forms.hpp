#ifndef MININDEX_FORMS_HPP_
#define MININDEX_FORMS_HPP_

#include "minindex/element.hpp"
#include "minindex/field_model.hpp"
#include "minindex/integer.hpp"

#include <array>
#include <optional>
#include <stdexcept>

namespace minindex {

/* Monic quartic x^4 + a1 x^3 + a2 x^2 + a3 x + a4. */
struct QuarticCoeffs {
    Int a1, a2, a3, a4;

    static QuarticCoeffs family(Int const& t) { return {-t, Int(-6), t, Int(1)}; }
};

/* Binary cubic c[0] u^3 + c[1] u^2 v + c[2] u v^2 + c[3] v^3. */
struct ResolventForm {
    std::array<Int, 4> c;

    Int operator()(Int const& u, Int const& v) const;
    bool operator==(ResolventForm const&) const = default;
};

/* Ternary quadratic xx x^2 + xy xy + yy y^2 + xz xz + yz yz + zz z^2. */
struct TernaryForm {
    Int xx, xy, yy, xz, yz, zz;

    Int operator()(Int const& x, Int const& y, Int const& z) const;
    Int operator()(Triple const& p) const { return (*this)(p[0], p[1], p[2]); }

    /* Gradient at p. */
    Triple gradient(Triple const& p) const;

    /* Coordinates permuted: result(w0,w1,w2) = this(w at positions perm). */
    TernaryForm permuted(std::array<int, 3> const& perm) const;

    /* Determinant of the Gram matrix scaled by 8 (an integer). */
    Int det8() const;

    bool is_zero() const { return xx == 0 && xy == 0 && yy == 0 && xz == 0 && yz == 0 && zz == 0; }
    bool operator==(TernaryForm const&) const = default;
};

/* a*f + b*g */
TernaryForm combine(Int const& a, TernaryForm const& f, Int const& b, TernaryForm const& g);

struct IndexForms {
    ResolventForm F;
    TernaryForm Q1, Q2;
};

/* Cubic resolvent F and the quadratics Q1, Q2 of the index form of a monic quartic. */
IndexForms build_forms(QuarticCoeffs const& c);

/* The family specialization: F = (u+2v)(u^2+4uv-(t^2+12)v^2). */
inline IndexForms family_forms(Int const& t) { return build_forms(QuarticCoeffs::family(t)); }

/* I(alpha) = n |F(Q1(x,y,z), Q2(x,y,z))| / d^6 for alpha = (a + x xi + y xi^2 + z xi^3)/d.
 * nullopt when F vanishes (alpha does not generate K). */
std::optional<Int> index_via_forms(PowerRep const& p, FamilyParameter const& param);

struct RhsDecomposition {
    Int a;                /* odd, 1..15 */
    unsigned long ell;    /* 4..12 */
    Int value;            /* g^6 m / n = a 2^ell */
};

class NotInRange : public std::out_of_range {
  public:
    using std::out_of_range::out_of_range;
};

/* The unique (a, ell) with g^6 m / n = a 2^ell, for 1 <= m <= n. */
RhsDecomposition rhs_decomposition(FamilyParameter const& param, Int const& m);

}  // namespace minindex

#endif  /* MININDEX_FORMS_HPP_ */
