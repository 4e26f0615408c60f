#ifndef MININDEX_FIELD_MODEL_HPP_
#define MININDEX_FIELD_MODEL_HPP_

#include "minindex/integer.hpp"

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

namespace minindex {

/* The field K = Q(xi), xi a root of P_t(x) = x^4 - t x^3 - 6 x^2 + t x + 1.
 *
 * The integral basis depends only on the 2-adic valuation of t, with all
 * valuations >= 3 sharing one basis.
 */
enum class TwoAdicClass { V0, V1, V2, V3plus };

char const* to_string(TwoAdicClass c);
TwoAdicClass two_adic_class(Int const& t);

struct FamilyParameter {
    Int t;
    TwoAdicClass v2_class;
    Int g;                       /* denominator: g * alpha in Z[xi] for every alpha in Z_K */
    Int n;                       /* index of xi */
    bool odd_part_squarefree;    /* false only for parameters accepted by the override */
    Int disc_P;
    Int disc_K;
};

enum class ParameterErrorKind { NonPositive, Excluded3, OddSquareFactor };

class ParameterError : public std::invalid_argument {
  public:
    ParameterError(ParameterErrorKind kind, std::string const& what, Int divisor = 0)
        : std::invalid_argument(what), kind_(kind), divisor_(std::move(divisor)) {}
    ParameterErrorKind kind() const noexcept { return kind_; }
    /* For OddSquareFactor: the odd square p^2 found dividing t^2+16. */
    Int const& divisor() const noexcept { return divisor_; }

  private:
    ParameterErrorKind kind_;
    Int divisor_;
};

/* Smallest odd square p^2 dividing t^2+16, or 0 when its odd part is squarefree. */
Int odd_square_factor(Int const& t);

/* Throws ParameterError unless t > 0, t != 3 and the odd part of t^2+16 is
 * squarefree.  With allow_hypothesis_violation the last condition is only
 * recorded in odd_part_squarefree.  Supported range for the squarefree check
 * is t <= 10^6 (trial division). */
FamilyParameter validate_parameter(Int const& t, bool allow_hypothesis_violation = false);

/* Coefficients (c0,c1,c2,c3,c4) of P_t, c4 = 1. */
std::array<Int, 5> family_polynomial(Int const& t);

/* b_i = (rows[i][0] + rows[i][1] xi + rows[i][2] xi^2 + rows[i][3] xi^3) / denom. */
struct IntegralBasis {
    Int denom;
    std::array<std::array<Int, 4>, 4> rows;

    Rat determinant() const;   /* det of the change of basis, equal to 1/n up to sign */
};

IntegralBasis integral_basis(FamilyParameter const& param);

/* Discriminant of a monic quartic given low-to-high (c0..c4), via the
 * Sylvester resultant Res(f, f').  Throws std::invalid_argument ("NotMonic",
 * "WrongDegree") otherwise. */
Int poly_discriminant(std::vector<Int> const& coeffs);

}  // namespace minindex

#endif  /* MININDEX_FIELD_MODEL_HPP_ */
