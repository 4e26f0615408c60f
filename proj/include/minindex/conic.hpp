#ifndef MININDEX_CONIC_HPP_
#define MININDEX_CONIC_HPP_

#include "minindex/forms.hpp"
#include "minindex/integer.hpp"
#include "minindex/thue.hpp"

#include <array>
#include <optional>
#include <stdexcept>
#include <vector>

namespace minindex {

struct PointSearchOptions {
    long initial_radius = 64;
    long max_radius = 4096;
};

/* Q(x,y,z) = 0 forces x = y = z = 0. */
bool is_definite(TernaryForm const& q);

/* Legendre's criterion: Q0 = 0 has a nonzero rational solution iff it is
 * soluble over R and every Q_p. */
bool has_rational_point(TernaryForm const& Q0);

/* A primitive nonzero integer zero of Q0, searched over (y,z) (or the pair
 * complementary to a variable with nonzero square coefficient) in boxes of
 * doubling radius.  Among the zeros in the first box that has any, the one
 * with smallest nonzero |z|, then smallest max-norm, is returned, signed so
 * its first nonzero coordinate is positive.  Definite forms return nullopt
 * at once. */
std::optional<Triple> find_point(TernaryForm const& Q0, PointSearchOptions const& opts = {});

/* Rows give (x,y,z) as binary quadratics in (p,q): columns are p^2, pq, q^2.
 * Every primitive zero of Q0 is +-C(p^2,pq,q^2)/k for coprime (p,q) and a
 * positive k dividing k_bound = |det C| / content(C)^2. */
struct Parametrization {
    std::array<std::array<Int, 3>, 3> C;
    Int k_bound;
    Triple base_point;

    Triple evaluate(Int const& p, Int const& q) const;
    Int content() const;
    Int det() const;
};

class DegeneratePoint : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/* Lines x = x0 r + p, y = y0 r + q, z = z0 r through the point (coordinates
 * permuted when z0 = 0), cleared of the denominator in r.  Sign fixed so the
 * first nonzero entry of the z row is positive. */
Parametrization parametrize(TernaryForm const& Q0, Triple const& point);

/* Q(C(p^2,pq,q^2)) = value * k^2 / s^2 corresponds to the zero s*C(w)/k with
 * Q = value there. */
struct ThueTarget {
    Int rhs;
    Int k;
    Int s;
    int sign;   /* +1: Q = value, -1: Q = -value */
};

struct ThueReduction {
    BinaryQuarticForm form;
    std::vector<ThueTarget> targets;
};

/* Targets for every k | k_bound, s with s^2 | square_part, and both signs of
 * value; those whose right side is not a multiple of the form content are
 * dropped.  value must be nonzero. */
ThueReduction thue_reduction(Parametrization const& par, TernaryForm const& Q, Int const& value,
                             Int const& square_part = 1);

/* Q composed with the parametrization, as a binary quartic in (p,q). */
BinaryQuarticForm compose(TernaryForm const& Q, Parametrization const& par);

}  // namespace minindex

#endif  /* MININDEX_CONIC_HPP_ */
