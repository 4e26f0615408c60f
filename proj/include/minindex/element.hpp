#ifndef MININDEX_ELEMENT_HPP_
#define MININDEX_ELEMENT_HPP_

#include "minindex/field_model.hpp"
#include "minindex/integer.hpp"

#include <array>
#include <optional>
#include <stdexcept>
#include <vector>

namespace minindex {

/* Element of Z_K by its coordinates in the integral basis (b_1 = 1, b_2 = xi, b_3, b_4). */
struct AlgebraicInt {
    std::array<Int, 4> coords;

    static AlgebraicInt from_triple(Triple const& tail, Int const& constant = 0)
    {
        return {{constant, tail[0], tail[1], tail[2]}};
    }
    Triple tail() const { return {coords[1], coords[2], coords[3]}; }
    bool operator==(AlgebraicInt const& o) const = default;
};

/* alpha = (a + x xi + y xi^2 + z xi^3) / d, d > 0, in lowest terms. */
struct PowerRep {
    Int a, x, y, z, d;

    void normalize();
    bool operator==(PowerRep const& o) const = default;
};

class NotIntegral : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

PowerRep to_power_rep(AlgebraicInt const& e, FamilyParameter const& param);

/* Throws NotIntegral when the value is not in Z_K. */
AlgebraicInt from_power_rep(PowerRep const& p, FamilyParameter const& param);

/* Structure constants: b_i b_j = sum_k c[i][j][k] b_k. */
struct MultiplicationTable {
    std::array<std::array<std::array<Int, 4>, 4>, 4> c;
};

MultiplicationTable multiplication_table(FamilyParameter const& param);

AlgebraicInt multiply(AlgebraicInt const& u, AlgebraicInt const& v, MultiplicationTable const& table);
AlgebraicInt multiply(AlgebraicInt const& u, AlgebraicInt const& v, FamilyParameter const& param);

/* Matrix of multiplication by e on the integral basis; column j holds e*b_j. */
std::array<std::array<Int, 4>, 4> multiplication_matrix(AlgebraicInt const& e, MultiplicationTable const& table);

/* Characteristic polynomial of multiplication by e, low-to-high, monic quartic. */
std::vector<Int> char_poly(AlgebraicInt const& e, FamilyParameter const& param);

/* I(e) = sqrt(disc(char_poly(e)) / d_K); nullopt when e does not generate K. */
std::optional<Int> index_oracle(AlgebraicInt const& e, FamilyParameter const& param);

/* I(e) computed as the group index (Z_K : Z[e]), i.e. |det| of the coordinates
 * of 1, e, e^2, e^3.  Reuses its scratch space, so one instance per thread. */
class LatticeIndex {
  public:
    explicit LatticeIndex(FamilyParameter const& param);

    /* nullopt when e does not generate K. */
    std::optional<Int> operator()(Triple const& tail);

  private:
    MultiplicationTable table_;
    std::array<std::array<Int, 4>, 4> m_;
    std::array<Int, 4> a_, a2_, a3_;
    Int det_, tmp_;
};

/* Representative modulo translation and sign: the constant coordinate is
 * dropped and the last nonzero of (X3, X2, X1) made positive. */
Triple canonical(Triple v);
inline Triple canonical(AlgebraicInt const& e) { return canonical(e.tail()); }

/* Ordering used for emitted element lists: lexicographic on (X3, X2, X1). */
struct CanonicalOrder {
    bool operator()(Triple const& a, Triple const& b) const
    {
        if (a[2] != b[2]) return a[2] < b[2];
        if (a[1] != b[1]) return a[1] < b[1];
        return a[0] < b[0];
    }
};

}  // namespace minindex

#endif  /* MININDEX_ELEMENT_HPP_ */
