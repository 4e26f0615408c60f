#ifndef MININDEX_INTEGER_HPP_
#define MININDEX_INTEGER_HPP_

#include <gmpxx.h>

#include <array>
#include <string>
#include <utility>
#include <vector>

namespace minindex {

using Int = mpz_class;
using Rat = mpq_class;

/* Integer triple, used for (x,y,z) coordinates and reduced element coordinates. */
using Triple = std::array<Int, 3>;

/* floor(sqrt(n)); n must be non-negative. */
Int isqrt(Int const& n);

/* True when n >= 0 is a perfect square; the root is written to *root if given. */
bool is_square(Int const& n, Int* root = nullptr);

/* 2-adic valuation of a nonzero integer. */
unsigned long valuation2(Int const& n);

Int gcd(Int const& a, Int const& b);
Int gcd(Triple const& v);

Int pow2(unsigned long e);
Int ipow(Int const& base, unsigned long e);

/* Prime factorization of |n|, primes increasing. n must be nonzero. */
std::vector<std::pair<Int, unsigned long>> factor(Int const& n);

/* All positive divisors of |n| in increasing order. n must be nonzero. */
std::vector<Int> positive_divisors(Int const& n);

/* Positive s with s^2 | n, increasing. n must be nonzero. */
std::vector<Int> square_divisor_roots(Int const& n);

inline int sign(Int const& n) { return sgn(n); }

inline std::string str(Int const& n) { return n.get_str(); }

std::string str(Triple const& v);

/* Determinant of a square integer matrix by Bareiss fraction-free elimination. */
Int determinant(std::vector<std::vector<Int>> m);

}  // namespace minindex

#endif  /* MININDEX_INTEGER_HPP_ */
