#ifndef MININDEX_THUE_HPP_
#define MININDEX_THUE_HPP_

#include "minindex/integer.hpp"

#include <array>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace minindex {

/* c[0] p^4 + c[1] p^3 q + c[2] p^2 q^2 + c[3] p q^3 + c[4] q^4 */
struct BinaryQuarticForm {
    std::array<Int, 5> c;

    Int operator()(Int const& p, Int const& q) const;
    Int content() const;
    bool operator==(BinaryQuarticForm const&) const = default;

    /* F_t(p,q) = p^4 - t p^3 q - 6 p^2 q^2 + t p q^3 + q^4 */
    static BinaryQuarticForm family(Int const& t);
};

/* Integer c with f = c * g coefficientwise, if one exists (g nonzero). */
std::optional<Int> scalar_multiple(BinaryQuarticForm const& f, BinaryQuarticForm const& g);

/* Proven: the set is complete.  Otherwise complete only inside |p|,|q| <= bound. */
struct Completeness {
    bool proven = true;
    long bound = 0;

    static Completeness Proven() { return {true, 0}; }
    static Completeness Bounded(long b) { return {false, b}; }
    /* Weakest of the two. */
    Completeness combine(Completeness const& o) const;
    bool operator==(Completeness const&) const = default;
};

using IntPair = std::pair<Int, Int>;

/* Sign-normalized pairs (first nonzero of (p,q) positive), sorted. */
struct SolutionSet {
    std::vector<IntPair> pairs;
    Completeness completeness;

    void insert(IntPair pq);   /* normalizes the sign, keeps the set sorted and unique */
    bool contains(IntPair pq) const;
};

IntPair sign_normalized(IntPair pq);

class UnsupportedW : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/* All solutions of F_t(p,q) = w for w in {+1,-1,+4,-4}, t > 0, t != 3. */
SolutionSet base_solutions(Int const& t, int w);

/* All solutions of F_t(p,q) = sign * 2^e.  e = 1 is impossible modulo 8; for
 * e >= 2 every solution has p = q (mod 2) and is the image (p'-q', p'+q') of a
 * solution of F_t = -w/4, since F_t(p-q, p+q) = -4 F_t(p,q). */
SolutionSet solve_power_of_two(Int const& t, int sign, unsigned long e);

/* All pairs with |p|,|q| <= bound and f(p,q) = rhs, by exhaustive scan.
 * Work on the q range is split over `workers` threads (0: MININDEX_WORKERS or
 * hardware concurrency); the result does not depend on the split. */
SolutionSet bounded_search(BinaryQuarticForm const& f, Int const& rhs, long bound, unsigned workers = 0);

/* One scan for several right-hand sides; result[i] belongs to rhs[i]. */
std::vector<SolutionSet> bounded_search(BinaryQuarticForm const& f, std::span<Int const> rhs, long bound,
                                        unsigned workers = 0);

/* Worker count from MININDEX_WORKERS, else std::thread::hardware_concurrency(). */
unsigned default_workers();

}  // namespace minindex

#endif  /* MININDEX_THUE_HPP_ */
