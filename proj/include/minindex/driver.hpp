#ifndef MININDEX_DRIVER_HPP_
#define MININDEX_DRIVER_HPP_

#include "minindex/conic.hpp"
#include "minindex/element.hpp"
#include "minindex/field_model.hpp"
#include "minindex/forms.hpp"
#include "minindex/integer.hpp"
#include "minindex/thue.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace minindex {

struct SearchOptions {
    long thue_bound = 2000;
    PointSearchOptions point;
    long fallback_box = 40;     /* brute-force box for conics without a point found */
    unsigned workers = 0;       /* 0: default_workers() */
    bool allow_hypothesis_violation = false;
};

/* (u,v) with F(u,v) = +-g^6 m / n.  With A = u + 2v the resolvent factors as
 * F = A * B, B = A^2 - (t^2+16) v^2. */
struct ResolventSolution {
    Int u, v;
    Int A, B;
};

std::vector<ResolventSolution> resolvent_solutions(FamilyParameter const& param, Int const& m);

struct CaseTwoTriple {
    Int t, u, v;
    /* A = sign_A a1 2^i, B = sign_B a2 2^(ell-i), a1 a2 = a, a1^2 2^(2i) - B = v^2 (t^2+16). */
    Int a1, a2;
    unsigned long i = 0, ell = 0;
    int sign_A = 1, sign_B = 1;
    Int m;
    TwoAdicClass v2_class = TwoAdicClass::V0;
    bool hypothesis_ok = true;

    bool provenance_holds() const;
};

/* All (t,u,v), v != 0, 0 < t <= t_max, t != 3, sorted by (t, v, u). */
std::vector<CaseTwoTriple> enumerate_case2_triples(Int const& t_max);

struct ElementTrace {
    std::string route;   /* "case1" or "case2" */
    Int u, v;            /* Q1, Q2 at (x,y,z) */
    Int p, q;            /* Thue solution */
    Int k, s;            /* (x,y,z) = s C(p^2,pq,q^2) / k */
    Triple xyz;          /* g alpha = a + x xi + y xi^2 + z xi^3 */
    Triple base_point;
    bool proven = false;
};

using ElementMap = std::map<Triple, ElementTrace, CanonicalOrder>;

struct CandidateSet {
    ElementMap elements;
    Completeness rigor = Completeness::Proven();
    bool inconclusive = false;
    std::vector<std::string> notes;
};

/* v = 0: u = +-2^i, Q2 = 0 parametrized from (-6,0,1), F_t = +-2^e solved exactly. */
CandidateSet case1_candidates(FamilyParameter const& param, Int const& m, SearchOptions const& opts = {});

/* v != 0: one conic per +-(u,v), Thue equations by bounded search. */
CandidateSet case2_candidates(FamilyParameter const& param, Int const& m, SearchOptions const& opts = {});

struct MinimalIndexResult {
    Int t;
    Int m;
    ElementMap elements;
    Completeness rigor = Completeness::Proven();
    bool hypothesis_violated = false;
    bool inconclusive = false;
    std::vector<std::string> notes;

    std::vector<Triple> element_list() const;
};

/* Throws ParameterError for a hypothesis-violating t unless allowed in opts. */
MinimalIndexResult minimal_index(FamilyParameter const& param, SearchOptions const& opts = {});

struct BruteForceResult {
    Int m;
    std::set<Triple, CanonicalOrder> elements;
    long box = 0;
};

/* Minimum of I over canonical (X1,X2,X3) with |Xi| <= box, and all elements attaining it. */
BruteForceResult brute_force_minimal(FamilyParameter const& param, long box, unsigned workers = 0);

}  // namespace minindex

#endif  /* MININDEX_DRIVER_HPP_ */
