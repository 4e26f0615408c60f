#include "minindex/driver.hpp"

#include <algorithm>
#include <thread>

namespace minindex {

std::vector<ResolventSolution> resolvent_solutions(FamilyParameter const& param, Int const& m)
{
    Int const N = rhs_decomposition(param, m).value;
    Int const disc = param.t * param.t + 16;
    std::vector<ResolventSolution> out;
    for (auto const& d : positive_divisors(N)) {
        for (int sA : {1, -1}) {
            Int const A = sA * d;
            for (int sF : {1, -1}) {
                Int const B = sF * N / A;
                Int const D = A * A - B;
                if (D < 0 || !mpz_divisible_p(D.get_mpz_t(), disc.get_mpz_t())) continue;
                Int v;
                if (!is_square(D / disc, &v)) continue;
                out.push_back({A - 2 * v, v, A, B});
                if (v != 0) out.push_back({A + 2 * v, Int(-v), A, B});
            }
        }
    }
    std::sort(out.begin(), out.end(), [](auto const& a, auto const& b) {
        return a.v != b.v ? a.v < b.v : a.u < b.u;
    });
    return out;
}

bool CaseTwoTriple::provenance_holds() const
{
    Int const A = sign_A * a1 * pow2(i);
    Int const B = sign_B * a2 * pow2(ell - i);
    return u + 2 * v == A && a1 * a1 * pow2(2 * i) - B == v * v * (t * t + 16) && v != 0;
}

std::vector<CaseTwoTriple> enumerate_case2_triples(Int const& t_max)
{
    std::map<std::tuple<Int, Int, Int>, CaseTwoTriple> found;
    struct ClassData {
        TwoAdicClass c;
        long g, n;
    };
    static constexpr ClassData classes[] = {
        {TwoAdicClass::V0, 2, 2}, {TwoAdicClass::V1, 2, 4}, {TwoAdicClass::V2, 4, 8}, {TwoAdicClass::V3plus, 4, 16}};
    for (auto const& cd : classes) {
        for (long m = 1; m <= cd.n; ++m) {
            Int const value = ipow(Int(cd.g), 6) * m / cd.n;
            unsigned long const ell = valuation2(value);
            Int a = value;
            mpz_tdiv_q_2exp(a.get_mpz_t(), a.get_mpz_t(), ell);
            for (auto const& a1 : positive_divisors(a)) {
                Int const a2 = a / a1;
                for (unsigned long i = 0; i <= ell; ++i) {
                    for (int sA : {1, -1}) {
                        for (int sB : {1, -1}) {
                            Int const A = sA * a1 * pow2(i);
                            Int const B = sB * a2 * pow2(ell - i);
                            Int const D = A * A - B;
                            if (D <= 0) continue;
                            for (auto const& v : square_divisor_roots(D)) {
                                Int const T = D / (v * v) - 16;
                                Int t;
                                if (T <= 0 || !is_square(T, &t)) continue;
                                if (t > t_max || t == 3 || two_adic_class(t) != cd.c) continue;
                                for (int sv : {1, -1}) {
                                    CaseTwoTriple tr;
                                    tr.t = t;
                                    tr.v = sv * v;
                                    tr.u = A - 2 * tr.v;
                                    tr.a1 = a1;
                                    tr.a2 = a2;
                                    tr.i = i;
                                    tr.ell = ell;
                                    tr.sign_A = sA;
                                    tr.sign_B = sB;
                                    tr.m = m;
                                    tr.v2_class = cd.c;
                                    tr.hypothesis_ok = odd_square_factor(t) == 0;
                                    found.emplace(std::tuple{tr.t, tr.v, tr.u}, tr);
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    std::vector<CaseTwoTriple> out;
    out.reserve(found.size());
    for (auto& [key, tr] : found) out.push_back(std::move(tr));
    return out;
}

namespace {

struct UV {
    Int u, v;
    bool operator<(UV const& o) const { return u != o.u ? u < o.u : v < o.v; }
};

/* Element of Z_K with g alpha = a + x xi + y xi^2 + z xi^3 for some a, if any. */
std::optional<AlgebraicInt> lift_to_order(Triple const& xyz, FamilyParameter const& param)
{
    for (Int a = 0; a < param.g; ++a) {
        try {
            return from_power_rep({a, xyz[0], xyz[1], xyz[2], param.g}, param);
        } catch (NotIntegral const&) {
        }
    }
    return std::nullopt;
}

/* Solutions of Q1 = u, Q2 = v inside a box, for conics where no point was found. */
std::vector<Triple> system_box_solutions(IndexForms const& forms, std::set<UV> const& wanted, long box)
{
    std::vector<Triple> out;
    for (long z = -box; z <= box; ++z)
        for (long y = -box; y <= box; ++y)
            for (long x = -box; x <= box; ++x) {
                Triple const X{Int(x), Int(y), Int(z)};
                if (wanted.count({forms.Q1(X), forms.Q2(X)})) out.push_back(X);
            }
    return out;
}

/* Solve the system Q1 = u, Q2 = v for every (u,v) in `wanted`, all of which
 * share the conic v Q1 - u Q2 = 0. */
void process_conic(FamilyParameter const& param, Int const& m, IndexForms const& forms, std::set<UV> const& wanted,
                   std::optional<Triple> base_point, bool family_solver, char const* route,
                   SearchOptions const& opts, CandidateSet& out)
{
    UV const rep = *wanted.begin();
    TernaryForm const Q0 = combine(rep.v, forms.Q1, Int(-rep.u), forms.Q2);

    auto accept = [&](Triple const& X, ElementTrace trace) {
        if (!wanted.count({forms.Q1(X), forms.Q2(X)})) return;
        auto const e = lift_to_order(X, param);
        if (!e) {
            out.notes.push_back("(x,y,z)=" + str(X) + " does not lift to Z_K");
            return;
        }
        auto const idx = index_oracle(*e, param);
        if (!idx || *idx != m)
            throw std::logic_error("element " + str(X) + " from the index form system has index " +
                                   (idx ? idx->get_str() : std::string("degenerate")) + ", expected " + m.get_str());
        trace.u = forms.Q1(X);
        trace.v = forms.Q2(X);
        trace.xyz = X;
        out.elements.emplace(canonical(*e), std::move(trace));
    };

    // Without a nonzero rational zero of Q0 the system has no solutions: Q1 = Q2 = 0 at the origin.
    if (!base_point && !has_rational_point(Q0)) return;
    if (!base_point) base_point = find_point(Q0, opts.point);
    if (!base_point) {
        auto const sols = system_box_solutions(forms, wanted, opts.fallback_box);
        out.notes.push_back("no point on conic for (u,v)=(" + rep.u.get_str() + "," + rep.v.get_str() + ")");
        if (!sols.empty()) {
            out.inconclusive = true;
            for (auto const& X : sols) {
                ElementTrace tr;
                tr.route = route;
                accept(X, tr);
            }
        }
        return;
    }

    Parametrization const par = parametrize(Q0, *base_point);
    bool const use_q2 = rep.v != 0;
    ThueReduction const red =
        thue_reduction(par, use_q2 ? forms.Q2 : forms.Q1, use_q2 ? rep.v : rep.u, gcd(rep.u, rep.v));

    auto consume = [&](ThueTarget const& tgt, SolutionSet const& sols) {
        for (auto const& [p, q] : sols.pairs) {
            Triple X = par.evaluate(p, q);
            bool integral = true;
            for (auto& c : X) {
                c *= tgt.s;
                if (!mpz_divisible_p(c.get_mpz_t(), tgt.k.get_mpz_t())) {
                    integral = false;
                    break;
                }
                c /= tgt.k;
            }
            if (!integral) continue;
            ElementTrace tr;
            tr.route = route;
            tr.p = p;
            tr.q = q;
            tr.k = tgt.k;
            tr.s = tgt.s;
            tr.base_point = *base_point;
            tr.proven = sols.completeness.proven;
            accept(X, tr);
        }
    };

    std::vector<ThueTarget> bounded_targets;
    std::optional<Int> const scale =
        family_solver ? scalar_multiple(red.form, BinaryQuarticForm::family(param.t)) : std::nullopt;
    for (auto const& tgt : red.targets) {
        if (scale && *scale != 0 && mpz_divisible_p(tgt.rhs.get_mpz_t(), scale->get_mpz_t())) {
            Int const w = tgt.rhs / *scale;
            Int const aw = abs(w);
            if (aw != 0 && mpz_popcount(aw.get_mpz_t()) == 1) {
                consume(tgt, solve_power_of_two(param.t, sgn(w), valuation2(aw)));
                continue;
            }
        }
        if (scale) {
            // F_t = w with w not a power of two times a sign: no exact solver.
            if (*scale != 0 && !mpz_divisible_p(tgt.rhs.get_mpz_t(), scale->get_mpz_t())) continue;
        }
        bounded_targets.push_back(tgt);
    }
    if (!bounded_targets.empty()) {
        std::vector<Int> rhs;
        for (auto const& tgt : bounded_targets) rhs.push_back(tgt.rhs);
        auto const sols = bounded_search(red.form, rhs, opts.thue_bound, opts.workers);
        for (std::size_t i = 0; i < bounded_targets.size(); ++i) consume(bounded_targets[i], sols[i]);
        out.rigor = out.rigor.combine(Completeness::Bounded(opts.thue_bound));
    }
}

}  // namespace

CandidateSet case1_candidates(FamilyParameter const& param, Int const& m, SearchOptions const& opts)
{
    CandidateSet out;
    auto const dec = rhs_decomposition(param, m);
    if (dec.a != 1 || dec.ell % 3 != 0) return out;
    auto const forms = family_forms(param.t);
    std::set<UV> wanted;
    for (auto const& s : resolvent_solutions(param, m))
        if (s.v == 0) wanted.insert({s.u, s.v});
    if (wanted.empty()) return out;
    process_conic(param, m, forms, wanted, Triple{-6, 0, 1}, true, "case1", opts, out);
    return out;
}

CandidateSet case2_candidates(FamilyParameter const& param, Int const& m, SearchOptions const& opts)
{
    CandidateSet out;
    auto const forms = family_forms(param.t);
    // Group (u,v) with (-u,-v): both lie on the same conic.
    std::map<UV, std::set<UV>> groups;
    for (auto const& s : resolvent_solutions(param, m)) {
        if (s.v == 0) continue;
        UV key{s.u, s.v};
        if (key.v < 0) key = {Int(-s.u), Int(-s.v)};
        groups[key].insert({s.u, s.v});
    }
    for (auto const& [key, wanted] : groups)
        process_conic(param, m, forms, wanted, std::nullopt, false, "case2", opts, out);
    return out;
}

std::vector<Triple> MinimalIndexResult::element_list() const
{
    std::vector<Triple> v;
    for (auto const& [e, tr] : elements) v.push_back(e);
    return v;
}

MinimalIndexResult minimal_index(FamilyParameter const& param, SearchOptions const& opts)
{
    if (!param.odd_part_squarefree && !opts.allow_hypothesis_violation) {
        Int const sq = odd_square_factor(param.t);
        throw ParameterError(ParameterErrorKind::OddSquareFactor,
                             "OddSquareFactor(" + sq.get_str() + "): override required for t = " + param.t.get_str(),
                             sq);
    }
    MinimalIndexResult res;
    res.t = param.t;
    res.hypothesis_violated = !param.odd_part_squarefree;
    for (Int m = 1; m <= param.n; ++m) {
        CandidateSet c1 = case1_candidates(param, m, opts);
        CandidateSet c2 = case2_candidates(param, m, opts);
        res.rigor = res.rigor.combine(c1.rigor).combine(c2.rigor);
        res.inconclusive = res.inconclusive || c1.inconclusive || c2.inconclusive;
        for (auto* c : {&c1, &c2})
            for (auto& n : c->notes) {
                std::string line = "m=" + m.get_str() + ": " + n;
                if (std::find(res.notes.begin(), res.notes.end(), line) == res.notes.end())
                    res.notes.push_back(std::move(line));
            }
        ElementMap merged = std::move(c1.elements);
        for (auto& [e, tr] : c2.elements) merged.emplace(e, std::move(tr));
        if (merged.empty()) continue;

        for (auto const& [e, tr] : merged) {
            auto const elem = AlgebraicInt::from_triple(e);
            auto const a = index_oracle(elem, param);
            auto const b = index_via_forms(to_power_rep(elem, param), param);
            if (!a || !b || *a != m || *b != m)
                throw std::logic_error("verification failed for element " + str(e) + " at t = " + param.t.get_str());
        }
        res.m = m;
        res.elements = std::move(merged);
        return res;
    }
    throw std::logic_error("no element of index <= n found for t = " + param.t.get_str());
}

BruteForceResult brute_force_minimal(FamilyParameter const& param, long box, unsigned workers)
{
    if (box < 1) throw std::invalid_argument("brute-force box must be >= 1");
    if (workers == 0) workers = default_workers();
    workers = static_cast<unsigned>(std::min<long>(workers, box + 1));

    struct Partial {
        std::optional<Int> best;
        std::vector<Triple> hits;
    };
    std::vector<Partial> parts(workers);

    // One of each +-X: first nonzero of (X3, X2, X1) positive; results are re-signed by canonical().
    auto scan = [&](unsigned w) {
        LatticeIndex index(param);
        Partial& part = parts[w];
        Triple X;
        for (long z = w; z <= box; z += workers) {
            X[2] = z;
            for (long y = (z == 0 ? 0 : -box); y <= box; ++y) {
                X[1] = y;
                for (long x = (z == 0 && y == 0 ? 1 : -box); x <= box; ++x) {
                    X[0] = x;
                    auto const i = index(X);
                    if (!i) continue;
                    if (!part.best || *i < *part.best) {
                        part.best = *i;
                        part.hits.clear();
                    }
                    if (*i == *part.best) part.hits.push_back(X);
                }
            }
        }
    };
    if (workers == 1) {
        scan(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(scan, w);
        for (auto& th : pool) th.join();
    }

    BruteForceResult res;
    res.box = box;
    std::optional<Int> best;
    for (auto const& p : parts)
        if (p.best && (!best || *p.best < *best)) best = p.best;
    if (!best) throw std::logic_error("no generator in the box");
    res.m = *best;
    for (auto const& p : parts) {
        if (!p.best || *p.best != *best) continue;
        for (auto const& X : p.hits) {
            auto const chk = index_oracle(AlgebraicInt::from_triple(X), param);
            if (!chk || *chk != *best)
                throw std::logic_error("lattice index and discriminant index disagree at " + str(X));
            res.elements.insert(canonical(X));
        }
    }
    return res;
}

}  // namespace minindex
