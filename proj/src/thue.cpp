#include "minindex/thue.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <string>
#include <thread>

namespace minindex {

Int BinaryQuarticForm::operator()(Int const& p, Int const& q) const
{
    Int r = c[0];
    Int qk = 1;
    for (int k = 1; k <= 4; ++k) {
        qk *= q;
        r = r * p + c[k] * qk;
    }
    return r;
}

Int BinaryQuarticForm::content() const
{
    Int g = 0;
    for (auto const& x : c) g = gcd(g, x);
    return g;
}

BinaryQuarticForm BinaryQuarticForm::family(Int const& t)
{
    return {{Int(1), Int(-t), Int(-6), Int(t), Int(1)}};
}

std::optional<Int> scalar_multiple(BinaryQuarticForm const& f, BinaryQuarticForm const& g)
{
    std::optional<Int> c;
    for (int k = 0; k < 5; ++k) {
        if (g.c[k] == 0) {
            if (f.c[k] != 0) return std::nullopt;
            continue;
        }
        if (!mpz_divisible_p(f.c[k].get_mpz_t(), g.c[k].get_mpz_t())) return std::nullopt;
        Int const r = f.c[k] / g.c[k];
        if (c && *c != r) return std::nullopt;
        c = r;
    }
    return c;
}

Completeness Completeness::combine(Completeness const& o) const
{
    if (proven) return o;
    if (o.proven) return *this;
    return Bounded(std::min(bound, o.bound));
}

IntPair sign_normalized(IntPair pq)
{
    if (pq.first < 0 || (pq.first == 0 && pq.second < 0)) {
        pq.first = -pq.first;
        pq.second = -pq.second;
    }
    return pq;
}

void SolutionSet::insert(IntPair pq)
{
    pq = sign_normalized(std::move(pq));
    auto it = std::lower_bound(pairs.begin(), pairs.end(), pq);
    if (it == pairs.end() || *it != pq) pairs.insert(it, std::move(pq));
}

bool SolutionSet::contains(IntPair pq) const
{
    pq = sign_normalized(std::move(pq));
    return std::binary_search(pairs.begin(), pairs.end(), pq);
}

SolutionSet base_solutions(Int const& t, int w)
{
    if (t <= 0 || t == 3) throw std::invalid_argument("t must be positive and different from 3");
    SolutionSet s;
    s.completeness = Completeness::Proven();
    auto add = [&](long p, long q) { s.insert({Int(p), Int(q)}); };
    switch (w) {
        case 1:
            add(1, 0); add(0, 1);
            if (t == 4) { add(2, 3); add(3, -2); }
            break;
        case -1:
            if (t == 1) { add(1, 2); add(2, -1); }
            break;
        case 4:
            if (t == 1) { add(3, 1); add(1, -3); }
            break;
        case -4:
            add(1, 1); add(1, -1);
            if (t == 4) { add(5, 1); add(1, -5); }
            break;
        default:
            throw UnsupportedW("base solutions exist only for w in {1,-1,4,-4}, got " + std::to_string(w));
    }
    return s;
}

SolutionSet solve_power_of_two(Int const& t, int sign, unsigned long e)
{
    if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +1 or -1");
    if (e == 0) return base_solutions(t, sign);
    SolutionSet out;
    out.completeness = Completeness::Proven();
    if (e == 1) return out;
    // Both even: 16 | w and (p/2, q/2) solves w/16.
    if (e >= 4) {
        for (auto const& [p, q] : solve_power_of_two(t, sign, e - 4).pairs) out.insert({2 * p, 2 * q});
    }
    // p = q (mod 2): lifts of solutions of -w/4.
    for (auto const& [p, q] : solve_power_of_two(t, -sign, e - 2).pairs) out.insert({p - q, p + q});
    return out;
}

unsigned default_workers()
{
    if (char const* env = std::getenv("MININDEX_WORKERS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && v > 0) return static_cast<unsigned>(v);
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc ? hc : 1;
}

namespace {

struct Hit {
    std::size_t target;
    long q, p;
};

/* Rows q in [q_lo, q_hi], p in [-bound, bound]; q = 0 only with p > 0. */
void scan_rows(BinaryQuarticForm const& f, std::vector<Int> const& sorted_rhs, std::vector<std::size_t> const& order,
               Int const& max_abs, long bound, long q_lo, long q_hi, std::vector<Hit>& hits)
{
    Int d0, d1, d2, d3, d4, tmp;
    std::array<Int, 5> vals;
    for (long q = q_lo; q <= q_hi; ++q) {
        long const p_start = (q == 0) ? 1 : -bound;
        if (p_start > bound) continue;
        // Forward difference table of the quartic in p at p_start.
        Int const qq(q);
        for (int i = 0; i < 5; ++i) vals[i] = f(Int(p_start + i), qq);
        for (int level = 1; level < 5; ++level)
            for (int i = 4; i >= level; --i) vals[i] -= vals[i - 1];
        d0 = vals[0]; d1 = vals[1]; d2 = vals[2]; d3 = vals[3]; d4 = vals[4];
        for (long p = p_start; p <= bound; ++p) {
            if (mpz_cmpabs(d0.get_mpz_t(), max_abs.get_mpz_t()) <= 0) {
                auto lo = std::lower_bound(sorted_rhs.begin(), sorted_rhs.end(), d0);
                for (; lo != sorted_rhs.end() && *lo == d0; ++lo)
                    hits.push_back({order[static_cast<std::size_t>(lo - sorted_rhs.begin())], q, p});
            }
            d0 += d1;
            d1 += d2;
            d2 += d3;
            d3 += d4;
        }
    }
}

}  // namespace

std::vector<SolutionSet> bounded_search(BinaryQuarticForm const& f, std::span<Int const> rhs, long bound,
                                        unsigned workers)
{
    if (bound < 1) throw std::invalid_argument("search bound must be >= 1");
    std::vector<SolutionSet> out(rhs.size());
    for (auto& s : out) s.completeness = Completeness::Bounded(bound);
    if (rhs.empty()) return out;

    std::vector<std::size_t> order(rhs.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return rhs[a] < rhs[b]; });
    std::vector<Int> sorted_rhs;
    Int max_abs = 0;
    for (auto i : order) {
        sorted_rhs.push_back(rhs[i]);
        if (abs(rhs[i]) > max_abs) max_abs = abs(rhs[i]);
    }

    if (workers == 0) workers = default_workers();
    long const rows = bound + 1;
    workers = static_cast<unsigned>(std::min<long>(workers, rows));
    std::vector<std::vector<Hit>> hits(workers);
    if (workers <= 1) {
        scan_rows(f, sorted_rhs, order, max_abs, bound, 0, bound, hits[0]);
    } else {
        std::vector<std::thread> pool;
        long const chunk = (rows + workers - 1) / workers;
        for (unsigned w = 0; w < workers; ++w) {
            long const lo = w * chunk;
            long const hi = std::min(bound, lo + chunk - 1);
            if (lo > hi) continue;
            pool.emplace_back(scan_rows, std::cref(f), std::cref(sorted_rhs), std::cref(order), std::cref(max_abs),
                              bound, lo, hi, std::ref(hits[w]));
        }
        for (auto& th : pool) th.join();
    }
    for (auto const& part : hits)
        for (auto const& h : part) out[h.target].insert({Int(h.p), Int(h.q)});
    return out;
}

SolutionSet bounded_search(BinaryQuarticForm const& f, Int const& rhs, long bound, unsigned workers)
{
    Int const one[1] = {rhs};
    return bounded_search(f, std::span<Int const>(one, 1), bound, workers)[0];
}

}  // namespace minindex
