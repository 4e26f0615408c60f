#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "minindex/driver.hpp"
#include "minindex/golden.hpp"

#include <set>

using namespace minindex;

namespace {

Triple T3(long a, long b, long c) { return {Int(a), Int(b), Int(c)}; }

using UVSet = std::set<std::pair<Int, Int>>;

/* (u,v) with F(u,v) = +-N by direct search: |u + 2v| <= N and
 * (t^2+16) v^2 <= A^2 + N. */
UVSet resolvent_oracle(Int const& t, Int const& N)
{
    auto const F = family_forms(t).F;
    UVSet out;
    Int const D = t * t + 16;
    for (Int A = -N; A <= N; ++A) {
        if (A == 0) continue;
        Int const vmax = isqrt((A * A + N) / D) + 1;
        for (Int v = -vmax; v <= vmax; ++v) {
            Int const u = A - 2 * v;
            if (abs(F(u, v)) == N) out.insert({u, v});
        }
    }
    return out;
}

}  // namespace

TEST_CASE("resolvent solutions against direct search")
{
    for (long t : {1L, 2L, 4L, 5L, 7L, 8L, 12L, 16L, 20L}) {
        auto const p = validate_parameter(Int(t));
        for (Int m = 1; m <= p.n; ++m) {
            auto const N = rhs_decomposition(p, m).value;
            UVSet got;
            for (auto const& s : resolvent_solutions(p, m)) {
                CHECK(s.A == s.u + 2 * s.v);
                CHECK(s.A * s.B == family_forms(p.t).F(s.u, s.v));
                got.insert({s.u, s.v});
            }
            CHECK(got == resolvent_oracle(p.t, N));
            for (auto const& [u, v] : got) CHECK(got.count({-u, -v}) == 1);
        }
    }
}

TEST_CASE("case II triples")
{
    auto const triples = enumerate_case2_triples(Int(256));
    std::set<std::array<Int, 3>> keys;
    for (auto const& tr : triples) {
        CHECK(tr.provenance_holds());
        CHECK(tr.v != 0);
        keys.insert({tr.t, tr.u, tr.v});
        bool const ok = tr.hypothesis_ok;
        auto const p = validate_parameter(tr.t, !ok);
        CHECK(p.v2_class == tr.v2_class);
        bool seen = false;
        for (auto const& s : resolvent_solutions(p, tr.m)) seen = seen || (s.u == tr.u && s.v == tr.v);
        CHECK(seen);
    }
    auto has = [&](long t, long u, long v) {
        return keys.count({Int(t), Int(u), Int(v)}) || keys.count({Int(t), Int(-u), Int(-v)});
    };
    CHECK(has(2, 0, 1));
    CHECK(has(2, -4, 1));
    CHECK(has(12, 20, 2));
    CHECK(has(7, 1, -1));
    CHECK(has(7, 20, -2));
    CHECK_FALSE(has(5, 0, 1));
    // Complete against direct search for small t.
    for (long t = 1; t <= 64; ++t) {
        if (t == 3) continue;
        bool const override = odd_square_factor(Int(t)) != 0;
        auto const p = validate_parameter(Int(t), override);
        UVSet direct, listed;
        for (Int m = 1; m <= p.n; ++m)
            for (auto const& uv : resolvent_oracle(p.t, rhs_decomposition(p, m).value))
                if (uv.second != 0) direct.insert(uv);
        for (auto const& tr : triples)
            if (tr.t == t) listed.insert({tr.u, tr.v});
        INFO("t = " << t);
        CHECK(listed == direct);
    }
}

TEST_CASE("t = 7: case II adds nothing")
{
    auto const p = validate_parameter(Int(7));
    auto const res = minimal_index(p);
    CHECK(res.m == 2);
    CHECK(case2_candidates(p, Int(1)).elements.empty());
    auto const c2 = case2_candidates(p, Int(2));
    CHECK(c2.elements.empty());
    CHECK_FALSE(c2.rigor.proven);
    auto const bf = brute_force_minimal(p, 40);
    CHECK(bf.m == res.m);
    CHECK(compare_elements({bf.elements.begin(), bf.elements.end()}, res.element_list()).equal);
    for (auto const& [e, tr] : res.elements) CHECK(tr.route == "case1");
}

TEST_CASE("brute force examples")
{
    auto const g = GoldenTables::load(default_fixture_dir());
    auto const b2 = brute_force_minimal(validate_parameter(Int(2)), 20);
    CHECK(b2.m == 1);
    CHECK(compare_elements(g.expected_for(Int(2)).listed, {b2.elements.begin(), b2.elements.end()}).equal);

    auto const b12 = brute_force_minimal(validate_parameter(Int(12)), 30);
    CHECK(b12.m == 3);
    CHECK(b12.elements.size() == 6);
    CHECK(b12.elements.count(canonical(T3(5, 6, -1))) == 1);

    // The box only sees the elements inside it.
    auto const b1 = brute_force_minimal(validate_parameter(Int(1)), 10);
    CHECK(b1.m == 2);
    std::vector<Triple> inside;
    for (auto const& e : g.expected_for(Int(1)).corrected)
        if (abs(e[0]) <= 10 && abs(e[1]) <= 10 && abs(e[2]) <= 10) inside.push_back(e);
    CHECK(inside.size() == 6);
    CHECK(compare_elements(inside, {b1.elements.begin(), b1.elements.end()}).equal);

    CHECK_THROWS_AS(brute_force_minimal(validate_parameter(Int(2)), 0), std::invalid_argument);
}

TEST_CASE("solver agrees with brute force")
{
    for (long t : {1L, 2L, 4L, 5L, 6L, 8L, 10L, 12L}) {
        auto const p = validate_parameter(Int(t));
        auto const res = minimal_index(p);
        auto const bf = brute_force_minimal(p, t + 40);
        INFO("t = " << t);
        CHECK(res.m == bf.m);
        CHECK(compare_elements({bf.elements.begin(), bf.elements.end()}, res.element_list()).equal);
        CHECK_FALSE(res.inconclusive);
        CHECK_FALSE(res.hypothesis_violated);
    }
}

TEST_CASE("every reported element is verified")
{
    for (long t : {1L, 9L, 12L, 36L, 40L, 100L}) {
        auto const p = validate_parameter(Int(t));
        auto const res = minimal_index(p);
        CHECK(res.m <= p.n);
        for (auto const& [e, tr] : res.elements) {
            auto const a = AlgebraicInt::from_triple(e);
            CHECK(index_oracle(a, p) == res.m);
            CHECK(index_via_forms(to_power_rep(a, p), p) == res.m);
            CHECK(canonical(e) == e);
            auto const forms = family_forms(p.t);
            CHECK(abs(forms.Q1(tr.xyz)) == abs(tr.u));
            CHECK(abs(forms.Q2(tr.xyz)) == abs(tr.v));
        }
    }
}

TEST_CASE("a larger search bound finds no more")
{
    for (long t : {12L, 20L, 40L}) {
        auto const p = validate_parameter(Int(t));
        SearchOptions small;
        small.thue_bound = 300;
        auto const a = minimal_index(p, small);
        auto const b = minimal_index(p);
        CHECK(a.m == b.m);
        CHECK(a.element_list() == b.element_list());
        CHECK(b.rigor.bound >= a.rigor.bound);
    }
}

TEST_CASE("hypothesis check")
{
    auto const p = validate_parameter(Int(28), true);
    CHECK_THROWS_AS(minimal_index(p), ParameterError);
    SearchOptions o;
    o.allow_hypothesis_violation = true;
    auto const res = minimal_index(p, o);
    CHECK(res.hypothesis_violated);
    CHECK(res.m == 7);
}
