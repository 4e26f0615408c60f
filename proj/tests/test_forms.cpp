#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "minindex/element.hpp"
#include "minindex/forms.hpp"

#include <random>

using namespace minindex;

TEST_CASE("family forms")
{
    for (long t = 1; t <= 100; ++t) {
        Int const T(t);
        auto const f = family_forms(T);
        CHECK(f.F.c == std::array<Int, 4>{1, 6, Int(-(T * T + 4)), Int(-(2 * T * T + 24))});
        CHECK(f.Q1 == TernaryForm{1, T, -6, Int(T * T + 12), Int(-5 * T), Int(T * T + 37)});
        CHECK(f.Q2 == TernaryForm{0, 0, 1, -1, T, -6});
        CHECK(f.Q2(Triple{Int(-6), Int(0), Int(1)}) == 0);

        // Generic resolvent u^3 - a2 u^2 v + (a1 a3 - 4 a4) u v^2 + (4 a2 a4 - a3^2 - a1^2 a4) v^3.
        Int const a1 = -T, a2 = -6, a3 = T, a4 = 1;
        CHECK(f.F.c == std::array<Int, 4>{1, Int(-a2), Int(a1 * a3 - 4 * a4), Int(4 * a2 * a4 - a3 * a3 - a1 * a1 * a4)});
        // (u+2v)(u^2+4uv-(t^2+12)v^2), coefficientwise
        std::array<Int, 4> prod{1, Int(4 + 2), Int(-(T * T + 12) + 8), Int(-2 * (T * T + 12))};
        CHECK(f.F.c == prod);
        for (long u = -5; u <= 5; ++u)
            for (long v = -5; v <= 5; ++v)
                CHECK(f.F(Int(u), Int(v)) == (u + 2 * v) * (Int(u * u + 4 * u * v) - (T * T + 12) * v * v));
    }
}

TEST_CASE("zero quartic")
{
    auto const f = build_forms({0, 0, 0, 0});
    CHECK(f.F.c == std::array<Int, 4>{1, 0, 0, 0});
    CHECK(f.Q1 == TernaryForm{1, 0, 0, 0, 0, 0});
    CHECK(f.Q2 == TernaryForm{0, 0, 1, -1, 0, 0});
}

TEST_CASE("index via forms: examples")
{
    for (long t : {1L, 2L, 4L, 8L}) {
        auto const p = validate_parameter(Int(t));
        CHECK(index_via_forms(PowerRep{0, 1, 0, 0, 1}, p) == p.n);
    }
    auto const f = family_forms(Int(12));
    Triple const X{Int(19), Int(11), Int(-1)};
    CHECK(abs(f.Q1(X)) == 20);
    CHECK(abs(f.Q2(X)) == 2);
    CHECK(f.F(Int(20), Int(2)) == -1536);
    auto const p12 = validate_parameter(Int(12));
    auto const pr = to_power_rep(AlgebraicInt{{Int(0), Int(5), Int(6), Int(-1)}}, p12);
    CHECK(Triple{pr.x, pr.y, pr.z} == X);
    CHECK(pr.d == 4);
    CHECK(index_via_forms(pr, p12) == Int(3));
    CHECK_FALSE(index_via_forms(PowerRep{7, 0, 0, 0, 1}, validate_parameter(Int(5))).has_value());
}

TEST_CASE("index via forms equals the discriminant index")
{
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<long> c(-200, 200);
    for (long t : {1L, 2L, 12L, 40L}) {
        auto const p = validate_parameter(Int(t));
        for (int i = 0; i < 1000; ++i) {
            AlgebraicInt const e{{Int(c(rng)), Int(c(rng)), Int(c(rng)), Int(c(rng))}};
            auto const a = index_oracle(e, p);
            auto const b = index_via_forms(to_power_rep(e, p), p);
            CHECK(a == b);
        }
    }
}

TEST_CASE("n F(Q1,Q2) / g^6 is integral on integral elements")
{
    for (long t = 1; t <= 20; ++t) {
        if (t == 3 || odd_square_factor(Int(t)) != 0) continue;
        auto const p = validate_parameter(Int(t));
        auto const f = family_forms(p.t);
        Int const d6 = ipow(p.g, 6);
        for (long x = -10; x <= 10; ++x)
            for (long y = -10; y <= 10; ++y)
                for (long z = -10; z <= 10; ++z) {
                    Triple const X{Int(x), Int(y), Int(z)};
                    Int const val = p.n * abs(f.F(f.Q1(X), f.Q2(X)));
                    // (a + x xi + y xi^2 + z xi^3)/g is integral for some a, or for none
                    bool integral = false;
                    for (long a = 0; a < p.g && !integral; ++a) {
                        try {
                            from_power_rep({Int(a), X[0], X[1], X[2], p.g}, p);
                            integral = true;
                        } catch (NotIntegral const&) {
                        }
                    }
                    if (integral) CHECK(mpz_divisible_p(val.get_mpz_t(), d6.get_mpz_t()));
                }
    }
}

TEST_CASE("right-hand side decomposition")
{
    auto const v0 = validate_parameter(Int(1));
    auto const v1 = validate_parameter(Int(2));
    auto const v3 = validate_parameter(Int(8));
    auto r = rhs_decomposition(v0, Int(2));
    CHECK(r.a == 1);
    CHECK(r.ell == 6);
    r = rhs_decomposition(v1, Int(3));
    CHECK(r.a == 3);
    CHECK(r.ell == 4);
    CHECK(r.value == 48);
    r = rhs_decomposition(v3, Int(16));
    CHECK(r.a == 1);
    CHECK(r.ell == 12);
    CHECK_THROWS_AS(rhs_decomposition(v0, Int(3)), NotInRange);
    CHECK_THROWS_AS(rhs_decomposition(v0, Int(0)), NotInRange);
    for (auto const* p : {&v0, &v1, &v3})
        for (Int m = 1; m <= p->n; ++m) {
            auto const d = rhs_decomposition(*p, m);
            CHECK(d.a % 2 == 1);
            CHECK(d.a <= 15);
            CHECK(d.ell >= 4);
            CHECK(d.ell <= 12);
            CHECK(d.a * pow2(d.ell) == ipow(p->g, 6) * m / p->n);
        }
}

TEST_CASE("ternary form helpers")
{
    TernaryForm const q{1, 2, 3, 4, 5, 6};
    Triple const P{Int(2), Int(-1), Int(3)};
    // permuted(perm): result(w) = q(x) with x_{perm[i]} = w_i
    std::array<int, 3> const perm{2, 0, 1};
    Triple w{P[perm[0]], P[perm[1]], P[perm[2]]};
    CHECK(q.permuted(perm)(w) == q(P));
    // gradient by finite differences of a quadratic
    auto const g = q.gradient(P);
    for (int i = 0; i < 3; ++i) {
        Triple a = P, b = P;
        a[i] += 1;
        b[i] -= 1;
        CHECK(2 * g[i] == q(a) - q(b));
    }
    CHECK(combine(Int(2), q, Int(-1), q) == q);
}
