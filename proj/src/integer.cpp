#include "minindex/integer.hpp"

#include <algorithm>
#include <stdexcept>

namespace minindex {

Int isqrt(Int const& n)
{
    if (n < 0) throw std::domain_error("isqrt of negative integer");
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

bool is_square(Int const& n, Int* root)
{
    if (n < 0) return false;
    if (!mpz_perfect_square_p(n.get_mpz_t())) return false;
    if (root) mpz_sqrt(root->get_mpz_t(), n.get_mpz_t());
    return true;
}

unsigned long valuation2(Int const& n)
{
    if (n == 0) throw std::domain_error("2-adic valuation of zero");
    return mpz_scan1(n.get_mpz_t(), 0);
}

Int gcd(Int const& a, Int const& b)
{
    Int r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

Int gcd(Triple const& v)
{
    return gcd(gcd(v[0], v[1]), v[2]);
}

Int pow2(unsigned long e)
{
    Int r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
    return r;
}

Int ipow(Int const& base, unsigned long e)
{
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

namespace {

/* A nontrivial factor of an odd composite n (Brent's variant of Pollard rho). */
Int rho_factor(Int const& n)
{
    for (unsigned long c = 1;; ++c) {
        Int y = 2, x, ys, q = 1, g = 1, tmp;
        unsigned long r = 1;
        auto step = [&](Int& v) {
            v *= v;
            v += c;
            v %= n;
        };
        do {
            x = y;
            for (unsigned long i = 0; i < r; ++i) step(y);
            unsigned long k = 0;
            while (k < r && g == 1) {
                ys = y;
                unsigned long const batch = std::min(128UL, r - k);
                for (unsigned long i = 0; i < batch; ++i) {
                    step(y);
                    tmp = abs(x - y);
                    q = q * tmp % n;
                }
                g = gcd(q, n);
                k += batch;
            }
            r *= 2;
        } while (g == 1);
        if (g == n) {
            do {
                step(ys);
                g = gcd(Int(abs(x - ys)), n);
            } while (g == 1);
        }
        if (g != n) return g;
    }
}

void factor_into(Int const& n, std::vector<Int>& primes)
{
    if (n == 1) return;
    if (mpz_probab_prime_p(n.get_mpz_t(), 30)) {
        primes.push_back(n);
        return;
    }
    Int const d = rho_factor(n);
    factor_into(d, primes);
    factor_into(Int(n / d), primes);
}

}  // namespace

std::vector<std::pair<Int, unsigned long>> factor(Int const& n)
{
    if (n == 0) throw std::domain_error("factorization of zero");
    std::vector<Int> primes;
    Int m = abs(n);
    unsigned long const e2 = m > 1 ? mpz_scan1(m.get_mpz_t(), 0) : 0;
    for (unsigned long i = 0; i < e2; ++i) primes.emplace_back(2);
    mpz_tdiv_q_2exp(m.get_mpz_t(), m.get_mpz_t(), e2);
    for (unsigned long p = 3; p < 4096 && m > 1; p += 2) {
        while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
            mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
            primes.emplace_back(p);
        }
    }
    factor_into(m, primes);
    std::sort(primes.begin(), primes.end());
    std::vector<std::pair<Int, unsigned long>> out;
    for (auto const& p : primes) {
        if (!out.empty() && out.back().first == p) ++out.back().second;
        else out.emplace_back(p, 1);
    }
    return out;
}

std::vector<Int> positive_divisors(Int const& n)
{
    std::vector<Int> divs{Int(1)};
    for (auto const& [p, e] : factor(n)) {
        std::size_t const base = divs.size();
        Int pk = 1;
        for (unsigned long k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t j = 0; j < base; ++j) divs.push_back(divs[j] * pk);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

std::vector<Int> square_divisor_roots(Int const& n)
{
    std::vector<Int> roots{Int(1)};
    for (auto const& [p, e] : factor(n)) {
        std::size_t const base = roots.size();
        Int pk = 1;
        for (unsigned long k = 1; 2 * k <= e; ++k) {
            pk *= p;
            for (std::size_t j = 0; j < base; ++j) roots.push_back(roots[j] * pk);
        }
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

std::string str(Triple const& v)
{
    return "(" + v[0].get_str() + "," + v[1].get_str() + "," + v[2].get_str() + ")";
}

}  // namespace minindex

namespace minindex {

Int determinant(std::vector<std::vector<Int>> m)
{
    std::size_t const n = m.size();
    if (n == 0) return 1;
    int sgn_ = 1;
    Int prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t r = k + 1;
            while (r < n && m[r][k] == 0) ++r;
            if (r == n) return 0;
            std::swap(m[k], m[r]);
            sgn_ = -sgn_;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Int v = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                m[i][j] = v;
            }
        }
        prev = m[k][k];
    }
    return sgn_ * m[n - 1][n - 1];
}

}  // namespace minindex
