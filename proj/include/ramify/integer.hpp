#pragma once

// Exact integer helpers on top of GMP: word-size modular arithmetic,
// primality, valuations and integer factorization.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace ramify {

using Integer = mpz_class;
using Rational = mpq_class;

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

inline std::uint64_t addmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    std::uint64_t s = a + b;
    return (s >= m || s < a) ? s - m : s;
}

inline std::uint64_t submod(std::uint64_t a, std::uint64_t b, std::uint64_t m) { return a >= b ? a - b : a + (m - b); }

inline std::uint64_t powmod(std::uint64_t base, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    base %= m;
    while (e) {
        if (e & 1) r = mulmod(r, base, m);
        base = mulmod(base, base, m);
        e >>= 1;
    }
    return r;
}

// Inverse modulo a prime.
inline std::uint64_t invmod(std::uint64_t a, std::uint64_t p) {
    if (a % p == 0) throw invalid_argument("invmod: zero has no inverse");
    return powmod(a, p - 2, p);
}

// Deterministic Miller-Rabin for 64-bit inputs.
inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % q == 0) return n == q;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

inline bool is_prime(const Integer& n) {
    if (n < 2) return false;
    if (n.fits_ulong_p()) return is_prime(static_cast<std::uint64_t>(n.get_ui()));
    return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

inline std::vector<std::uint64_t> primes_up_to(std::uint64_t bound) {
    std::vector<std::uint64_t> out;
    if (bound < 2) return out;
    std::vector<bool> sieve(bound + 1, true);
    for (std::uint64_t i = 2; i <= bound; ++i) {
        if (!sieve[i]) continue;
        out.push_back(i);
        for (std::uint64_t j = i * i; j <= bound; j += i) sieve[j] = false;
    }
    return out;
}

inline std::uint64_t to_u64(const Integer& a) {
    if (a < 0 || !a.fits_ulong_p()) throw invalid_argument("integer does not fit in 64 bits: " + a.get_str());
    return a.get_ui();
}

// a mod m in [0, m).
inline std::uint64_t reduce(const Integer& a, std::uint64_t m) {
    Integer r;
    mpz_fdiv_r_ui(r.get_mpz_t(), a.get_mpz_t(), m);
    return r.get_ui();
}

inline Integer ipow(const Integer& base, unsigned long e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

// v_p(a) for nonzero a; strips the factor from `a` when `rest` is given.
inline int valuation(const Integer& a, const Integer& p, Integer* rest = nullptr) {
    if (a == 0) throw invalid_argument("valuation of zero");
    Integer r;
    auto v = mpz_remove(r.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t());
    if (rest) *rest = r;
    return static_cast<int>(v);
}

// num / den in lowest terms. GMP rational arithmetic requires canonical operands.
inline Rational make_rational(const Integer& num, const Integer& den) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Integer gcd(const Integer& a, const Integer& b) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline bool divides(const Integer& d, const Integer& a) { return mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t()) != 0; }

namespace detail {

inline Integer pollard_brent(const Integer& n, std::mt19937_64& rng) {
    if (mpz_even_p(n.get_mpz_t())) return 2;
    std::uniform_int_distribution<unsigned long> dist(1, 1UL << 40);
    while (true) {
        Integer y = Integer(dist(rng)) % n, c = Integer(dist(rng)) % n, g = 1, r = 1, q = 1, x, ys;
        const unsigned long m = 128;
        while (g == 1) {
            x = y;
            for (Integer i = 0; i < r; ++i) y = (y * y + c) % n;
            Integer k = 0;
            while (k < r && g == 1) {
                ys = y;
                for (Integer i = 0; i < m && i < r - k; ++i) {
                    y = (y * y + c) % n;
                    Integer diff = x - y;
                    q = (q * abs(diff)) % n;
                }
                g = gcd(q, n);
                k += m;
            }
            r *= 2;
        }
        if (g == n) {
            do {
                ys = (ys * ys + c) % n;
                g = gcd(abs(Integer(x - ys)), n);
            } while (g == 1);
        }
        if (g != n) return g;
    }
}

inline void factor_into(const Integer& n, std::map<Integer, int>& out, std::mt19937_64& rng) {
    if (n == 1) return;
    if (is_prime(n)) {
        ++out[n];
        return;
    }
    Integer d = pollard_brent(n, rng);
    factor_into(d, out, rng);
    factor_into(n / d, out, rng);
}

}  // namespace detail

// Prime factorization of |n|, n != 0, as (prime, exponent) ascending.
inline std::vector<std::pair<Integer, int>> factor_integer(const Integer& n) {
    if (n == 0) throw invalid_argument("factor_integer: zero");
    Integer m = abs(n);
    std::map<Integer, int> found;
    for (unsigned long q = 2; q < 10000; q += (q == 2 ? 1 : 2)) {
        if (Integer(q) * q > m) break;
        while (mpz_divisible_ui_p(m.get_mpz_t(), q)) {
            ++found[Integer(q)];
            m /= q;
        }
    }
    std::mt19937_64 rng(0);
    detail::factor_into(m, found, rng);
    return {found.begin(), found.end()};
}

}  // namespace ramify
