#pragma once

// Legendre and Hilbert symbols, p-adic valuations of rationals.

#include <cstdint>

#include "errors.hpp"
#include "integer.hpp"
#include "place.hpp"

namespace ramify {

// Legendre symbol (a / p) for an odd prime p, via quadratic reciprocity.
inline int legendre(const Integer& a, std::int64_t p) {
    if (p < 3 || !is_prime(static_cast<std::uint64_t>(p)))
        throw invalid_argument("legendre: modulus must be an odd prime, got " + std::to_string(p));
    Integer mod(static_cast<long>(p));
    return mpz_legendre(Integer(a % mod).get_mpz_t(), mod.get_mpz_t());
}

// u_p: -1 at the infinite place, 5 at 2, else the least positive non-residue mod p.
inline Integer nonresidue_unit(const Place& p) {
    if (p.is_infinite()) return Integer(-1);
    if (p.prime() == 2) return Integer(5);
    const auto q = static_cast<std::int64_t>(p.prime());
    for (long u = 2;; ++u)
        if (legendre(Integer(u), q) == -1) return Integer(u);
}

// v_p(a) for finite p; sign(a) for p = -1.
inline int valuation(const Rational& a, const Place& p) {
    if (a == 0) throw invalid_argument("valuation: zero argument");
    if (p.is_infinite()) return sgn(a);
    Integer q(static_cast<unsigned long>(p.prime()));
    return valuation(a.get_num(), q) - valuation(a.get_den(), q);
}

namespace detail {

// Write a = p^v * u with u a p-adic unit; u is an integer in the same
// square class (numerator * denominator).
inline void split_unit(const Rational& a, std::uint64_t p, int& v, Integer& u) {
    Integer q(static_cast<unsigned long>(p)), n, d;
    v = valuation(a.get_num(), q, &n) - valuation(a.get_den(), q, &d);
    u = n * d;
}

}  // namespace detail

// Hilbert symbol (a, b)_p over Q_p, with p = -1 meaning the reals.
inline int hilbert(const Rational& a, const Rational& b, const Place& p) {
    if (a == 0 || b == 0) throw invalid_argument("hilbert: zero argument");
    if (p.is_infinite()) return (a < 0 && b < 0) ? -1 : 1;
    const std::uint64_t q = p.prime();
    int alpha, beta;
    Integer u, v;
    detail::split_unit(a, q, alpha, u);
    detail::split_unit(b, q, beta, v);
    if (q == 2) {
        const long u8 = static_cast<long>(reduce(u, 8)), v8 = static_cast<long>(reduce(v, 8));
        auto eps = [](long x) { return ((x - 1) / 2) & 1; };
        auto omega = [](long x) { return ((x * x - 1) / 8) & 1; };
        long e = eps(u8) * eps(v8) + alpha * omega(v8) + beta * omega(u8);
        return (e & 1) ? -1 : 1;
    }
    const auto sp = static_cast<std::int64_t>(q);
    int s = ((static_cast<long>(alpha) * beta) & 1) && ((q - 1) / 2 & 1) ? -1 : 1;
    if (beta & 1) s *= legendre(u, sp);
    if (alpha & 1) s *= legendre(v, sp);
    return s;
}

}  // namespace ramify
