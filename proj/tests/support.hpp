#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "ramify/ramify.hpp"

namespace test_support {

// Random monic polynomial of degree in [dmin, dmax] with lower coefficients in [-c, c].
inline ramify::IntPoly random_monic(std::mt19937_64& rng, int dmin, int dmax, long c) {
    std::uniform_int_distribution<int> deg(dmin, dmax);
    std::uniform_int_distribution<long> coef(-c, c);
    const int n = deg(rng);
    std::vector<ramify::Integer> v;
    for (int i = 0; i < n; ++i) v.emplace_back(coef(rng));
    v.emplace_back(1);
    return ramify::IntPoly(std::move(v));
}

// Fields from random irreducible polynomials; reducible draws are skipped.
inline std::vector<ramify::NumberField> random_fields(std::uint64_t seed, int count, int dmin = 2, int dmax = 5, long c = 30) {
    std::mt19937_64 rng(seed);
    std::vector<ramify::NumberField> out;
    while (static_cast<int>(out.size()) < count) {
        try {
            out.emplace_back(random_monic(rng, dmin, dmax, c));
        } catch (const ramify::reducible_polynomial&) {
        }
    }
    return out;
}

inline std::vector<ramify::Place> places_up_to(std::uint64_t bound, bool with_infinite) {
    std::vector<ramify::Place> out;
    if (with_infinite) out.push_back(ramify::Place::infinite());
    for (auto p : ramify::primes_up_to(bound)) out.emplace_back(static_cast<std::int64_t>(p));
    return out;
}

inline ramify::Integer pz(const ramify::Place& p) { return ramify::Integer(static_cast<unsigned long>(p.prime())); }

// Characteristic polynomial of a square integer matrix (Faddeev-LeVerrier), low degree first.
inline std::vector<ramify::Integer> char_poly(const ramify::IntMatrix& a) {
    const std::size_t n = a.rows();
    std::vector<ramify::Integer> c(n + 1);
    c[n] = 1;
    ramify::IntMatrix m(n, n);
    for (std::size_t k = 1; k <= n; ++k) {
        ramify::IntMatrix next = a * m;
        for (std::size_t i = 0; i < n; ++i) next(i, i) += c[n - k + 1];
        m = next;
        ramify::IntMatrix am = a * m;
        ramify::Integer tr = 0;
        for (std::size_t i = 0; i < n; ++i) tr += am(i, i);
        c[n - k] = -tr / static_cast<long>(k);
    }
    return c;
}

// Is w / d (power-basis coordinates of an element of Q(theta)) an algebraic integer?
inline bool is_integral(const std::vector<ramify::Integer>& w, const ramify::Integer& d, const ramify::IntPoly& f) {
    const int n = f.degree();
    ramify::IntMatrix mul(n, n);
    std::vector<ramify::Integer> xj(n, 0);
    xj[0] = 1;
    for (int j = 0; j < n; ++j) {
        const auto col = ramify::mul_mod_poly(w, xj, f);
        for (int i = 0; i < n; ++i) mul(i, j) = col[i];
        std::vector<ramify::Integer> x(n, 0);
        if (n > 1) x[1] = 1;
        xj = ramify::mul_mod_poly(xj, x, f);
    }
    const auto c = char_poly(mul);
    for (int k = 0; k < n; ++k)
        if (!ramify::divides(ramify::ipow(d, n - k), c[k])) return false;
    return true;
}

}  // namespace test_support
