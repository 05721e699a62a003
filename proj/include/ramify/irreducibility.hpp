#pragma once

// Irreducibility of monic integer polynomials over Q: a modular screen,
// then Hensel lifting and factor recombination (Zassenhaus) under a
// Mignotte coefficient bound.

#include <cstdint>
#include <optional>
#include <vector>

#include "factor_mod_p.hpp"
#include "int_matrix.hpp"
#include "int_poly.hpp"
#include "mod_poly.hpp"

namespace ramify {

// disc(f) = det[p_{i+j}] for monic f, with p_k the power sums of the roots.
inline Integer poly_discriminant(const IntPoly& f) {
    const int n = f.degree();
    if (n < 1) throw invalid_argument("poly_discriminant: degree must be at least 1");
    auto p = power_sums(f, 2 * n - 1);
    IntMatrix h(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) h(i, j) = p[i + j];
    return determinant(h);
}

enum class Irreducibility { irreducible, reducible, unresolved };

struct IrreducibilityReport {
    Irreducibility verdict;
    std::optional<IntPoly> factor;  // a proper monic factor when reducible
    std::uint64_t witness_prime = 0;  // prime with f irreducible mod it, if found
};

namespace detail {

struct ModIntPoly {
    // Coefficients reduced into [0, m).
    static IntPoly reduce(const IntPoly& f, const Integer& m) {
        std::vector<Integer> v;
        for (const auto& c : f.coeffs()) {
            Integer r;
            mpz_fdiv_r(r.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
            v.push_back(r);
        }
        return IntPoly(std::move(v));
    }
    static IntPoly symmetric(const IntPoly& f, const Integer& m) {
        std::vector<Integer> v;
        const Integer half = m / 2;
        const IntPoly r = reduce(f, m);
        for (const auto& c : r.coeffs()) v.push_back(c > half ? c - m : c);
        return IntPoly(std::move(v));
    }
};

inline IntPoly lift_int(const ModPoly& g) {
    std::vector<Integer> v;
    for (auto c : g.coeffs()) v.emplace_back(static_cast<unsigned long>(c));
    return IntPoly(std::move(v));
}

// Lifts f = g*h mod q to f = G*H mod q^k with G, H monic.
inline std::pair<IntPoly, IntPoly> hensel_pair(const IntPoly& f, const ModPoly& g, const ModPoly& h, int k) {
    const std::uint64_t q = g.modulus();
    auto [one, s, t] = xgcd(g, h);
    if (!one.is_one()) throw internal_consistency("hensel_pair: factors are not coprime mod q");
    IntPoly G = lift_int(g), H = lift_int(h);
    Integer qk(static_cast<unsigned long>(q));
    for (int step = 1; step < k; ++step) {
        IntPoly e = f - G * H;
        std::vector<Integer> ev;
        for (const auto& c : e.coeffs()) {
            if (!divides(qk, c)) throw internal_consistency("hensel_pair: lifting invariant broken");
            ev.push_back(c / qk);
        }
        ModPoly ebar = ModPoly::from_int_poly(IntPoly(std::move(ev)), q);
        auto [quo, dg] = divmod(t * ebar, g);
        ModPoly dh = s * ebar + quo * h;
        G = G + qk * lift_int(dg);
        H = H + qk * lift_int(dh);
        qk *= static_cast<unsigned long>(q);
    }
    return {ModIntPoly::reduce(G, qk), ModIntPoly::reduce(H, qk)};
}

inline std::vector<IntPoly> hensel_lift(const IntPoly& f, const std::vector<ModPoly>& factors, int k) {
    if (factors.size() == 1) return {ModIntPoly::reduce(f, ipow(Integer(static_cast<unsigned long>(factors[0].modulus())), k))};
    ModPoly rest = factors[1];
    for (std::size_t i = 2; i < factors.size(); ++i) rest = rest * factors[i];
    auto [G, H] = hensel_pair(f, factors[0], rest, k);
    std::vector<IntPoly> out{G};
    auto tail = hensel_lift(H, std::vector<ModPoly>(factors.begin() + 1, factors.end()), k);
    out.insert(out.end(), tail.begin(), tail.end());
    return out;
}

inline bool divides_exactly(const IntPoly& g, const IntPoly& f) { return divmod_monic(f, g).second.is_zero(); }

}  // namespace detail

// Decides irreducibility of a monic f over Q. `max_subsets` caps the
// recombination search; exceeding it yields `unresolved`.
inline IrreducibilityReport check_irreducible(const IntPoly& f, std::size_t max_subsets = 1u << 16) {
    if (!f.is_monic()) throw invalid_argument("check_irreducible: polynomial must be monic");
    const int n = f.degree();
    if (n <= 1) return {Irreducibility::irreducible, std::nullopt, 0};
    if (f.coeff(0) == 0) return {Irreducibility::reducible, IntPoly{0, 1}, 0};
    const Integer disc = poly_discriminant(f);
    if (disc == 0) {
        // Repeated factor: gcd(f, f') over Q is a proper factor.
        return {Irreducibility::reducible, std::nullopt, 0};
    }
    std::vector<ModPoly> best;
    std::uint64_t best_q = 0;
    int screened = 0;
    for (std::uint64_t q = 2; screened < 25; ++q) {
        if (!is_prime(q) || divides(Integer(static_cast<unsigned long>(q)), disc)) continue;
        ++screened;
        auto fac = factor_mod_p(ModPoly::from_int_poly(f, q));
        if (fac.size() == 1) return {Irreducibility::irreducible, std::nullopt, q};
        if (best.empty() || fac.size() < best.size()) {
            best.clear();
            for (auto& [g, m] : fac) best.push_back(g);
            best_q = q;
        }
    }
    // Factor coefficients are bounded by 2^n * ||f||_2.
    Integer norm2 = 0;
    for (const auto& c : f.coeffs()) norm2 += c * c;
    Integer bound = (sqrt(norm2) + 1) * ipow(Integer(2), n);
    Integer modulus(static_cast<unsigned long>(best_q));
    int k = 1;
    while (modulus <= 2 * bound) {
        modulus *= static_cast<unsigned long>(best_q);
        ++k;
    }
    auto lifted = detail::hensel_lift(f, best, k);
    const std::size_t r = lifted.size();
    std::size_t tried = 0;
    for (std::size_t mask = 1; mask < (std::size_t{1} << r); ++mask) {
        const auto size = static_cast<std::size_t>(__builtin_popcountll(mask));
        if (2 * size > r) continue;
        if (++tried > max_subsets) return {Irreducibility::unresolved, std::nullopt, 0};
        IntPoly g{1};
        for (std::size_t i = 0; i < r; ++i)
            if (mask >> i & 1) g = detail::ModIntPoly::reduce(g * lifted[i], modulus);
        g = detail::ModIntPoly::symmetric(g, modulus);
        if (g.coeff(0) == 0 || !divides(g.coeff(0), f.coeff(0))) continue;
        if (detail::divides_exactly(g, f)) return {Irreducibility::reducible, g, 0};
    }
    return {Irreducibility::irreducible, std::nullopt, 0};
}

}  // namespace ramify
