#pragma once

// Factorization over F_p: squarefree decomposition, distinct-degree
// splitting, then Cantor-Zassenhaus (odd p) or Berlekamp (p = 2).

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "fp_linalg.hpp"
#include "mod_poly.hpp"

namespace ramify {

using ModFactorization = std::vector<std::pair<ModPoly, int>>;

namespace detail {

// g(x) with g(x)^p = f(x), for f with zero derivative.
inline ModPoly pth_root(const ModPoly& f) {
    const std::uint64_t p = f.modulus();
    std::vector<std::uint64_t> v;
    for (int i = 0; i <= f.degree(); i += static_cast<int>(p)) v.push_back(f.coeff(i));
    return ModPoly(ModPoly::unchecked, p, std::move(v));
}

inline void squarefree_into(const ModPoly& f, int scale, ModFactorization& out) {
    ModPoly c = gcd(f, f.derivative());
    ModPoly w = f / c;
    int i = 1;
    while (w.degree() > 0) {
        ModPoly y = gcd(w, c);
        ModPoly z = w / y;
        if (z.degree() > 0) out.emplace_back(z.monic(), i * scale);
        ++i;
        w = y;
        c = c / y;
    }
    if (c.degree() > 0) squarefree_into(pth_root(c.monic()), scale * static_cast<int>(f.modulus()), out);
}

// Products of all irreducible factors of each degree, for squarefree monic f.
inline std::vector<std::pair<ModPoly, int>> distinct_degree(ModPoly f) {
    const std::uint64_t p = f.modulus();
    std::vector<std::pair<ModPoly, int>> out;
    const ModPoly x = ModPoly::x(p);
    ModPoly h = x % f;
    const Integer pz(static_cast<unsigned long>(p));
    for (int d = 1; 2 * d <= f.degree(); ++d) {
        h = powmod(h, pz, f);
        ModPoly g = gcd(h - x, f);
        if (g.degree() > 0) {
            out.emplace_back(g, d);
            f = f / g;
            h = h % f;
        }
    }
    if (f.degree() > 0) out.emplace_back(f.monic(), f.degree());
    return out;
}

// Splits f, a product of distinct irreducibles of degree d, for odd p.
inline void cantor_zassenhaus(const ModPoly& f, int d, std::mt19937_64& rng, std::vector<ModPoly>& out) {
    if (f.degree() == d) {
        out.push_back(f.monic());
        return;
    }
    const std::uint64_t p = f.modulus();
    Integer e = (ipow(Integer(static_cast<unsigned long>(p)), d) - 1) / 2;
    std::uniform_int_distribution<std::uint64_t> coeff(0, p - 1);
    while (true) {
        std::vector<std::uint64_t> a(f.degree());
        for (auto& c : a) c = coeff(rng);
        ModPoly r(ModPoly::unchecked, p, std::move(a));
        if (r.degree() < 1) continue;
        ModPoly g = gcd(powmod(r, e, f) - ModPoly::constant(p, 1), f);
        if (g.degree() > 0 && g.degree() < f.degree()) {
            cantor_zassenhaus(g, d, rng, out);
            cantor_zassenhaus(f / g, d, rng, out);
            return;
        }
    }
}

// Berlekamp splitting of a squarefree monic f.
inline std::vector<ModPoly> berlekamp(const ModPoly& f) {
    const std::uint64_t p = f.modulus();
    const int n = f.degree();
    if (n <= 1) return {f};
    // Row i: x^(i p) mod f, minus the identity.
    fp::Matrix q(n, fp::Row(n, 0));
    const ModPoly xp = powmod(ModPoly::x(p), Integer(static_cast<unsigned long>(p)), f);
    ModPoly cur = ModPoly::constant(p, 1);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) q[i][j] = cur.coeff(j);
        q[i][i] = submod(q[i][i], 1, p);
        cur = (cur * xp) % f;
    }
    fp::Matrix kernel = fp::left_kernel(q, p);
    const std::size_t k = kernel.size();
    std::vector<ModPoly> factors{f};
    for (const auto& vec : kernel) {
        if (factors.size() == k) break;
        ModPoly v(ModPoly::unchecked, p, vec);
        if (v.degree() < 1) continue;
        std::vector<ModPoly> next;
        for (const auto& g : factors) {
            ModPoly rest = g;
            for (std::uint64_t s = 0; s < p && rest.degree() > 0; ++s) {
                ModPoly h = gcd(v - ModPoly::constant(p, s), rest);
                if (h.degree() > 0 && h.degree() < rest.degree()) {
                    next.push_back(h);
                    rest = rest / h;
                } else if (h.degree() == rest.degree()) {
                    break;
                }
            }
            if (rest.degree() > 0) next.push_back(rest.monic());
        }
        factors = std::move(next);
    }
    return factors;
}

}  // namespace detail

// Seed used by factor_mod_p when none is given. The factorization itself
// does not depend on it, only the random splitting steps do.
inline std::uint64_t& default_factor_seed() {
    static std::uint64_t seed = 0;
    return seed;
}

// Irreducible factorization of nonzero f over F_p. Factors are monic, pairwise
// distinct, sorted by (degree, coefficients); the leading coefficient of f is
// the unit left over.
inline ModFactorization factor_mod_p(const ModPoly& f, std::optional<std::uint64_t> seed = std::nullopt) {
    if (!is_prime(f.modulus())) throw invalid_argument("factor_mod_p: composite modulus");
    if (f.is_zero()) throw invalid_argument("factor_mod_p: zero polynomial");
    ModFactorization squarefree, out;
    if (f.degree() == 0) return out;
    detail::squarefree_into(f.monic(), 1, squarefree);
    std::mt19937_64 rng(seed.value_or(default_factor_seed()));
    for (const auto& [part, mult] : squarefree) {
        for (const auto& [block, d] : detail::distinct_degree(part)) {
            std::vector<ModPoly> irreducibles;
            if (f.modulus() == 2)
                irreducibles = detail::berlekamp(block);
            else
                detail::cantor_zassenhaus(block, d, rng, irreducibles);
            for (auto& g : irreducibles) out.emplace_back(std::move(g), mult);
        }
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

inline bool is_irreducible_mod_p(const ModPoly& f) {
    if (f.degree() < 1) return false;
    auto fac = factor_mod_p(f);
    return fac.size() == 1 && fac[0].second == 1;
}

}  // namespace ramify
