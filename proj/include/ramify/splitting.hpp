#pragma once

// Decomposition of a rational prime in the maximal order: the multiset of
// (e_i, f_i) with p O_L = prod P_i^{e_i} and f_i = [O_L/P_i : F_p].

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "factor_mod_p.hpp"
#include "fp_linalg.hpp"
#include "number_field.hpp"
#include "order.hpp"
#include "place.hpp"

namespace ramify {

struct SplittingType {
    Place p;
    std::vector<std::pair<int, int>> pairs;  // (e, f), sorted ascending
    bool unresolved_field = false;           // the field's irreducibility was not certified

    int degree() const {
        int n = 0;
        for (auto [e, f] : pairs) n += e * f;
        return n;
    }
    int g() const { return static_cast<int>(pairs.size()); }
    int e_sum() const {
        int s = 0;
        for (auto [e, f] : pairs) s += e;
        return s;
    }
    int f_sum() const {
        int s = 0;
        for (auto [e, f] : pairs) s += f;
        return s;
    }
    bool unramified() const {
        return std::all_of(pairs.begin(), pairs.end(), [](auto pr) { return pr.first == 1; });
    }
    bool totally_split() const {
        return std::all_of(pairs.begin(), pairs.end(), [](auto pr) { return pr.first == 1 && pr.second == 1; });
    }
    // Some e_i divisible by p; never true at the infinite place.
    bool wild() const {
        if (p.is_infinite()) return false;
        const auto q = static_cast<int>(p.prime());
        return std::any_of(pairs.begin(), pairs.end(), [q](auto pr) { return pr.first % q == 0; });
    }

    friend bool operator==(const SplittingType& a, const SplittingType& b) { return a.p == b.p && a.pairs == b.pairs; }
};

namespace detail {

inline IntPoly lift_canonical(const ModPoly& g) {
    std::vector<Integer> v;
    for (auto c : g.coeffs()) v.emplace_back(static_cast<unsigned long>(c));
    return IntPoly(std::move(v));
}

// Residue algebra O_L / p O_L in the integral basis coordinates.
struct ResidueAlgebra {
    std::uint64_t p;
    std::size_t n;
    std::vector<std::vector<fp::Row>> table;
    fp::Row one;

    fp::Row mul(const fp::Row& a, const fp::Row& b) const { return mul_mod_q(a, b, table, p); }

    fp::Row unit(std::size_t i) const {
        fp::Row e(n, 0);
        e[i] = 1;
        return e;
    }

    // Row-reduced basis of the span of the given vectors.
    fp::Matrix span(fp::Matrix vs) const {
        if (vs.empty()) return vs;
        fp::rref(vs, p);
        return vs;
    }

    // Span of {x * m : x in xs, m in ms}.
    fp::Matrix product_span(const fp::Matrix& xs, const fp::Matrix& ms) const {
        fp::Matrix out;
        for (const auto& x : xs)
            for (const auto& m : ms) out.push_back(mul(x, m));
        return span(std::move(out));
    }
};

inline ResidueAlgebra residue_algebra(const NumberField& L, std::uint64_t p) {
    return {p, static_cast<std::size_t>(L.degree()), reduce_table(L.mult_table(), p), unit_coords(L.maximal_order(), p)};
}

// Minimal polynomial of x over F_p inside the algebra, by linear dependence of powers.
inline ModPoly minimal_polynomial(const ResidueAlgebra& A, const fp::Row& x, const fp::Row& unit) {
    const std::uint64_t p = A.p;
    fp::Matrix powers{unit};
    while (true) {
        fp::Row next = A.mul(powers.back(), x);
        // Solve next = sum c_k powers[k]: left kernel of [powers; next].
        fp::Matrix m = powers;
        m.push_back(next);
        auto ker = fp::left_kernel(m, p);
        if (!ker.empty()) {
            const fp::Row& v = ker[0];
            const std::uint64_t lead = v.back();
            if (lead == 0) throw internal_consistency("minimal_polynomial: powers became dependent early");
            std::vector<std::uint64_t> c(v.begin(), v.end());
            return ModPoly(ModPoly::unchecked, p, std::move(c)).monic();
        }
        powers.push_back(std::move(next));
    }
}

// Primitive idempotents of A, from the Frobenius-fixed subalgebra.
inline std::vector<fp::Row> primitive_idempotents(const ResidueAlgebra& A) {
    const std::uint64_t p = A.p;
    const std::size_t n = A.n;
    const Integer pz(static_cast<unsigned long>(p));
    fp::Matrix frob_minus_id(n);
    for (std::size_t i = 0; i < n; ++i) {
        frob_minus_id[i] = pow_mod_q(A.unit(i), pz, A.table, A.one, p);
        frob_minus_id[i][i] = submod(frob_minus_id[i][i], 1, p);
    }
    const fp::Matrix fixed = fp::left_kernel(frob_minus_id, p);
    const std::size_t g = fixed.size();

    std::vector<fp::Row> idem{A.one};
    for (const auto& b : fixed) {
        if (idem.size() == g) break;
        std::vector<fp::Row> next;
        for (const auto& eps : idem) {
            const fp::Row eb = A.mul(eps, b);
            const ModPoly m = minimal_polynomial(A, eb, eps);
            if (m.degree() == 1) {
                next.push_back(eps);
                continue;
            }
            std::vector<std::uint64_t> roots;
            for (const auto& [fac, mult] : factor_mod_p(m)) {
                if (fac.degree() != 1 || mult != 1)
                    throw internal_consistency("primitive_idempotents: Frobenius-fixed element is not split semisimple");
                roots.push_back(submod(0, fac.coeff(0), p));
            }
            // Lagrange interpolation: eps * prod_{c' != c} (b - c') / (c - c').
            for (std::uint64_t c : roots) {
                fp::Row e = eps;
                std::uint64_t denom = 1;
                for (std::uint64_t c2 : roots) {
                    if (c2 == c) continue;
                    fp::Row factor = eb;
                    for (std::size_t k = 0; k < n; ++k) factor[k] = submod(factor[k], mulmod(c2, eps[k], p), p);
                    e = A.mul(e, factor);
                    denom = mulmod(denom, submod(c, c2, p), p);
                }
                const std::uint64_t inv = invmod(denom, p);
                for (auto& x : e) x = mulmod(x, inv, p);
                next.push_back(std::move(e));
            }
        }
        idem = std::move(next);
    }
    if (idem.size() != g) throw internal_consistency("primitive_idempotents: could not separate all components");
    return idem;
}

inline SplittingType split_general(const NumberField& L, const Place& place) {
    const std::uint64_t p = place.prime();
    const ResidueAlgebra A = residue_algebra(L, p);
    const fp::Matrix rad = radical_mod_q(L.mult_table(), A.one, p);
    fp::Matrix basis;
    for (std::size_t i = 0; i < A.n; ++i) basis.push_back(A.unit(i));

    SplittingType out{place, {}, L.irreducibility_unresolved()};
    for (const auto& eps : primitive_idempotents(A)) {
        const fp::Matrix local = A.product_span({eps}, basis);
        const fp::Matrix local_rad = A.product_span({eps}, rad);
        const int dim = static_cast<int>(local.size());
        const int f = dim - static_cast<int>(local_rad.size());
        if (f <= 0 || dim % f != 0) throw internal_consistency("split_prime: residue degree does not divide local dimension");
        const int e = dim / f;
        // The chain of radical powers in the local component must drop by f each step, e steps in all.
        fp::Matrix power = local;
        int steps = 0;
        while (!power.empty()) {
            fp::Matrix next = A.product_span(local_rad, power);
            if (static_cast<int>(power.size() - next.size()) != f)
                throw internal_consistency("split_prime: radical filtration is not uniform");
            power = std::move(next);
            ++steps;
        }
        if (steps != e) throw internal_consistency("split_prime: radical chain length differs from e");
        out.pairs.emplace_back(e, f);
    }
    std::sort(out.pairs.begin(), out.pairs.end());
    return out;
}

inline SplittingType split_fast(const NumberField& L, const Place& place) {
    SplittingType out{place, {}, L.irreducibility_unresolved()};
    for (const auto& [g, mult] : factor_mod_p(ModPoly::from_int_poly(L.min_poly(), place.prime())))
        out.pairs.emplace_back(mult, g.degree());
    std::sort(out.pairs.begin(), out.pairs.end());
    return out;
}

}  // namespace detail

// Dedekind criterion: p | [O_L : Z[theta]] iff gcd(F, g, h) is nontrivial mod p,
// where f = g h mod p with g the product of the distinct irreducible factors
// and F = (g h - f) / p.
inline bool dedekind_index_divides(const IntPoly& f, std::uint64_t p) {
    if (!f.is_monic()) throw invalid_argument("dedekind_index_divides: polynomial must be monic");
    const ModPoly fbar = ModPoly::from_int_poly(f, p);
    ModPoly gbar = ModPoly::constant(p, 1), hbar = ModPoly::constant(p, 1);
    for (const auto& [fac, mult] : factor_mod_p(fbar)) {
        gbar = gbar * fac;
        for (int i = 1; i < mult; ++i) hbar = hbar * fac;
    }
    const IntPoly g = detail::lift_canonical(gbar), h = detail::lift_canonical(hbar);
    const IntPoly diff = g * h - f;
    const Integer pz(static_cast<unsigned long>(p));
    std::vector<Integer> v;
    for (const auto& c : diff.coeffs()) {
        if (!divides(pz, c)) throw internal_consistency("dedekind_index_divides: g h differs from f mod p");
        v.push_back(c / pz);
    }
    const ModPoly F = ModPoly::from_int_poly(IntPoly(std::move(v)), p);
    return gcd(gcd(F, gbar), hbar).degree() > 0;
}

// Exact splitting of p. At the infinite place a real embedding counts as
// (1,1) and a complex pair as (2,1), so that alpha_{-1} = beta_{-1} = 2^s.
inline SplittingType split_prime(const NumberField& L, const Place& p) {
    SplittingType out{p, {}, L.irreducibility_unresolved()};
    if (p.is_infinite()) {
        const auto sig = L.signature();
        out.pairs.assign(sig.real, {1, 1});
        out.pairs.insert(out.pairs.end(), sig.complex, {2, 1});
        std::sort(out.pairs.begin(), out.pairs.end());
    } else if (!L.index_divisible_by(p.prime())) {
        out = detail::split_fast(L, p);
    } else {
        out = detail::split_general(L, p);
    }
    if (out.degree() != L.degree()) throw internal_consistency("split_prime: sum of e_i f_i differs from the degree");
    return out;
}

inline SplittingType split_prime(const NumberField& L, std::int64_t p) { return split_prime(L, Place(p)); }

}  // namespace ramify
