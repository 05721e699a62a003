#pragma once

// Ramification invariants alpha_p, beta_p, nu_p of a number field and the
// unimodular form a_p built from the splitting of p.

#include <optional>
#include <vector>

#include "errors.hpp"
#include "integer.hpp"
#include "number_field.hpp"
#include "place.hpp"
#include "residue.hpp"
#include "splitting.hpp"

namespace ramify {

inline Integer u(const Place& p) { return nonresidue_unit(p); }

// alpha = (prod e_i^f_i) u_p^(f_p - g_p)
inline Integer alpha(const SplittingType& s) {
    Integer a = 1;
    for (auto [e, f] : s.pairs) a *= ipow(Integer(e), f);
    const int exp = s.f_sum() - s.g();
    if (exp < 0) throw internal_consistency("alpha: negative exponent of u_p");
    return a * ipow(u(s.p), exp);
}

// beta = (-1)^(sum floor((e_i-1)/2) f_i) (prod e_i^(f_i (e_i-1))) u_p^(n - f_p - e_p + g_p)
inline Integer beta(const SplittingType& s) {
    Integer b = 1;
    long sign_exp = 0;
    for (auto [e, f] : s.pairs) {
        b *= ipow(Integer(e), static_cast<unsigned long>(f) * (e - 1));
        sign_exp += static_cast<long>((e - 1) / 2) * f;
    }
    const int exp = s.degree() - s.f_sum() - s.e_sum() + s.g();
    if (exp < 0) throw internal_consistency("beta: negative exponent of u_p");
    b *= ipow(u(s.p), exp);
    return sign_exp % 2 ? Integer(-b) : b;
}

inline Integer alpha(const NumberField& L, const Place& p) { return alpha(split_prime(L, p)); }
inline Integer beta(const NumberField& L, const Place& p) { return beta(split_prime(L, p)); }

// Square-class tag 1 or u_p with disc(L) = p^(n - f_p) alpha beta nu modulo unit squares.
inline long nu(const NumberField& L, const SplittingType& s) {
    const Place& p = s.p;
    if (p.is_infinite() || p.prime() == 2) throw undefined_invariant("nu is defined only at odd finite primes");
    if (s.wild()) throw undefined_invariant("nu is undefined at a wildly ramified prime");
    const Integer pz(static_cast<unsigned long>(p.prime()));
    const Rational q = make_rational(L.disc(), ipow(pz, L.degree() - s.f_sum()) * alpha(s) * beta(s));
    int v;
    Integer unit;
    detail::split_unit(q, p.prime(), v, unit);
    if (v != 0) throw internal_consistency("nu: v_p(disc) differs from n - f_p at a tame prime");
    return legendre(unit, p.value()) == 1 ? 1L : u(p).get_si();
}

inline long nu(const NumberField& L, const Place& p) { return nu(L, split_prime(L, p)); }

// The diagonal form a_p, one block per splitting pair.
struct AForm {
    Place p;
    std::vector<std::vector<Integer>> blocks;

    std::vector<Integer> diagonal() const {
        std::vector<Integer> d;
        for (const auto& b : blocks) d.insert(d.end(), b.begin(), b.end());
        return d;
    }
    int dim() const { return static_cast<int>(diagonal().size()); }
    Integer det() const {
        Integer d = 1;
        for (const auto& x : diagonal()) d *= x;
        return d;
    }
    // "<1> + <-1,-5>"
    std::string str() const {
        std::string out;
        for (std::size_t i = 0; i < blocks.size(); ++i) {
            if (i) out += " + ";
            out += "<";
            for (std::size_t j = 0; j < blocks[i].size(); ++j) out += (j ? "," : "") + blocks[i][j].get_str();
            out += ">";
        }
        return out;
    }
};

// Per pair (e, f): <e> when f = 1; otherwise f - 2 copies of e followed by
// e(-1)^(f-1) and e(-u_p)^(f-1).
inline AForm a_form(const SplittingType& s) {
    AForm out{s.p, {}};
    const Integer up = u(s.p);
    for (auto [e, f] : s.pairs) {
        std::vector<Integer> block;
        if (f == 1) {
            block.emplace_back(e);
        } else {
            block.assign(f - 2, Integer(e));
            block.push_back(Integer(e) * ((f - 1) % 2 ? -1 : 1));
            block.push_back(Integer(e) * ipow(Integer(-up), f - 1));
        }
        out.blocks.push_back(std::move(block));
    }
    if (out.det() != alpha(s)) throw internal_consistency("a_form: determinant differs from alpha");
    return out;
}

inline AForm a_form(const NumberField& L, const Place& p) { return a_form(split_prime(L, p)); }

struct RamificationFlags {
    bool unramified = false;
    bool totally_split = false;
    bool wild = false;
    friend bool operator==(const RamificationFlags&, const RamificationFlags&) = default;
};

// Flags from the splitting data, checked against beta = 1, alpha = 1 and
// p | alpha. The last criterion has no meaning at the infinite place.
inline RamificationFlags classify(const SplittingType& s) {
    RamificationFlags fl{s.unramified(), s.totally_split(), s.wild()};
    const Integer a = alpha(s), b = beta(s);
    if (fl.unramified != (b == 1)) throw internal_consistency("classify: beta = 1 disagrees with the splitting");
    if (fl.totally_split != (a == 1)) throw internal_consistency("classify: alpha = 1 disagrees with the splitting");
    if (s.p.is_finite() && fl.wild != divides(Integer(static_cast<unsigned long>(s.p.prime())), a))
        throw internal_consistency("classify: p | alpha disagrees with the splitting");
    return fl;
}

inline RamificationFlags classify(const NumberField& L, const Place& p) { return classify(split_prime(L, p)); }

struct RamificationInvariants {
    Place p;
    Integer alpha, beta;
    std::optional<long> nu;  // odd tame finite p only
    RamificationFlags flags;
    SplittingType splitting;
};

inline RamificationInvariants ramification_invariants(const NumberField& L, const Place& p) {
    SplittingType s = split_prime(L, p);
    RamificationInvariants out{p, alpha(s), beta(s), std::nullopt, classify(s), s};
    if (p.is_finite() && p.prime() != 2 && !s.wild()) out.nu = nu(L, s);
    return out;
}

}  // namespace ramify
