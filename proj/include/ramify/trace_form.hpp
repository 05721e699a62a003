#pragma once

// The integral trace form x -> tr(x^2) on O_L: its Gram matrix, the local
// Jordan decomposition predicted from (alpha, beta, nu, a_p) at tame primes,
// and the comparison against the decomposition of the actual Gram matrix.

#include <optional>
#include <string>

#include "errors.hpp"
#include "int_matrix.hpp"
#include "invariants.hpp"
#include "number_field.hpp"
#include "padic_form.hpp"
#include "splitting.hpp"

namespace ramify {

inline const IntMatrix& trace_gram(const NumberField& L) { return L.trace_gram(); }

// Trace form of a tame local extension of Q_p with invariants e, f. `nu_tag`
// is the unit class nu_K (only its square class matters, and only for even e).
inline PAdicForm local_trace_shape(int e, int f, const Place& p, const Integer& nu_tag = 1) {
    if (p.is_infinite()) throw invalid_argument("local_trace_shape: finite prime required");
    if (e < 1 || f < 1) throw invalid_argument("local_trace_shape: e and f must be positive");
    const std::uint64_t q = p.prime();
    if (e % static_cast<long>(q) == 0) throw wild_ramification();
    const Integer up = u(p);
    PAdicForm out(p);
    if (q == 2) {
        if (f == 1) {
            out.add_diagonal(Rational(e));
        } else {
            for (int i = 0; i < f - 2; ++i) out.add_diagonal(Rational(e));
            out.add_diagonal(Rational(Integer(e) * ((f - 1) % 2 ? -1 : 1)));
            out.add_diagonal(Rational(Integer(e) * ipow(Integer(-up), f - 1)));
        }
        out.add_u(1, f * (e - 1) / 2);
        return out;
    }
    const Integer head = ipow(Integer(e), f) * ipow(up, f - 1);
    for (int i = 0; i < f - 1; ++i) out.add_diagonal(1);
    out.add_diagonal(Rational(head));
    const int tail_dim = f * (e - 1);
    if (tail_dim > 0) {
        const Integer pz(static_cast<unsigned long>(q));
        Integer last = ipow(head * nu_tag, e - 1);
        if ((static_cast<long>(f) * ((e - 1) / 2)) % 2) last = -last;
        for (int i = 0; i < tail_dim - 1; ++i) out.add_diagonal(Rational(pz));
        out.add_diagonal(Rational(pz * last));
    }
    return out;
}

namespace detail {

// a_p plus the scaled part, from the global invariants.
inline PAdicForm predicted_global(const NumberField& L, const SplittingType& s) {
    const Place& p = s.p;
    PAdicForm out(p);
    for (const auto& d : a_form(s).diagonal()) out.add_diagonal(Rational(d));
    const int rest = L.degree() - s.f_sum();
    if (p.prime() == 2) {
        if (rest % 2) throw internal_consistency("predicted_local_trace: n - f_2 is odd at a tame prime");
        out.add_u(1, rest / 2);
        return out;
    }
    if (rest > 0) {
        const Integer pz(static_cast<unsigned long>(p.prime()));
        for (int i = 0; i < rest - 1; ++i) out.add_diagonal(Rational(pz));
        out.add_diagonal(Rational(pz * beta(s) * nu(L, s)));
    }
    return out;
}

// Orthogonal sum of the local trace forms over the primes above p.
inline PAdicForm predicted_local_sum(const NumberField& L, const SplittingType& s) {
    const Place& p = s.p;
    PAdicForm out(p);
    // Only the product of the nu_i over pairs with even e is determined; carry it on one such pair.
    Integer carried = 1;
    bool placed = false;
    if (p.prime() != 2) {
        carried = nu(L, s);
        bool any_even = false;
        for (auto [e, f] : s.pairs) any_even |= e % 2 == 0;
        if (!any_even && carried != 1)
            throw internal_consistency("predicted_local_trace: nu is nontrivial but every e is odd");
    }
    for (auto [e, f] : s.pairs) {
        Integer tag = 1;
        if (!placed && e % 2 == 0) {
            tag = carried;
            placed = true;
        }
        out = out + local_trace_shape(e, f, p, tag);
    }
    return out;
}

}  // namespace detail

inline PAdicForm predicted_local_trace(const NumberField& L, const Place& p) {
    if (p.is_infinite()) throw invalid_argument("predicted_local_trace: finite prime required");
    const SplittingType s = split_prime(L, p);
    if (s.wild()) throw wild_ramification();
    PAdicForm global = detail::predicted_global(L, s);
    const PAdicForm local = detail::predicted_local_sum(L, s);
    if (isometric_zp(global, local) != true)
        throw internal_consistency("predicted_local_trace: global and local assemblies disagree");
    if (p.prime() != 2) {
        PAdicForm short_a(p);
        for (int i = 0; i < s.f_sum() - 1; ++i) short_a.add_diagonal(1);
        short_a.add_diagonal(Rational(alpha(s)));
        PAdicForm a(p);
        for (const auto& d : a_form(s).diagonal()) a.add_diagonal(Rational(d));
        if (!(a == short_a)) throw internal_consistency("predicted_local_trace: a_p is not <1,...,1,alpha_p>");
    }
    return global;
}

inline PAdicForm oracle_local_trace(const NumberField& L, const Place& p) { return jordan_decompose(L.trace_gram(), p); }

struct TraceVerdict {
    Place p;
    PAdicForm predicted;
    PAdicForm oracle;
    std::optional<bool> match;  // nullopt: isometry undecided
    std::string notes;
};

inline TraceVerdict verify_local_trace(const NumberField& L, const Place& p) {
    PAdicForm predicted = predicted_local_trace(L, p);
    PAdicForm oracle = oracle_local_trace(L, p);
    const auto match = isometric_zp(predicted, oracle);
    std::string notes;
    if (!match) notes = "2-adic isometry undecided outside scales {0, 1}";
    return {p, std::move(predicted), std::move(oracle), match, notes};
}

// Equality of the Z_p-genus of the two trace forms via the Legendre symbols
// of alpha_p, under the hypotheses of equal degree, odd tame p, and equal
// discriminant classes.
inline bool trace_genus_equal(const NumberField& K, const NumberField& L, const Place& p) {
    if (K.degree() != L.degree()) throw invalid_argument("trace_genus_equal: fields have different degrees");
    if (p.is_infinite() || p.prime() == 2) throw invalid_argument("trace_genus_equal: p must be an odd prime");
    const SplittingType sk = split_prime(K, p), sl = split_prime(L, p);
    if (sk.wild() || sl.wild()) throw invalid_argument("trace_genus_equal: p is wildly ramified in one of the fields");
    int vk, vl;
    Integer uk, ul;
    detail::split_unit(Rational(K.disc()), p.prime(), vk, uk);
    detail::split_unit(Rational(L.disc()), p.prime(), vl, ul);
    if (vk != vl) throw invalid_argument("trace_genus_equal: discriminants have different p-valuations");
    if (legendre(uk, p.value()) != legendre(ul, p.value()))
        throw invalid_argument("trace_genus_equal: discriminants differ modulo unit squares");
    return legendre(alpha(sk), p.value()) == legendre(alpha(sl), p.value());
}

}  // namespace ramify
