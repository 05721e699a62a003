#pragma once

// Comparison of fields through alpha_p over all primes up to a bound.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"
#include "invariants.hpp"
#include "number_field.hpp"
#include "splitting.hpp"

namespace ramify {

struct AlphaFingerprint {
    std::uint64_t bound = 0;
    std::map<std::int64_t, Integer> alpha;  // keyed by p, with -1 first
};

inline AlphaFingerprint alpha_fingerprint(const NumberField& L, std::uint64_t bound) {
    if (bound < 2) throw invalid_argument("alpha_fingerprint: bound must be at least 2");
    AlphaFingerprint fp{bound, {}};
    fp.alpha.emplace(-1, alpha(L, Place::infinite()));
    for (auto p : primes_up_to(bound)) fp.alpha.emplace(static_cast<std::int64_t>(p), alpha(L, Place(static_cast<std::int64_t>(p))));
    return fp;
}

struct AlphaDifference {
    std::int64_t p;
    Integer alpha_k, alpha_l;
    bool ramified;  // in at least one of the fields
    int g_k = 0, g_l = 0;
};

struct ComparisonReport {
    std::uint64_t bound = 0;
    bool degree_mismatch = false;
    int degree_k = 0, degree_l = 0;
    std::vector<AlphaDifference> differs;
    std::string verdict;  // "consistent", "not equivalent" or "degree mismatch"
};

// Primes p <= bound with alpha_p^K != alpha_p^L. A difference at a prime
// unramified in both fields rules out arithmetic equivalence; differences at
// ramified primes do not.
inline ComparisonReport compare_fields(const NumberField& K, const NumberField& L, std::uint64_t bound = 1000) {
    ComparisonReport r;
    r.bound = bound;
    r.degree_k = K.degree();
    r.degree_l = L.degree();
    if (K.degree() != L.degree()) {
        r.degree_mismatch = true;
        r.verdict = "degree mismatch";
        return r;
    }
    bool unramified_difference = false;
    for (auto q : primes_up_to(bound)) {
        const Place p(static_cast<std::int64_t>(q));
        const SplittingType sk = split_prime(K, p), sl = split_prime(L, p);
        const Integer ak = alpha(sk), al = alpha(sl);
        const bool ramified = !sk.unramified() || !sl.unramified();
        if (!ramified && (ak == al) != (sk.g() == sl.g()))
            throw internal_consistency("compare_fields: alpha equality and g equality disagree at an unramified prime");
        if (ak == al) continue;
        r.differs.push_back({p.value(), ak, al, ramified, sk.g(), sl.g()});
        unramified_difference |= !ramified;
    }
    r.verdict = unramified_difference ? "not equivalent" : "consistent";
    return r;
}

}  // namespace ramify
