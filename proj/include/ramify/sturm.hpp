#pragma once

// Exact real root counting with Sturm sequences over the rationals.

#include <vector>

#include "int_poly.hpp"
#include "integer.hpp"

namespace ramify {

namespace detail {

using RatPoly = std::vector<Rational>;  // constant term first, trimmed

inline void trim(RatPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline RatPoly rat_remainder(RatPoly a, const RatPoly& b) {
    const int db = static_cast<int>(b.size()) - 1;
    for (int i = static_cast<int>(a.size()) - 1; i >= db; --i) {
        if (a[i] == 0) continue;
        Rational t = a[i] / b.back();
        for (int j = 0; j <= db; ++j) a[i - db + j] -= t * b[j];
    }
    trim(a);
    return a;
}

inline int sign_changes(const std::vector<int>& signs) {
    int changes = 0, last = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

}  // namespace detail

// Sturm chain f, f', -rem(f, f'), ... of a nonzero polynomial.
inline std::vector<std::vector<Rational>> sturm_sequence(const IntPoly& f) {
    std::vector<detail::RatPoly> chain;
    detail::RatPoly a(f.coeffs().begin(), f.coeffs().end()), b;
    const IntPoly df = f.derivative();
    for (const auto& c : df.coeffs()) b.emplace_back(c);
    chain.push_back(a);
    if (b.empty()) return chain;
    chain.push_back(b);
    while (true) {
        detail::RatPoly r = detail::rat_remainder(chain[chain.size() - 2], chain.back());
        if (r.empty()) break;
        for (auto& x : r) x = -x;
        chain.push_back(std::move(r));
    }
    return chain;
}

// Number of distinct real roots of f.
inline int count_real_roots(const IntPoly& f) {
    if (f.degree() < 1) return 0;
    auto chain = sturm_sequence(f);
    std::vector<int> at_pos, at_neg;
    for (const auto& p : chain) {
        const int lead = sgn(p.back());
        const int deg = static_cast<int>(p.size()) - 1;
        at_pos.push_back(lead);
        at_neg.push_back(deg % 2 == 0 ? lead : -lead);
    }
    return detail::sign_changes(at_neg) - detail::sign_changes(at_pos);
}

}  // namespace ramify
