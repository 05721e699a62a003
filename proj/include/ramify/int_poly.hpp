#pragma once

#include <algorithm>
#include <initializer_list>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "integer.hpp"

namespace ramify {

// Univariate polynomial with exact integer coefficients, constant term first.
// The zero polynomial has no coefficients and degree -1.
class IntPoly {
   public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Integer> coeffs) : c_(std::move(coeffs)) { trim(); }
    IntPoly(std::initializer_list<long> coeffs) {
        for (long x : coeffs) c_.emplace_back(x);
        trim();
    }

    static IntPoly monomial(const Integer& c, int k) {
        std::vector<Integer> v(k + 1);
        v[k] = c;
        return IntPoly(std::move(v));
    }

    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }
    const std::vector<Integer>& coeffs() const noexcept { return c_; }
    Integer coeff(int i) const { return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : Integer(0); }
    const Integer& lead() const {
        if (c_.empty()) throw invalid_argument("leading coefficient of the zero polynomial");
        return c_.back();
    }

    Integer eval(const Integer& x) const {
        Integer r = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
        return r;
    }

    IntPoly derivative() const {
        std::vector<Integer> v;
        for (std::size_t i = 1; i < c_.size(); ++i) v.push_back(c_[i] * static_cast<unsigned long>(i));
        return IntPoly(std::move(v));
    }

    Integer max_norm() const {
        Integer m = 0;
        for (const auto& x : c_) m = std::max<Integer>(m, abs(x));
        return m;
    }

    friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c_ == b.c_; }

    friend IntPoly operator+(const IntPoly& a, const IntPoly& b) {
        std::vector<Integer> v(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] += b.c_[i];
        return IntPoly(std::move(v));
    }
    friend IntPoly operator-(const IntPoly& a) {
        std::vector<Integer> v(a.c_);
        for (auto& x : v) x = -x;
        return IntPoly(std::move(v));
    }
    friend IntPoly operator-(const IntPoly& a, const IntPoly& b) { return a + (-b); }
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Integer> v(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
        return IntPoly(std::move(v));
    }
    friend IntPoly operator*(const Integer& s, const IntPoly& a) {
        std::vector<Integer> v(a.c_);
        for (auto& x : v) x *= s;
        return IntPoly(std::move(v));
    }

    // Division by a monic polynomial: (quotient, remainder).
    friend std::pair<IntPoly, IntPoly> divmod_monic(const IntPoly& a, const IntPoly& m) {
        if (!m.is_monic()) throw invalid_argument("divmod_monic: divisor must be monic");
        std::vector<Integer> r(a.c_);
        const int dm = m.degree();
        if (a.degree() < dm) return {IntPoly{}, a};
        std::vector<Integer> q(a.degree() - dm + 1);
        for (int i = a.degree(); i >= dm; --i) {
            Integer t = r[i];
            if (t == 0) continue;
            q[i - dm] = t;
            for (int j = 0; j <= dm; ++j) r[i - dm + j] -= t * m.c_[j];
        }
        return {IntPoly(std::move(q)), IntPoly(std::move(r))};
    }

   private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Integer> c_;
};

// Power sums p_0 .. p_{count-1} of the roots of a monic f (Newton's identities).
inline std::vector<Integer> power_sums(const IntPoly& f, int count) {
    if (!f.is_monic()) throw invalid_argument("power_sums: polynomial must be monic");
    const int n = f.degree();
    std::vector<Integer> p(count);
    if (count > 0) p[0] = n;
    auto a = [&](int i) { return f.coeff(i); };
    for (int k = 1; k < count; ++k) {
        Integer s = 0;
        if (k <= n) s = k * a(n - k);
        for (int i = 1; i <= std::min(k - 1, n); ++i) s += a(n - i) * p[k - i];
        p[k] = -s;
    }
    return p;
}

}  // namespace ramify
