#pragma once

#include <algorithm>
#include <cstdint>
#include <tuple>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "int_poly.hpp"
#include "integer.hpp"

namespace ramify {

// Polynomial over the prime field F_p, coefficients reduced to [0, p).
class ModPoly {
   public:
    struct unchecked_t {};
    static constexpr unchecked_t unchecked{};

    ModPoly(std::uint64_t p, std::vector<std::uint64_t> coeffs) : p_(p), c_(std::move(coeffs)) {
        if (!is_prime(p)) throw invalid_argument("ModPoly: modulus " + std::to_string(p) + " is not prime");
        for (auto& x : c_) x %= p_;
        trim();
    }
    // Caller guarantees p prime and coefficients in range.
    ModPoly(unchecked_t, std::uint64_t p, std::vector<std::uint64_t> coeffs = {}) : p_(p), c_(std::move(coeffs)) {
        trim();
    }

    static ModPoly from_int_poly(const IntPoly& f, std::uint64_t p) {
        if (!is_prime(p)) throw invalid_argument("ModPoly: modulus " + std::to_string(p) + " is not prime");
        std::vector<std::uint64_t> v;
        for (const auto& x : f.coeffs()) v.push_back(reduce(x, p));
        return ModPoly(unchecked, p, std::move(v));
    }
    static ModPoly constant(std::uint64_t p, std::uint64_t c) { return ModPoly(unchecked, p, {c % p}); }
    static ModPoly x(std::uint64_t p) { return ModPoly(unchecked, p, {0, 1}); }

    std::uint64_t modulus() const noexcept { return p_; }
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    bool is_one() const noexcept { return c_.size() == 1 && c_[0] == 1; }
    const std::vector<std::uint64_t>& coeffs() const noexcept { return c_; }
    std::uint64_t coeff(int i) const { return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : 0; }
    std::uint64_t lead() const { return c_.empty() ? 0 : c_.back(); }

    ModPoly monic() const {
        if (c_.empty()) return *this;
        std::uint64_t inv = invmod(c_.back(), p_);
        std::vector<std::uint64_t> v(c_);
        for (auto& x : v) x = mulmod(x, inv, p_);
        return ModPoly(unchecked, p_, std::move(v));
    }

    ModPoly derivative() const {
        std::vector<std::uint64_t> v;
        for (std::size_t i = 1; i < c_.size(); ++i) v.push_back(mulmod(c_[i], i % p_, p_));
        return ModPoly(unchecked, p_, std::move(v));
    }

    friend bool operator==(const ModPoly& a, const ModPoly& b) { return a.p_ == b.p_ && a.c_ == b.c_; }
    friend bool operator<(const ModPoly& a, const ModPoly& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        return std::lexicographical_compare(a.c_.rbegin(), a.c_.rend(), b.c_.rbegin(), b.c_.rend());
    }

    friend ModPoly operator+(const ModPoly& a, const ModPoly& b) {
        std::vector<std::uint64_t> v(std::max(a.c_.size(), b.c_.size()), 0);
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = addmod(a.coeff(i), b.coeff(i), a.p_);
        return ModPoly(unchecked, a.p_, std::move(v));
    }
    friend ModPoly operator-(const ModPoly& a, const ModPoly& b) {
        std::vector<std::uint64_t> v(std::max(a.c_.size(), b.c_.size()), 0);
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = submod(a.coeff(i), b.coeff(i), a.p_);
        return ModPoly(unchecked, a.p_, std::move(v));
    }
    friend ModPoly operator*(const ModPoly& a, const ModPoly& b) {
        if (a.is_zero() || b.is_zero()) return ModPoly(unchecked, a.p_);
        std::vector<std::uint64_t> v(a.c_.size() + b.c_.size() - 1, 0);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] = addmod(v[i + j], mulmod(a.c_[i], b.c_[j], a.p_), a.p_);
        }
        return ModPoly(unchecked, a.p_, std::move(v));
    }
    friend ModPoly operator*(std::uint64_t s, const ModPoly& a) {
        std::vector<std::uint64_t> v(a.c_);
        for (auto& x : v) x = mulmod(x, s % a.p_, a.p_);
        return ModPoly(unchecked, a.p_, std::move(v));
    }

    friend std::pair<ModPoly, ModPoly> divmod(const ModPoly& a, const ModPoly& b) {
        if (b.is_zero()) throw invalid_argument("ModPoly: division by zero");
        const std::uint64_t p = a.p_;
        std::vector<std::uint64_t> r(a.c_);
        const int db = b.degree();
        if (a.degree() < db) return {ModPoly(unchecked, p), a};
        std::vector<std::uint64_t> q(a.degree() - db + 1, 0);
        const std::uint64_t inv = invmod(b.lead(), p);
        for (int i = a.degree(); i >= db; --i) {
            if (r[i] == 0) continue;
            std::uint64_t t = mulmod(r[i], inv, p);
            q[i - db] = t;
            for (int j = 0; j <= db; ++j) r[i - db + j] = submod(r[i - db + j], mulmod(t, b.c_[j], p), p);
        }
        return {ModPoly(unchecked, p, std::move(q)), ModPoly(unchecked, p, std::move(r))};
    }
    friend ModPoly operator/(const ModPoly& a, const ModPoly& b) { return divmod(a, b).first; }
    friend ModPoly operator%(const ModPoly& a, const ModPoly& b) { return divmod(a, b).second; }

   private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::uint64_t p_;
    std::vector<std::uint64_t> c_;
};

// Monic gcd; gcd(0, 0) = 0.
inline ModPoly gcd(ModPoly a, ModPoly b) {
    while (!b.is_zero()) {
        ModPoly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

// Extended gcd: returns (g, s, t) with s*a + t*b = g monic.
inline std::tuple<ModPoly, ModPoly, ModPoly> xgcd(const ModPoly& a, const ModPoly& b) {
    const std::uint64_t p = a.modulus();
    ModPoly r0 = a, r1 = b;
    ModPoly s0 = ModPoly::constant(p, 1), s1(ModPoly::unchecked, p);
    ModPoly t0(ModPoly::unchecked, p), t1 = ModPoly::constant(p, 1);
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        ModPoly s2 = s0 - q * s1, t2 = t0 - q * t1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.is_zero()) return {r0, s0, t0};
    std::uint64_t inv = invmod(r0.lead(), p);
    return {inv * r0, inv * s0, inv * t0};
}

// base^e mod m, for an arbitrary-size exponent.
inline ModPoly powmod(const ModPoly& base, const Integer& e, const ModPoly& m) {
    ModPoly result = ModPoly::constant(base.modulus(), 1) % m;
    ModPoly b = base % m;
    const auto bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (auto i = static_cast<long>(bits) - 1; i >= 0; --i) {
        result = (result * result) % m;
        if (mpz_tstbit(e.get_mpz_t(), i)) result = (result * b) % m;
    }
    return result;
}

}  // namespace ramify
