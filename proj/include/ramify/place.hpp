#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include "errors.hpp"
#include "integer.hpp"

namespace ramify {

// A rational prime in the extended sense: 2, 3, 5, ... or -1 for the
// archimedean place.
class Place {
   public:
    explicit Place(std::int64_t p) : value_(p) {
        if (p != -1 && (p < 2 || !is_prime(static_cast<std::uint64_t>(p))))
            throw invalid_argument("not a prime or -1: " + std::to_string(p));
    }

    static Place infinite() { return Place(-1); }

    bool is_infinite() const noexcept { return value_ == -1; }
    bool is_finite() const noexcept { return value_ != -1; }
    bool is_odd() const noexcept { return value_ > 2; }
    std::int64_t value() const noexcept { return value_; }
    std::uint64_t prime() const {
        if (is_infinite()) throw invalid_argument("the infinite place has no residue characteristic");
        return static_cast<std::uint64_t>(value_);
    }

    auto operator<=>(const Place&) const = default;

    std::string str() const { return std::to_string(value_); }

   private:
    std::int64_t value_;
};

}  // namespace ramify
