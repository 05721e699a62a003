#pragma once

#include <stdexcept>
#include <string>

namespace ramify {

// Bad input: composite modulus, zero argument, non-monic polynomial, ...
class invalid_argument : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

class parse_error : public invalid_argument {
   public:
    parse_error(const std::string& what, std::size_t offset)
        : invalid_argument(what + " at byte " + std::to_string(offset)), offset_(offset) {}
    std::size_t offset() const noexcept { return offset_; }

   private:
    std::size_t offset_;
};

class reducible_polynomial : public std::domain_error {
   public:
    using std::domain_error::domain_error;
};

// Raised by every trace prediction entry point when p divides some e_i.
class wild_ramification : public std::domain_error {
   public:
    wild_ramification() : std::domain_error("wild ramification: Theorem hypotheses not met") {}
};

class undefined_invariant : public std::domain_error {
   public:
    using std::domain_error::domain_error;
};

// A cross-check between two independent computations failed. Always a bug.
class internal_consistency : public std::logic_error {
   public:
    using std::logic_error::logic_error;
};

}  // namespace ramify
