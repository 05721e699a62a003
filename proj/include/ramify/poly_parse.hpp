#pragma once

// Text form of integer polynomials.
//
//   poly  := [sign] term { ('+' | '-') term }
//   term  := int | int ['*'] mono | mono
//   mono  := 'x' ['^' int]
//
// Whitespace is ignored between tokens and repeated powers are summed. A
// JSON array of integers (constant term first) is accepted as well.

#include <cctype>
#include <map>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "errors.hpp"
#include "int_poly.hpp"

namespace ramify {

namespace detail {

class PolyParser {
   public:
    explicit PolyParser(std::string_view s) : s_(s) {}

    IntPoly parse() {
        skip_ws();
        if (pos_ == s_.size()) throw parse_error("empty polynomial", pos_);
        bool first = true;
        while (true) {
            skip_ws();
            if (pos_ == s_.size()) break;
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = peek() == '-' ? -1 : 1;
                ++pos_;
                skip_ws();
            } else if (!first) {
                throw parse_error("expected '+' or '-'", pos_);
            }
            term(sign);
            first = false;
        }
        std::vector<Integer> coeffs;
        for (const auto& [k, c] : terms_) {
            if (coeffs.size() <= k) coeffs.resize(k + 1);
            coeffs[k] += c;
        }
        return IntPoly(std::move(coeffs));
    }

   private:
    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    std::string digits() {
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) throw parse_error("expected digits", pos_);
        return std::string(s_.substr(start, pos_ - start));
    }

    void term(int sign) {
        Integer coeff = 1;
        bool have_coeff = false;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            coeff = Integer(digits());
            have_coeff = true;
            if (peek() == '.' || peek() == '/' || peek() == 'e' || peek() == 'E')
                throw parse_error("non-integer coefficient", pos_);
            skip_ws();
            if (peek() == '*') {
                ++pos_;
                skip_ws();
                if (peek() != 'x') throw parse_error("expected 'x' after '*'", pos_);
            }
        }
        std::size_t power = 0;
        if (peek() == 'x') {
            ++pos_;
            power = 1;
            skip_ws();
            if (peek() == '^') {
                ++pos_;
                skip_ws();
                std::size_t at = pos_;
                std::string d = digits();
                if (d.size() > 6) throw parse_error("exponent too large", at);
                power = std::stoul(d);
            }
        } else if (!have_coeff) {
            throw parse_error("expected a term", pos_);
        }
        terms_[power] += sign * coeff;
    }

    std::string_view s_;
    std::size_t pos_ = 0;
    std::map<std::size_t, Integer> terms_;
};

}  // namespace detail

inline IntPoly parse_poly(std::string_view s) { return detail::PolyParser(s).parse(); }

// JSON array of integers (numbers or decimal strings), constant term first.
inline IntPoly parse_poly_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw parse_error("invalid JSON coefficient list", e.byte);
    }
    if (!j.is_array()) throw parse_error("JSON polynomial must be an array", 0);
    std::vector<Integer> coeffs;
    for (const auto& x : j) {
        if (x.is_number_integer())
            coeffs.emplace_back(x.dump());
        else if (x.is_string()) {
            Integer v;
            if (v.set_str(x.get<std::string>(), 10) != 0) throw parse_error("bad integer string in JSON array", 0);
            coeffs.push_back(v);
        } else
            throw parse_error("non-integer coefficient in JSON array", 0);
    }
    return IntPoly(std::move(coeffs));
}

// Either form: a JSON array when the text starts with '[', else the grammar.
inline IntPoly parse_poly_source(const std::string& text) {
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '[') return parse_poly_json(text);
    return parse_poly(text);
}

// Canonical rendering, highest power first: "x^8 - 3", "2x^2 + x", "0".
inline std::string render_poly(const IntPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int k = p.degree(); k >= 0; --k) {
        const Integer& c = p.coeff(k);
        if (c == 0) continue;
        Integer mag = abs(c);
        if (out.empty())
            out += c < 0 ? "-" : "";
        else
            out += c < 0 ? " - " : " + ";
        if (k == 0 || mag != 1) out += mag.get_str();
        if (k >= 1) out += "x";
        if (k >= 2) out += "^" + std::to_string(k);
    }
    return out;
}

}  // namespace ramify
