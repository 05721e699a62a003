#pragma once

// Published values for two classical field pairs and the small examples
// attached to the definitions, checked end to end.

#include <functional>
#include <string>
#include <vector>

#include "equivalence.hpp"
#include "invariants.hpp"
#include "number_field.hpp"
#include "padic_form.hpp"
#include "poly_parse.hpp"
#include "splitting.hpp"

namespace ramify {

struct ReferenceCase {
    std::string name;
    std::function<bool()> check;
};

inline const char* const septic_f = "x^7 - 3x^6 + 4x^5 - 5x^4 + 3x^3 - x^2 - 2x + 1";
inline const char* const septic_g = "x^7 - x^5 - 2x^4 - 2x^3 + 2x^2 - x + 4";
inline const char* const octic_a = "x^8 - 3";
inline const char* const octic_b = "x^8 - 48";

inline std::vector<ReferenceCase> reference_cases() {
    auto field = [](const char* s) { return NumberField(parse_poly(s)); };
    std::vector<ReferenceCase> cases;
    cases.push_back({"septic alpha_2 = 100 and 200", [=] {
                         return alpha(field(septic_f), Place(2)) == 100 && alpha(field(septic_g), Place(2)) == 200;
                     }});
    cases.push_back({"septic alpha_691 = 8 for both", [=] {
                         return alpha(field(septic_f), Place(691)) == 8 && alpha(field(septic_g), Place(691)) == 8;
                     }});
    cases.push_back({"septic discriminants = 2^6 * 691^2", [=] {
                         const Integer d = 64 * Integer(691) * 691;
                         return field(septic_f).disc() == d && field(septic_g).disc() == d;
                     }});
    cases.push_back({"septic pair differs only at 2 up to 1000", [=] {
                         auto r = compare_fields(field(septic_f), field(septic_g), 1000);
                         return r.differs.size() == 1 && r.differs[0].p == 2 && r.differs[0].alpha_k == 100 &&
                                r.differs[0].alpha_l == 200 && r.verdict == "consistent";
                     }});
    cases.push_back({"octics: 2 and 3 totally ramified", [=] {
                         for (const char* s : {octic_a, octic_b}) {
                             const NumberField L = field(s);
                             for (std::int64_t p : {2, 3})
                                 if (split_prime(L, Place(p)).pairs != std::vector<std::pair<int, int>>{{8, 1}}) return false;
                         }
                         return true;
                     }});
    cases.push_back({"octics: alpha_2 = alpha_3 = 8", [=] {
                         for (const char* s : {octic_a, octic_b}) {
                             const NumberField L = field(s);
                             if (alpha(L, Place(2)) != 8 || alpha(L, Place(3)) != 8) return false;
                         }
                         return true;
                     }});
    cases.push_back({"octics: no alpha differences up to 1000", [=] {
                         auto r = compare_fields(field(octic_a), field(octic_b), 1000);
                         return r.differs.empty() && r.verdict == "consistent";
                     }});
    cases.push_back({"octic a_3 = <8>", [=] {
                         const AForm a = a_form(field(octic_a), Place(3));
                         return a.dim() == 1 && a.det() == 8;
                     }});
    cases.push_back({"u_2 = 5, u_-1 = -1", [] { return u(Place(2)) == 5 && u(Place::infinite()) == -1; }});
    cases.push_back({"beta = 1 at an unramified prime", [=] { return beta(field("x^2 + 1"), Place(3)) == 1; }});
    cases.push_back({"alpha_-1 = beta_-1 = 2^s", [=] {
                         for (const char* s : {"x^2 + 1", octic_a, septic_f}) {
                             const NumberField L = field(s);
                             const Integer t = ipow(Integer(2), L.signature().complex);
                             if (alpha(L, Place::infinite()) != t || beta(L, Place::infinite()) != t) return false;
                         }
                         return true;
                     }});
    cases.push_back({"Hasse-Witt of <1,...,1,(-1)^(f-1),(-5)^(f-1)> over Z_2", [] {
                         for (int f = 2; f <= 6; ++f) {
                             PAdicForm q(Place(2));
                             for (int i = 0; i < f - 2; ++i) q.add_diagonal(1);
                             q.add_diagonal(Rational(ipow(Integer(-1), f - 1)));
                             q.add_diagonal(Rational(ipow(Integer(-5), f - 1)));
                             if (hasse_witt(q) != ((f - 1) % 2 ? -1 : 1)) return false;
                         }
                         return true;
                     }});
    return cases;
}

}  // namespace ramify
