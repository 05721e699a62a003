#include <gtest/gtest.h>

#include "ramify/ramify.hpp"
#include "support.hpp"

using namespace ramify;

namespace {

NumberField field(const char* s) { return NumberField(parse_poly(s)); }

}  // namespace

TEST(NonResidueUnit, Examples) {
    EXPECT_EQ(u(Place(2)), 5);
    EXPECT_EQ(u(Place::infinite()), -1);
    EXPECT_EQ(u(Place(7)), 3);
    EXPECT_EQ(u(Place(3)), 2);
    EXPECT_EQ(u(Place(17)), 3);
    EXPECT_EQ(u(Place(73)), 5);
}

TEST(NonResidueUnit, LeastNonResidueBySquaring) {
    for (auto p : primes_up_to(300)) {
        if (p == 2) continue;
        std::vector<bool> square(p, false);
        for (std::uint64_t x = 1; x < p; ++x) square[x * x % p] = true;
        std::uint64_t least = 2;
        while (square[least]) ++least;
        EXPECT_EQ(u(Place(static_cast<std::int64_t>(p))), static_cast<unsigned long>(least));
    }
}

TEST(Alpha, Examples) {
    const auto gi = field("x^2 + 1");
    EXPECT_EQ(alpha(gi, Place(2)), 2);
    EXPECT_EQ(alpha(gi, Place(3)), 2);
    EXPECT_EQ(alpha(gi, Place(5)), 1);
    EXPECT_EQ(alpha(gi, Place::infinite()), 2);
    const auto x83 = field("x^8 - 3");
    EXPECT_EQ(alpha(x83, Place(2)), 8);
    EXPECT_EQ(alpha(x83, Place(3)), 8);
}

TEST(Beta, Examples) {
    const auto gi = field("x^2 + 1");
    EXPECT_EQ(beta(gi, Place(2)), 2);
    EXPECT_EQ(beta(gi, Place(5)), 1);
    EXPECT_EQ(beta(gi, Place(3)), 1);
    EXPECT_EQ(beta(gi, Place::infinite()), 2);
    // Sign factor: e = 3, f = 1 gives (-1)^1 * 3^2.
    EXPECT_EQ(beta(SplittingType{Place(5), {{3, 1}}, false}), -9);
    // e = 2, f = 2 at 3: 2^(2*1) * u_3^(4 - 2 - 2 + 1).
    EXPECT_EQ(beta(SplittingType{Place(3), {{2, 2}}, false}), 8);
}

TEST(Nu, Examples) {
    EXPECT_EQ(nu(field("x^2 - 5"), Place(5)), 1);
    EXPECT_EQ(nu(field("x^2 + 1"), Place(5)), 1);
    EXPECT_THROW(nu(field("x^3 - 3"), Place(3)), undefined_invariant);
    EXPECT_THROW(nu(field("x^2 + 1"), Place(2)), undefined_invariant);
    EXPECT_THROW(nu(field("x^2 + 1"), Place::infinite()), undefined_invariant);
    // disc(x^2 - 15) = 60; at 5: 60 / (5 * 2 * 2) = 3, a non-residue mod 5.
    EXPECT_EQ(nu(field("x^2 - 15"), Place(5)), 2);
}

TEST(AForm, Examples) {
    EXPECT_EQ(a_form(field("x^2 + 1"), Place(5)).str(), "<1> + <1>");
    const auto c = a_form(field("x^3 - 3"), Place(2));
    EXPECT_EQ(c.str(), "<1> + <-1,-5>");
    EXPECT_EQ(c.det(), 5);
    EXPECT_EQ(alpha(field("x^3 - 3"), Place(2)), 5);
    const auto o = a_form(field("x^8 - 3"), Place(3));
    EXPECT_EQ(o.str(), "<8>");
    EXPECT_EQ(o.det(), 8);
    // f = 3 at 7: <e, e(-1)^2, e(-u)^2> = <1, 1, 9>.
    EXPECT_EQ(a_form(SplittingType{Place(7), {{1, 3}}, false}).str(), "<1,1,9>");
}

TEST(Classify, Examples) {
    const auto gi = field("x^2 + 1");
    EXPECT_EQ(classify(gi, Place(2)), (RamificationFlags{false, false, true}));
    EXPECT_EQ(classify(gi, Place(5)), (RamificationFlags{true, true, false}));
    EXPECT_EQ(classify(gi, Place(3)), (RamificationFlags{true, false, false}));
    EXPECT_EQ(classify(gi, Place::infinite()), (RamificationFlags{false, false, false}));
}

TEST(Invariants, Properties) {
    for (const auto& L : test_support::random_fields(51, 200)) {
        const auto sig = L.signature();
        const Integer two_s = ipow(Integer(2), sig.complex);
        EXPECT_EQ(alpha(L, Place::infinite()), two_s);
        EXPECT_EQ(beta(L, Place::infinite()), two_s);
        EXPECT_EQ(split_prime(L, Place::infinite()).f_sum(), sig.real + sig.complex);
        for (const auto& p : test_support::places_up_to(40, false)) {
            const auto s = split_prime(L, p);
            const auto a = alpha(s);
            EXPECT_GE(a, 1);
            EXPECT_EQ(a_form(s).det(), a);
            EXPECT_EQ(a_form(s).dim(), s.f_sum());
            const auto inv = ramification_invariants(L, p);
            EXPECT_EQ(inv.alpha, a);
            EXPECT_EQ(inv.flags, classify(s));
            EXPECT_EQ(inv.nu.has_value(), p.prime() != 2 && !s.wild());
            if (inv.nu) {
                EXPECT_TRUE(*inv.nu == 1 || *inv.nu == u(p));
                if (s.unramified()) EXPECT_EQ(*inv.nu, 1);
            }
        }
    }
}
