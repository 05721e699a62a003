#include <gtest/gtest.h>

#include <random>

#include "ramify/ramify.hpp"

using namespace ramify;

namespace {

ModPoly mp(std::uint64_t p, std::vector<std::uint64_t> c) { return ModPoly(p, std::move(c)); }

// Irreducibility by trial division with every monic polynomial of degree <= deg/2.
bool brute_irreducible(const ModPoly& f) {
    const std::uint64_t p = f.modulus();
    const int n = f.degree();
    for (int d = 1; 2 * d <= n; ++d) {
        std::vector<std::uint64_t> c(d + 1, 0);
        c[d] = 1;
        while (true) {
            if ((f % ModPoly(p, c)).is_zero()) return false;
            int i = 0;
            while (i < d && ++c[i] == p) c[i++] = 0;
            if (i == d) break;
        }
    }
    return true;
}

int euler_legendre(long a, std::uint64_t p) {
    const auto r = powmod(static_cast<std::uint64_t>(((a % static_cast<long>(p)) + static_cast<long>(p)) % static_cast<long>(p)),
                          (p - 1) / 2, p);
    return r == 0 ? 0 : (r == 1 ? 1 : -1);
}

// Row lattice containment: every row of a lies in the Z-span of the rows of b (b square, full rank).
bool rows_in_lattice(const IntMatrix& a, const IntMatrix& b) {
    const std::size_t n = b.rows();
    for (std::size_t r = 0; r < a.rows(); ++r) {
        // Solve x b = a_r over Q by Gaussian elimination on the transpose.
        std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n + 1));
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) m[i][j] = Rational(b(j, i));
            m[i][n] = Rational(a(r, i));
        }
        for (std::size_t c = 0; c < n; ++c) {
            std::size_t piv = c;
            while (m[piv][c] == 0) ++piv;
            std::swap(m[piv], m[c]);
            for (std::size_t i = 0; i < n; ++i) {
                if (i == c || m[i][c] == 0) continue;
                const Rational t = m[i][c] / m[c][c];
                for (std::size_t j = c; j <= n; ++j) m[i][j] -= t * m[c][j];
            }
        }
        for (std::size_t i = 0; i < n; ++i) {
            Rational x = m[i][n] / m[i][i];
            x.canonicalize();
            if (x.get_den() != 1) return false;
        }
    }
    return true;
}

}  // namespace

TEST(FactorModP, ExamplesFromExhaustiveSearch) {
    auto f = factor_mod_p(mp(5, {1, 0, 1}));
    ASSERT_EQ(f.size(), 2u);
    EXPECT_EQ(f[0].first, mp(5, {2, 1}));
    EXPECT_EQ(f[1].first, mp(5, {3, 1}));
    EXPECT_EQ(f[0].second, 1);

    f = factor_mod_p(mp(2, {1, 0, 1}));
    ASSERT_EQ(f.size(), 1u);
    EXPECT_EQ(f[0].first, mp(2, {1, 1}));
    EXPECT_EQ(f[0].second, 2);

    f = factor_mod_p(mp(7, {0, 1}));
    ASSERT_EQ(f.size(), 1u);
    EXPECT_EQ(f[0].first, mp(7, {0, 1}));
}

TEST(FactorModP, CompositeModulusRejected) {
    EXPECT_THROW(ModPoly(6, {1, 1}), invalid_argument);
    EXPECT_THROW(factor_mod_p(ModPoly(ModPoly::unchecked, 9, {1, 0, 1})), invalid_argument);
}

TEST(FactorModP, RandomRefactoring) {
    std::mt19937_64 rng(11);
    const std::vector<std::uint64_t> primes{2, 3, 5, 7, 11, 13, 101};
    for (int trial = 0; trial < 500; ++trial) {
        const std::uint64_t p = primes[trial % primes.size()];
        const int deg = 1 + static_cast<int>(rng() % 10);
        std::vector<std::uint64_t> c(deg + 1);
        for (auto& x : c) x = rng() % p;
        if (c.back() == 0) c.back() = 1;
        // Force repeated factors now and then.
        ModPoly f(p, c);
        if (trial % 5 == 0) f = f * f;
        const auto fac = factor_mod_p(f, trial);
        ModPoly prod = ModPoly::constant(p, f.lead());
        for (std::size_t i = 0; i < fac.size(); ++i) {
            const auto& [g, m] = fac[i];
            EXPECT_EQ(g.lead(), 1u);
            if (g.degree() <= 6 && p <= 13) EXPECT_TRUE(brute_irreducible(g));
            for (std::size_t k = 0; k < i; ++k) EXPECT_FALSE(fac[k].first == g);
            for (int k = 0; k < m; ++k) prod = prod * g;
        }
        EXPECT_EQ(prod, f) << "trial " << trial;
    }
}

TEST(FactorModP, SeedDoesNotChangeResult) {
    const ModPoly f(31, {3, 1, 4, 1, 5, 9, 2, 6, 1});
    EXPECT_EQ(factor_mod_p(f, 0), factor_mod_p(f, 12345));
}

TEST(Legendre, Examples) {
    EXPECT_EQ(legendre(2, 5), -1);
    EXPECT_EQ(legendre(4, 7), 1);
    EXPECT_EQ(legendre(10, 5), 0);
    EXPECT_THROW(legendre(3, 2), invalid_argument);
    EXPECT_THROW(legendre(3, -1), invalid_argument);
    EXPECT_THROW(legendre(3, 9), invalid_argument);
}

TEST(Legendre, MatchesEulerAndIsMultiplicative) {
    for (std::uint64_t p : {3, 5, 7, 11, 13, 97}) {
        const auto sp = static_cast<std::int64_t>(p);
        for (long a = -30; a <= 30; ++a) EXPECT_EQ(legendre(a, sp), euler_legendre(a, p));
        for (long a = 1; a < static_cast<long>(p); ++a)
            for (long b = 1; b < static_cast<long>(p); ++b)
                EXPECT_EQ(legendre(a, sp) * legendre(b, sp), legendre(a * b, sp));
    }
}

TEST(Hilbert, Examples) {
    EXPECT_EQ(hilbert(2, 5, Place(2)), -1);
    for (std::int64_t p : {-1, 2, 3, 5, 7})
        for (long a : {-6, -1, 2, 3, 10}) EXPECT_EQ(hilbert(1, a, Place(p)), 1);
    EXPECT_EQ(hilbert(5, 5, Place(5)), 1);
    EXPECT_EQ(hilbert(3, 3, Place(3)), -1);
    EXPECT_EQ(hilbert(-1, -1, Place(-1)), -1);
    EXPECT_EQ(hilbert(-1, -1, Place(2)), -1);
    EXPECT_THROW(hilbert(0, 3, Place(3)), invalid_argument);
}

TEST(Hilbert, SymmetricAndBimultiplicative) {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<long> d(-60, 60);
    auto draw = [&] {
        long x = 0;
        while (x == 0) x = d(rng);
        return Rational(x, 1 + rng() % 4);
    };
    for (int t = 0; t < 300; ++t) {
        Rational a = draw(), b = draw(), c = draw();
        a.canonicalize();
        b.canonicalize();
        c.canonicalize();
        for (std::int64_t p : {-1, 2, 3, 5, 7, 11}) {
            const Place pl(p);
            EXPECT_EQ(hilbert(a, b, pl), hilbert(b, a, pl));
            EXPECT_EQ(hilbert(a, b * c, pl), hilbert(a, b, pl) * hilbert(a, c, pl));
            EXPECT_EQ(hilbert(a, -a, pl), 1);
        }
    }
}

TEST(Hilbert, ProductFormula) {
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<long> d(-500, 500);
    for (int t = 0; t < 100; ++t) {
        long a = 0, b = 0;
        while (a == 0) a = d(rng);
        while (b == 0) b = d(rng);
        int prod = hilbert(a, b, Place::infinite()) * hilbert(a, b, Place(2));
        for (const auto& [q, e] : factor_integer(Integer(2 * a * b)))
            if (q != 2) prod *= hilbert(a, b, Place(static_cast<std::int64_t>(to_u64(q))));
        EXPECT_EQ(prod, 1) << a << " " << b;
    }
}

TEST(Valuation, Examples) {
    EXPECT_EQ(valuation(Rational(20), Place(5)), 1);
    EXPECT_EQ(valuation(Rational(-7), Place(-1)), -1);
    EXPECT_EQ(valuation(Rational(3, 4), Place(2)), -2);
    EXPECT_THROW(valuation(Rational(0), Place(3)), invalid_argument);
}

TEST(Hnf, Examples) {
    EXPECT_EQ(hnf(IntMatrix::identity(3)), IntMatrix::identity(3));
    EXPECT_EQ(hnf(IntMatrix({{2, 0}, {1, 1}})), IntMatrix({{1, 1}, {0, 2}}));
    EXPECT_EQ(hnf(IntMatrix(2, 3)), IntMatrix(2, 3));
}

TEST(Hnf, IdempotentSameLatticeSameDeterminant) {
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<long> d(-20, 20);
    int tested = 0;
    while (tested < 200) {
        const std::size_t n = 2 + rng() % 4;
        IntMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m(i, j) = d(rng);
        const Integer det = determinant(m);
        if (det == 0) continue;
        ++tested;
        const IntMatrix h = hnf(m);
        EXPECT_EQ(hnf(h), h);
        EXPECT_EQ(abs(determinant(h)), abs(det));
        for (std::size_t i = 0; i < n; ++i) {
            EXPECT_GT(h(i, i), 0);
            for (std::size_t j = 0; j < i; ++j) EXPECT_EQ(h(i, j), 0);
            for (std::size_t k = 0; k < i; ++k) {
                EXPECT_GE(h(k, i), 0);
                EXPECT_LT(h(k, i), h(i, i));
            }
        }
        EXPECT_TRUE(rows_in_lattice(h, m));
        EXPECT_TRUE(rows_in_lattice(m, h));
    }
}

TEST(Sturm, RealRootCounts) {
    EXPECT_EQ(count_real_roots(IntPoly{1, 0, 1}), 0);
    EXPECT_EQ(count_real_roots(IntPoly{-5, 0, 1}), 2);
    EXPECT_EQ(count_real_roots(IntPoly{-3, 0, 0, 1}), 1);
    // (x-1)(x-2)(x-3)(x+4)
    EXPECT_EQ(count_real_roots(IntPoly{-24, 38, -13, -2, 1}), 4);
    // Roots 0.9 and 1.1.
    EXPECT_EQ(count_real_roots(IntPoly{99, -200, 100}), 2);
}

TEST(Irreducibility, DetectsFactorizations) {
    EXPECT_EQ(check_irreducible(IntPoly{4, 0, 0, 0, 1}).verdict, Irreducibility::reducible);  // x^4 + 4
    EXPECT_EQ(check_irreducible(IntPoly{1, 2, 1}).verdict, Irreducibility::reducible);
    EXPECT_EQ(check_irreducible(IntPoly{1, 0, 1}).verdict, Irreducibility::irreducible);
    // x^4 + 1 is reducible modulo every prime but irreducible over Q.
    EXPECT_EQ(check_irreducible(IntPoly{1, 0, 0, 0, 1}).verdict, Irreducibility::irreducible);
    // Product of two random-looking cubics.
    const IntPoly g{3, -1, 2, 1}, h{-5, 4, 0, 1};
    const auto r = check_irreducible(g * h);
    ASSERT_EQ(r.verdict, Irreducibility::reducible);
    ASSERT_TRUE(r.factor.has_value());
    EXPECT_TRUE(divmod_monic(g * h, *r.factor).second.is_zero());
}
