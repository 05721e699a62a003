#include <gtest/gtest.h>

#include <random>

#include "ramify/ramify.hpp"

using namespace ramify;

namespace {

// Rational diagonal of a symmetric matrix by congruence, independent of the library.
std::vector<Rational> diagonalize(const IntMatrix& g) {
    const std::size_t n = g.rows();
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m[i][j] = Rational(g(i, j));
    std::vector<Rational> d;
    for (std::size_t k = 0; k < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t j = k + 1;
            while (j < n && m[k][j] == 0) ++j;
            if (j == n) return {};
            // Replace e_k by e_k + e_j (or e_k - e_j when that is needed to avoid a zero).
            const int sgn_ = (m[j][j] + 2 * m[k][j] == 0) ? -1 : 1;
            for (std::size_t i = 0; i < n; ++i) m[k][i] += sgn_ * m[j][i];
            for (std::size_t i = 0; i < n; ++i) m[i][k] += sgn_ * m[i][j];
        }
        d.push_back(m[k][k]);
        for (std::size_t i = k + 1; i < n; ++i) {
            const Rational t = m[i][k] / m[k][k];
            for (std::size_t j = k; j < n; ++j) m[i][j] -= t * m[k][j];
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            const Rational t = m[k][i] / m[k][k];
            for (std::size_t j = k; j < n; ++j) m[j][i] -= t * m[j][k];
        }
    }
    return d;
}

int double_product(const std::vector<Rational>& d, const Place& p) {
    int s = 1;
    for (std::size_t i = 0; i < d.size(); ++i)
        for (std::size_t j = i + 1; j < d.size(); ++j) s *= hilbert(d[i], d[j], p);
    return s;
}

// Square class of a nonzero integer in the same encoding as det_square_class.
SquareClass square_class(const Integer& a, const Place& p) {
    if (p.is_infinite()) return {0, a < 0 ? -1L : 1L};
    Integer unit;
    const int v = valuation(a, Integer(static_cast<unsigned long>(p.prime())), &unit);
    if (p.prime() == 2) return {v, static_cast<long>(mpz_fdiv_ui(unit.get_mpz_t(), 8))};
    return {v, legendre(unit, p.value()) == 1 ? 1L : u(p).get_si()};
}

bool same_class(SquareClass a, SquareClass b) { return a.valuation % 2 == b.valuation % 2 && a.unit == b.unit; }

IntMatrix random_symmetric(std::mt19937_64& rng, std::size_t n) {
    std::uniform_int_distribution<long> d(-20, 20);
    while (true) {
        IntMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j) m(i, j) = m(j, i) = d(rng);
        if (determinant(m) != 0) return m;
    }
}

IntMatrix random_unimodular(std::mt19937_64& rng, std::size_t n) {
    IntMatrix p = IntMatrix::identity(n);
    std::uniform_int_distribution<long> c(-3, 3);
    for (int step = 0; step < 8; ++step) {
        const std::size_t i = rng() % n, j = rng() % n;
        if (i == j) continue;
        const long k = c(rng);
        for (std::size_t col = 0; col < n; ++col) p(i, col) += k * p(j, col);
    }
    return p;
}

PAdicForm diag(const Place& p, std::initializer_list<long> entries) {
    PAdicForm f(p);
    for (long e : entries) f.add_diagonal(Rational(e));
    return f;
}

}  // namespace

TEST(JordanDecompose, Examples) {
    const auto f = jordan_decompose(IntMatrix({{2, 1}, {1, 3}}), Place(5));
    EXPECT_EQ(f.str(), "<2> + 5*<2>");
    for (std::int64_t p : {2, 3, 5, 7}) EXPECT_EQ(jordan_decompose(IntMatrix::identity(4), Place(p)).str(), "<1,1,1,1>");
    EXPECT_EQ(jordan_decompose(IntMatrix::identity(3), Place::infinite()).str(), "sig(3,0)");
    EXPECT_EQ(jordan_decompose(IntMatrix({{0, 1}, {1, 0}}), Place(2)).str(), "U");
    EXPECT_EQ(jordan_decompose(IntMatrix({{2, 1}, {1, 2}}), Place(2)).str(), "V");
    EXPECT_EQ(jordan_decompose(IntMatrix({{0, 2}, {2, 0}}), Place(2)).str(), "2*U");
    EXPECT_THROW(jordan_decompose(IntMatrix({{1, 2}, {2, 4}}), Place(3)), invalid_argument);
    EXPECT_THROW(jordan_decompose(IntMatrix({{1, 2}, {3, 4}}), Place(3)), invalid_argument);
}

TEST(DetSquareClass, Examples) {
    EXPECT_EQ(det_square_class(jordan_decompose(IntMatrix({{2, 1}, {1, 3}}), Place(5))), (SquareClass{1, 1}));
    EXPECT_EQ(det_square_class(jordan_decompose(IntMatrix::identity(3), Place(7))), (SquareClass{0, 1}));
    PAdicForm h(Place(2));
    h.add_u(0);
    EXPECT_EQ(det_square_class(h), (SquareClass{0, 7}));
}

TEST(HasseWitt, Examples) {
    EXPECT_EQ(hasse_witt(diag(Place(5), {1, 1})), 1);
    EXPECT_EQ(hasse_witt(diag(Place(2), {2, 5})), -1);
    for (int f = 2; f <= 6; ++f) {
        PAdicForm a(Place(2));
        for (int i = 0; i < f - 2; ++i) a.add_diagonal(1);
        a.add_diagonal(Rational((f - 1) % 2 ? -1 : 1));
        a.add_diagonal(Rational(ipow(Integer(-5), f - 1)));
        EXPECT_EQ(hasse_witt(a), (f - 1) % 2 ? -1 : 1) << f;
    }
    EXPECT_THROW(hasse_witt(PAdicForm::signature(1, 1)), invalid_argument);
}

TEST(IsometricZp, Examples) {
    const Place p5(5);
    EXPECT_EQ(isometric_zp(diag(p5, {1, 2}), diag(p5, {2, 2})), false);
    const auto f = jordan_decompose(IntMatrix({{2, 1}, {1, 3}}), p5);
    EXPECT_EQ(isometric_zp(f, f), true);
    EXPECT_EQ(isometric_zp(diag(p5, {1, 5}), diag(p5, {4, 5})), true);
    EXPECT_THROW(isometric_zp(diag(p5, {1}), diag(Place(3), {1})), invalid_argument);
    // <1,1> and <3,3> over Z_2 differ in oddity; <1,3> and U differ in type.
    const Place p2(2);
    EXPECT_EQ(isometric_zp(diag(p2, {1, 1}), diag(p2, {3, 3})), false);
    EXPECT_EQ(isometric_zp(diag(p2, {1, 1}), diag(p2, {5, 5})), true);
    EXPECT_EQ(isometric_zp(diag(p2, {1, 7}), hyperbolic_sum(1, 0)), false);
    EXPECT_EQ(isometric_zp(hyperbolic_sum(2, 0), jordan_decompose(IntMatrix({{2, 1, 0, 0}, {1, 2, 0, 0}, {0, 0, 2, 1}, {0, 0, 1, 2}}), p2)), true);
    // <1,2> and <3,6> over Z_2: related by sign walking.
    EXPECT_EQ(isometric_zp(diag(p2, {1, 2}), diag(p2, {3, 6})), true);
    EXPECT_FALSE(isometric_zp(diag(p2, {1, 4}), diag(p2, {1, 4})).has_value());
    EXPECT_EQ(isometric_zp(PAdicForm::signature(2, 1), PAdicForm::signature(2, 1)), true);
}

TEST(HyperbolicSum, Examples) {
    EXPECT_EQ(hyperbolic_sum(0).dim(), 0);
    EXPECT_EQ(hyperbolic_sum(0).str(), "0");
    const auto h1 = hyperbolic_sum(1);
    EXPECT_EQ(h1.str(), "2*U");
    EXPECT_EQ(det_square_class(h1), (SquareClass{2, 7}));
    EXPECT_EQ(hyperbolic_sum(3).dim(), 6);
    EXPECT_THROW(hyperbolic_sum(-1), invalid_argument);
}

TEST(JordanDecompose, PreservesDimensionDeterminantAndRationalClass) {
    std::mt19937_64 rng(61);
    const std::vector<std::int64_t> places{2, 3, 5, 7, -1};
    for (int t = 0; t < 500; ++t) {
        const IntMatrix g = random_symmetric(rng, 1 + rng() % 5);
        const Place p(places[t % places.size()]);
        const auto f = jordan_decompose(g, p);
        const auto d = diagonalize(g);
        ASSERT_EQ(d.size(), g.rows());
        EXPECT_EQ(f.dim(), static_cast<int>(g.rows()));
        EXPECT_TRUE(same_class(det_square_class(f), square_class(determinant(g), p))) << f.str();
        if (p.is_infinite()) {
            const auto neg = std::count_if(d.begin(), d.end(), [](const Rational& x) { return x < 0; });
            EXPECT_EQ(f.negative(), neg);
        } else {
            EXPECT_EQ(hasse_witt(f), double_product(d, p)) << f.str();
        }
    }
}

TEST(JordanDecompose, InvariantUnderUnimodularChangeOfBasis) {
    std::mt19937_64 rng(62);
    for (int t = 0; t < 300; ++t) {
        const std::size_t n = 1 + rng() % 4;
        const IntMatrix g = random_symmetric(rng, n);
        const IntMatrix p = random_unimodular(rng, n);
        const IntMatrix h = p * g * p.transpose();
        for (std::int64_t q : {-1, 3, 5, 7}) EXPECT_EQ(jordan_decompose(g, Place(q)), jordan_decompose(h, Place(q)));
        const auto a = jordan_decompose(g, Place(2)), b = jordan_decompose(h, Place(2));
        const auto verdict = isometric_zp(a, b);
        if (verdict) EXPECT_TRUE(*verdict) << a.str() << " vs " << b.str();
        EXPECT_EQ(det_square_class(a), det_square_class(b));
        EXPECT_EQ(hasse_witt(a), hasse_witt(b));
    }
}

TEST(IsometricZp, OddPrimeEquivalenceRelation) {
    std::mt19937_64 rng(63);
    std::vector<PAdicForm> forms;
    for (int t = 0; t < 40; ++t) forms.push_back(jordan_decompose(random_symmetric(rng, 2), Place(3)));
    for (const auto& a : forms) {
        EXPECT_EQ(isometric_zp(a, a), true);
        for (const auto& b : forms) {
            EXPECT_EQ(isometric_zp(a, b), isometric_zp(b, a));
            for (const auto& c : forms)
                if (*isometric_zp(a, b) && *isometric_zp(b, c)) EXPECT_TRUE(*isometric_zp(a, c));
        }
    }
}

TEST(HyperbolicTensor, UnimodularTwistIsHyperbolic) {
    std::mt19937_64 rng(64);
    std::uniform_int_distribution<long> d(-9, 9);
    int tested = 0;
    while (tested < 100) {
        const std::size_t f = 1 + rng() % 4;
        IntMatrix t(f, f);
        for (std::size_t i = 0; i < f; ++i)
            for (std::size_t j = i; j < f; ++j) t(i, j) = t(j, i) = d(rng);
        if (mpz_odd_p(determinant(t).get_mpz_t()) == 0) continue;
        ++tested;
        IntMatrix k(2 * f, 2 * f);
        for (std::size_t i = 0; i < f; ++i)
            for (std::size_t j = 0; j < f; ++j) k(i, f + j) = k(f + i, j) = t(i, j);
        const auto lhs = jordan_decompose(k, Place(2));
        EXPECT_EQ(isometric_zp(lhs, hyperbolic_sum(static_cast<int>(f), 0)), true) << lhs.str();
    }
}

TEST(HasseWitt, MatchesDirectProductOnDiagonalForms) {
    std::mt19937_64 rng(65);
    std::uniform_int_distribution<long> d(-200, 200);
    for (int t = 0; t < 300; ++t) {
        for (std::int64_t q : {2, 3, 5, 7, 11}) {
            const Place p(q);
            std::vector<Rational> entries;
            PAdicForm f(p);
            const int n = 1 + static_cast<int>(rng() % 5);
            for (int i = 0; i < n; ++i) {
                long x = 0;
                while (x == 0) x = d(rng);
                entries.emplace_back(x);
                f.add_diagonal(entries.back());
            }
            EXPECT_EQ(hasse_witt(f), double_product(entries, p)) << f.str();
        }
    }
}
