#pragma once

// Orders of Q[x]/(f) as lattices in the power basis, their multiplication
// tables, and the Round-2 (Pohst-Zassenhaus) enlargement to a p-maximal order.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "fp_linalg.hpp"
#include "int_matrix.hpp"
#include "int_poly.hpp"
#include "integer.hpp"

namespace ramify {

// Full-rank lattice with basis rows num / den in power-basis coordinates.
// Canonical form: num lower triangular with positive diagonal, entries below
// the diagonal reduced modulo it, and gcd(num, den) = 1.
struct Lattice {
    IntMatrix num;
    Integer den = 1;

    std::size_t rank() const { return num.rows(); }
    friend bool operator==(const Lattice&, const Lattice&) = default;
};

// Structure constants: table[i][j] holds the coordinates of w_i * w_j.
using MultTable = std::vector<std::vector<std::vector<Integer>>>;

namespace detail {

// Reverse both orders so that the upper HNF becomes lower triangular.
inline IntMatrix reverse_both(const IntMatrix& m) {
    IntMatrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(m.rows() - 1 - i, m.cols() - 1 - j) = m(i, j);
    return r;
}

// Upper HNF of the generators, truncated to `n` rows (full rank assumed).
inline IntMatrix hnf_square(const IntMatrix& gens, std::size_t n) {
    IntMatrix h = hnf(gens);
    IntMatrix out(n, h.cols());
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < h.cols(); ++j) out(i, j) = h(i, j);
        if (out(i, i) == 0) throw internal_consistency("hnf_square: generators do not have full rank");
    }
    return out;
}

}  // namespace detail

// Canonical lattice spanned by the rows of gens / den.
inline Lattice make_lattice(const IntMatrix& gens, const Integer& den) {
    const std::size_t n = gens.cols();
    IntMatrix upper = detail::hnf_square(detail::reverse_both(gens), n);
    // reverse_both on an m x n matrix maps rows to the end; undo on the square part.
    IntMatrix num = detail::reverse_both(upper);
    Integer g = den;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) g = gcd(g, num(i, j));
    Lattice out{num, den};
    if (g != 1) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) mpz_divexact(out.num(i, j).get_mpz_t(), num(i, j).get_mpz_t(), g.get_mpz_t());
        out.den = den / g;
    }
    if (out.den < 0) throw internal_consistency("make_lattice: negative denominator");
    return out;
}

// Product of integer power-basis vectors modulo monic f.
inline std::vector<Integer> mul_mod_poly(const std::vector<Integer>& a, const std::vector<Integer>& b, const IntPoly& f) {
    const int n = f.degree();
    std::vector<Integer> prod(2 * n - 1, Integer(0));
    for (int i = 0; i < n; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; j < n; ++j) prod[i + j] += a[i] * b[j];
    }
    for (int k = 2 * n - 2; k >= n; --k) {
        if (prod[k] == 0) continue;
        const Integer t = prod[k];
        for (int j = 0; j < n; ++j) prod[k - n + j] -= t * f.coeff(j);
        prod[k] = 0;
    }
    prod.resize(n);
    return prod;
}

// Solve c * num = v for lower-triangular num; throws if c is not integral.
inline std::vector<Integer> coords_lower(const IntMatrix& num, const std::vector<Rational>& v) {
    const std::size_t n = num.rows();
    std::vector<Rational> c(n);
    for (std::size_t ii = n; ii-- > 0;) {
        Rational s = v[ii];
        for (std::size_t k = ii + 1; k < n; ++k) s -= c[k] * num(k, ii);
        c[ii] = s / num(ii, ii);
    }
    std::vector<Integer> out;
    for (auto& x : c) {
        x.canonicalize();
        if (x.get_den() != 1) throw internal_consistency("coords_lower: element not in lattice");
        out.push_back(x.get_num());
    }
    return out;
}

// Solve c * h = w for upper-triangular full-rank h over the integers.
inline std::vector<Integer> coords_upper(const IntMatrix& h, const std::vector<Integer>& w) {
    const std::size_t n = h.rows();
    std::vector<Integer> c(n);
    for (std::size_t j = 0; j < n; ++j) {
        Integer s = w[j];
        for (std::size_t k = 0; k < j; ++k) s -= c[k] * h(k, j);
        if (!divides(h(j, j), s)) throw internal_consistency("coords_upper: element not in lattice");
        c[j] = s / h(j, j);
    }
    return c;
}

inline MultTable structure_constants(const Lattice& order, const IntPoly& f) {
    const std::size_t n = order.rank();
    std::vector<std::vector<Integer>> rows(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) rows[i].push_back(order.num(i, j));
    MultTable table(n, std::vector<std::vector<Integer>>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            auto prod = mul_mod_poly(rows[i], rows[j], f);
            // (num_i num_j / den^2) = c * num / den  =>  c * num = prod / den.
            std::vector<Rational> v;
            for (auto& x : prod) v.push_back(make_rational(x, order.den));
            table[i][j] = coords_lower(order.num, v);
            table[j][i] = table[i][j];
        }
    }
    return table;
}

// Product of two elements given by coordinates, reduced mod q.
inline fp::Row mul_mod_q(const fp::Row& a, const fp::Row& b, const std::vector<std::vector<fp::Row>>& tq, std::uint64_t q) {
    const std::size_t n = a.size();
    fp::Row out(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (b[j] == 0) continue;
            const std::uint64_t ab = mulmod(a[i], b[j], q);
            for (std::size_t k = 0; k < n; ++k) out[k] = addmod(out[k], mulmod(ab, tq[i][j][k], q), q);
        }
    }
    return out;
}

inline std::vector<std::vector<fp::Row>> reduce_table(const MultTable& t, std::uint64_t q) {
    const std::size_t n = t.size();
    std::vector<std::vector<fp::Row>> out(n, std::vector<fp::Row>(n, fp::Row(n)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) out[i][j][k] = reduce(t[i][j][k], q);
    return out;
}

inline fp::Row pow_mod_q(fp::Row base, Integer e, const std::vector<std::vector<fp::Row>>& tq, const fp::Row& one, std::uint64_t q) {
    fp::Row result = one;
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) result = mul_mod_q(result, base, tq, q);
        base = mul_mod_q(base, base, tq, q);
        e >>= 1;
    }
    return result;
}

// Coordinates of 1 in the order basis.
inline fp::Row unit_coords(const Lattice& order, std::uint64_t q) {
    std::vector<Rational> v(order.rank(), Rational(0));
    v[0] = Rational(order.den);
    auto c = coords_lower(order.num, v);
    fp::Row out;
    for (auto& x : c) out.push_back(reduce(x, q));
    return out;
}

// Basis (over F_q, in order coordinates) of the radical of O/qO: the kernel
// of x -> x^(q^k) with q^k >= n.
inline fp::Matrix radical_mod_q(const MultTable& table, const fp::Row& one, std::uint64_t q) {
    const std::size_t n = table.size();
    auto tq = reduce_table(table, q);
    Integer power(static_cast<unsigned long>(q));
    while (power < static_cast<unsigned long>(n)) power *= static_cast<unsigned long>(q);
    fp::Matrix image(n);
    for (std::size_t i = 0; i < n; ++i) {
        fp::Row e(n, 0);
        e[i] = 1;
        image[i] = pow_mod_q(e, power, tq, one, q);
    }
    return fp::left_kernel(image, q);
}

// One Round-2 step: the multiplier ring of the q-radical, or nullopt when the
// order is already q-maximal.
inline std::optional<Lattice> enlarge_at(const Lattice& order, const IntPoly& f, std::uint64_t q) {
    const std::size_t n = order.rank();
    const MultTable table = structure_constants(order, f);
    const fp::Row one = unit_coords(order, q);
    const fp::Matrix rad = radical_mod_q(table, one, q);
    if (rad.empty()) return std::nullopt;  // O/qO reduced: q unramified, order is q-maximal

    // Radical ideal I = rad + qO in order coordinates.
    IntMatrix gens(rad.size() + n, n);
    for (std::size_t i = 0; i < rad.size(); ++i)
        for (std::size_t j = 0; j < n; ++j) gens(i, j) = static_cast<unsigned long>(rad[i][j]);
    for (std::size_t j = 0; j < n; ++j) gens(rad.size() + j, j) = static_cast<unsigned long>(q);
    const IntMatrix ideal = detail::hnf_square(gens, n);

    // U/qO = { x : x I in qI } as the left kernel of x -> (x b_j in I-coords mod q)_j.
    fp::Matrix action(n, fp::Row(n * n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<Integer> w(n, Integer(0));
            for (std::size_t k = 0; k < n; ++k) {
                if (ideal(j, k) == 0) continue;
                for (std::size_t l = 0; l < n; ++l) w[l] += ideal(j, k) * table[i][k][l];
            }
            auto c = coords_upper(ideal, w);
            for (std::size_t l = 0; l < n; ++l) action[i][j * n + l] = reduce(c[l], q);
        }
    }
    const fp::Matrix kernel = fp::left_kernel(action, q);
    if (kernel.empty()) return std::nullopt;

    IntMatrix ugens(kernel.size() + n, n);
    for (std::size_t i = 0; i < kernel.size(); ++i)
        for (std::size_t j = 0; j < n; ++j) ugens(i, j) = static_cast<unsigned long>(kernel[i][j]);
    for (std::size_t j = 0; j < n; ++j) ugens(kernel.size() + j, j) = static_cast<unsigned long>(q);
    const IntMatrix u = detail::hnf_square(ugens, n);
    // New order = U / q, converted to power-basis coordinates.
    return make_lattice(u * order.num, order.den * static_cast<unsigned long>(q));
}

// The q-maximal order containing `order`.
inline Lattice q_maximal(Lattice order, const IntPoly& f, std::uint64_t q) {
    while (auto bigger = enlarge_at(order, f, q)) order = std::move(*bigger);
    return order;
}

}  // namespace ramify
