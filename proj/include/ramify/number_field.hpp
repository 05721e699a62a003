#pragma once

#include <utility>
#include <vector>

#include "errors.hpp"
#include "int_matrix.hpp"
#include "int_poly.hpp"
#include "integer.hpp"
#include "irreducibility.hpp"
#include "order.hpp"
#include "sturm.hpp"

namespace ramify {

struct Signature {
    int real = 0;     // r
    int complex = 0;  // s, pairs of complex embeddings
    friend bool operator==(const Signature&, const Signature&) = default;
};

// A number field Q[x]/(f) together with its maximal order. Immutable.
class NumberField {
   public:
    explicit NumberField(IntPoly min_poly) : f_(std::move(min_poly)) {
        if (f_.degree() < 1) throw invalid_argument("number field: degree must be at least 1");
        if (!f_.is_monic()) throw invalid_argument("number field: defining polynomial must be monic");
        auto report = check_irreducible(f_);
        if (report.verdict == Irreducibility::reducible) throw reducible_polynomial("reducible polynomial");
        unresolved_ = report.verdict == Irreducibility::unresolved;
        const int n = degree();
        traces_ = power_sums(f_, 2 * n - 1);
        poly_disc_ = poly_discriminant(f_);
        build_maximal_order();
        const int r = count_real_roots(f_);
        sig_ = {r, (n - r) / 2};
        gram_ = compute_gram();
        if (determinant(gram_) != disc_)
            throw internal_consistency("number field: trace Gram determinant differs from the discriminant");
    }

    const IntPoly& min_poly() const noexcept { return f_; }
    int degree() const noexcept { return f_.degree(); }
    // Integral basis: rows of basis_num() / basis_den() in the power basis of theta.
    const IntMatrix& basis_num() const noexcept { return order_.num; }
    const Integer& basis_den() const noexcept { return order_.den; }
    const Lattice& maximal_order() const noexcept { return order_; }
    const MultTable& mult_table() const noexcept { return table_; }
    const Integer& disc() const noexcept { return disc_; }
    const Integer& poly_disc() const noexcept { return poly_disc_; }
    // [O_L : Z[theta]]
    const Integer& index() const noexcept { return index_; }
    Signature signature() const noexcept { return sig_; }
    // tr(theta^k) for 0 <= k <= 2n - 2.
    const std::vector<Integer>& power_traces() const noexcept { return traces_; }
    // Gram matrix of x -> tr(x^2) on the integral basis.
    const IntMatrix& trace_gram() const noexcept { return gram_; }
    // Set when irreducibility could be neither proved nor disproved.
    bool irreducibility_unresolved() const noexcept { return unresolved_; }

    bool index_divisible_by(std::uint64_t p) const { return divides(Integer(static_cast<unsigned long>(p)), index_); }

   private:
    void build_maximal_order() {
        const int n = degree();
        order_ = Lattice{IntMatrix::identity(n), Integer(1)};
        if (n > 1) {
            for (const auto& [q, e] : factor_integer(poly_disc_)) {
                if (e < 2) continue;
                order_ = q_maximal(std::move(order_), f_, to_u64(q));
            }
        }
        Integer det_num = 1;
        for (int i = 0; i < n; ++i) det_num *= order_.num(i, i);
        Integer den_pow = ipow(order_.den, n);
        if (!divides(det_num, den_pow)) throw internal_consistency("number field: order index is not integral");
        index_ = den_pow / det_num;
        if (!divides(index_ * index_, poly_disc_)) throw internal_consistency("number field: index^2 does not divide disc(f)");
        disc_ = poly_disc_ / (index_ * index_);
        table_ = structure_constants(order_, f_);
    }

    IntMatrix compute_gram() const {
        const int n = degree();
        IntMatrix t(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) t(i, j) = traces_[i + j];
        IntMatrix g = order_.num * t * order_.num.transpose();
        const Integer den2 = order_.den * order_.den;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                if (!divides(den2, g(i, j))) throw internal_consistency("number field: trace form is not integral");
                mpz_divexact(g(i, j).get_mpz_t(), g(i, j).get_mpz_t(), den2.get_mpz_t());
            }
        return g;
    }

    IntPoly f_;
    bool unresolved_ = false;
    std::vector<Integer> traces_;
    Integer poly_disc_, disc_, index_;
    Lattice order_;
    MultTable table_;
    Signature sig_;
    IntMatrix gram_;
};

inline NumberField new_field(const IntPoly& f) { return NumberField(f); }

inline Signature signature(const NumberField& L) { return L.signature(); }

struct IntegralBasis {
    IntMatrix num;
    Integer den;
    Integer disc;
};

inline IntegralBasis integral_basis(const NumberField& L) { return {L.basis_num(), L.basis_den(), L.disc()}; }

}  // namespace ramify
