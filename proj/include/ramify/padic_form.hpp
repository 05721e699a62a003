#pragma once

// Quadratic forms over Z_p (and over R for p = -1): Jordan decomposition of
// a Gram matrix, local invariants, and isometry testing.

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"
#include "int_matrix.hpp"
#include "integer.hpp"
#include "place.hpp"
#include "residue.hpp"

namespace ramify {

// One Jordan constituent p^scale * (unimodular block).
struct JordanBlock {
    int scale = 0;
    std::vector<long> units;  // odd p: square-class tags in {1, u_p}; p = 2: residues mod 8
    int u_blocks = 0;         // p = 2: copies of U = [[0,1],[1,0]]
    int v_blocks = 0;         // p = 2: copies of V = [[2,1],[1,2]]

    int dim() const { return static_cast<int>(units.size()) + 2 * (u_blocks + v_blocks); }
    bool odd_type() const { return !units.empty(); }
    friend bool operator==(const JordanBlock&, const JordanBlock&) = default;
};

struct SquareClass {
    int valuation = 0;
    long unit = 1;  // odd p: tag in {1, u_p}; p = 2: residue mod 8; p = -1: sign
    friend bool operator==(const SquareClass&, const SquareClass&) = default;
};

class PAdicForm {
   public:
    explicit PAdicForm(Place p) : p_(p), u_(nonresidue_unit(p).get_si()) {}

    static PAdicForm signature(int positive, int negative) {
        PAdicForm f(Place::infinite());
        f.pos_ = positive;
        f.neg_ = negative;
        return f;
    }

    const Place& place() const noexcept { return p_; }
    const std::vector<JordanBlock>& jordan() const noexcept { return blocks_; }
    int positive() const noexcept { return pos_; }
    int negative() const noexcept { return neg_; }
    int dim() const {
        if (p_.is_infinite()) return pos_ + neg_;
        int d = 0;
        for (const auto& b : blocks_) d += b.dim();
        return d;
    }
    const JordanBlock* block_at(int scale) const {
        for (const auto& b : blocks_)
            if (b.scale == scale) return &b;
        return nullptr;
    }

    // Appends <a> for a nonzero rational a.
    PAdicForm& add_diagonal(const Rational& a) {
        if (a == 0) throw invalid_argument("PAdicForm: zero diagonal entry");
        if (p_.is_infinite()) {
            (a > 0 ? pos_ : neg_) += 1;
            return *this;
        }
        int v;
        Integer unit;
        detail::split_unit(a, p_.prime(), v, unit);
        long tag;
        if (p_.prime() == 2)
            tag = static_cast<long>(reduce(unit, 8));
        else
            tag = legendre(unit, p_.value()) == 1 ? 1 : u_;
        block(v).units.push_back(tag);
        normalize();
        return *this;
    }
    PAdicForm& add_u(int scale, int count = 1) {
        require_dyadic();
        if (count > 0) block(scale).u_blocks += count;
        normalize();
        return *this;
    }
    PAdicForm& add_v(int scale, int count = 1) {
        require_dyadic();
        if (count > 0) block(scale).v_blocks += count;
        normalize();
        return *this;
    }

    // p^s * (this form).
    PAdicForm scaled(int s) const {
        PAdicForm out = *this;
        if (p_.is_infinite()) return out;
        for (auto& b : out.blocks_) b.scale += s;
        return out;
    }

    friend PAdicForm operator+(const PAdicForm& a, const PAdicForm& b) {
        if (a.p_ != b.p_) throw invalid_argument("PAdicForm: orthogonal sum over different primes");
        PAdicForm out = a;
        out.pos_ += b.pos_;
        out.neg_ += b.neg_;
        for (const auto& blk : b.blocks_) {
            auto& dst = out.block(blk.scale);
            dst.units.insert(dst.units.end(), blk.units.begin(), blk.units.end());
            dst.u_blocks += blk.u_blocks;
            dst.v_blocks += blk.v_blocks;
        }
        out.normalize();
        return out;
    }

    friend bool operator==(const PAdicForm& a, const PAdicForm& b) {
        return a.p_ == b.p_ && a.blocks_ == b.blocks_ && a.pos_ == b.pos_ && a.neg_ == b.neg_;
    }

    // "<2> + 5*<2>", "<1,5> + 2*U", "sig(3,1)"; the empty form is "0".
    std::string str() const {
        if (p_.is_infinite()) return "sig(" + std::to_string(pos_) + "," + std::to_string(neg_) + ")";
        std::vector<std::string> terms;
        for (const auto& b : blocks_) {
            std::string prefix;
            if (b.scale != 0) prefix = ipow(Integer(static_cast<unsigned long>(p_.prime())), b.scale).get_str() + "*";
            if (!b.units.empty()) {
                std::string s = prefix + "<";
                for (std::size_t i = 0; i < b.units.size(); ++i) s += (i ? "," : "") + std::to_string(b.units[i]);
                terms.push_back(s + ">");
            }
            for (int i = 0; i < b.u_blocks; ++i) terms.push_back(prefix + "U");
            for (int i = 0; i < b.v_blocks; ++i) terms.push_back(prefix + "V");
        }
        if (terms.empty()) return "0";
        std::string out = terms[0];
        for (std::size_t i = 1; i < terms.size(); ++i) out += " + " + terms[i];
        return out;
    }

   private:
    void require_dyadic() const {
        if (p_.is_infinite() || p_.prime() != 2) throw invalid_argument("PAdicForm: U and V blocks exist only over Z_2");
    }

    JordanBlock& block(int scale) {
        if (scale < 0) throw invalid_argument("PAdicForm: negative scale");
        for (auto& b : blocks_)
            if (b.scale == scale) return b;
        blocks_.push_back(JordanBlock{scale, {}, 0, 0});
        return blocks_.back();
    }

    void normalize() {
        if (p_.is_infinite()) return;
        std::erase_if(blocks_, [](const JordanBlock& b) { return b.dim() == 0; });
        std::sort(blocks_.begin(), blocks_.end(), [](const auto& a, const auto& b) { return a.scale < b.scale; });
        for (auto& b : blocks_) {
            if (p_.prime() == 2) {
                std::sort(b.units.begin(), b.units.end());
                continue;
            }
            // <t_1, ..., t_k> is isometric to <1, ..., 1, t_1 ... t_k> over Z_p, p odd.
            const auto nonres = std::count(b.units.begin(), b.units.end(), u_);
            std::fill(b.units.begin(), b.units.end(), 1L);
            if (nonres % 2) b.units.back() = u_;
        }
    }

    Place p_;
    long u_;
    std::vector<JordanBlock> blocks_;
    int pos_ = 0, neg_ = 0;
};

namespace detail {

using RatMatrix = std::vector<std::vector<Rational>>;

inline int rat_valuation(const Rational& a, std::uint64_t p) {
    int v;
    Integer u;
    split_unit(a, p, v, u);
    return v;
}

// Removes index i from `active` after splitting off the pivot M_ii.
inline void eliminate_one(RatMatrix& m, std::vector<std::size_t>& active, std::size_t i) {
    for (auto k : active) {
        if (k == i || m[k][i] == 0) continue;
        const Rational c = m[k][i] / m[i][i];
        for (auto l : active) m[k][l] -= c * m[i][l];
    }
    for (auto k : active)
        if (k != i) m[i][k] = m[k][i] = 0;
    std::erase(active, i);
}

inline void eliminate_two(RatMatrix& m, std::vector<std::size_t>& active, std::size_t i, std::size_t j) {
    const Rational a = m[i][i], b = m[i][j], c = m[j][j];
    const Rational det = a * c - b * b;
    for (auto k : active) {
        if (k == i || k == j) continue;
        // Row k of the complement: M_k - (M_ki, M_kj) B^{-1} (rows i, j).
        const Rational x = (m[k][i] * c - m[k][j] * b) / det;
        const Rational y = (m[k][j] * a - m[k][i] * b) / det;
        for (auto l : active) {
            if (l == i || l == j) continue;
            m[k][l] -= x * m[i][l] + y * m[j][l];
        }
    }
    std::erase(active, i);
    std::erase(active, j);
}

// e_i <- e_i + e_j as a congruence.
inline void add_basis_vector(RatMatrix& m, const std::vector<std::size_t>& active, std::size_t i, std::size_t j) {
    for (auto l : active) m[i][l] += m[j][l];
    for (auto l : active) m[l][i] += m[l][j];
}

}  // namespace detail

// Jordan decomposition of the form with Gram matrix g over Z_p, or the
// signature when p = -1.
inline PAdicForm jordan_decompose(const IntMatrix& g, const Place& p) {
    if (!g.is_symmetric()) throw invalid_argument("jordan_decompose: Gram matrix must be square and symmetric");
    if (determinant(g) == 0) throw invalid_argument("jordan_decompose: singular Gram matrix");
    const std::size_t n = g.rows();
    detail::RatMatrix m(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m[i][j] = Rational(g(i, j));
    std::vector<std::size_t> active(n);
    for (std::size_t i = 0; i < n; ++i) active[i] = i;

    PAdicForm out(p);
    while (!active.empty()) {
        if (p.is_infinite()) {
            auto it = std::find_if(active.begin(), active.end(), [&](auto i) { return m[i][i] != 0; });
            if (it == active.end()) {
                // All diagonal entries vanish; some off-diagonal one does not.
                for (auto i : active)
                    for (auto j : active)
                        if (it == active.end() && i != j && m[i][j] != 0) {
                            detail::add_basis_vector(m, active, i, j);
                            it = std::find(active.begin(), active.end(), i);
                        }
            }
            const std::size_t i = *it;
            out.add_diagonal(m[i][i]);
            detail::eliminate_one(m, active, i);
            continue;
        }
        const std::uint64_t q = p.prime();
        std::optional<int> best;
        std::size_t bi = 0, bj = 0;
        for (auto i : active)
            for (auto j : active) {
                if (m[i][j] == 0) continue;
                const int v = detail::rat_valuation(m[i][j], q);
                // Ties go to diagonal entries, which are scanned when i == j.
                if (!best || v < *best || (v == *best && i == j && bi != bj)) {
                    best = v;
                    bi = i;
                    bj = j;
                }
            }
        if (bi == bj) {
            out.add_diagonal(m[bi][bi]);
            detail::eliminate_one(m, active, bi);
        } else if (q != 2) {
            detail::add_basis_vector(m, active, bi, bj);
            out.add_diagonal(m[bi][bi]);
            detail::eliminate_one(m, active, bi);
        } else {
            const Rational det = m[bi][bi] * m[bj][bj] - m[bi][bj] * m[bi][bj];
            int v;
            Integer unit;
            detail::split_unit(det, 2, v, unit);
            const long r = static_cast<long>(reduce(unit, 8));
            if (v != 2 * *best || (r != 3 && r != 7))
                throw internal_consistency("jordan_decompose: even 2-adic block is not unimodular");
            if (r == 7)
                out.add_u(*best);
            else
                out.add_v(*best);
            detail::eliminate_two(m, active, bi, bj);
        }
    }
    return out;
}

inline SquareClass det_square_class(const PAdicForm& f) {
    const Place& p = f.place();
    if (p.is_infinite()) return {0, f.negative() % 2 ? -1L : 1L};
    SquareClass out;
    const long u = nonresidue_unit(p).get_si();
    int nonres = 0;
    long r8 = 1;
    for (const auto& b : f.jordan()) {
        out.valuation += b.scale * b.dim();
        for (long t : b.units) {
            if (p.prime() == 2)
                r8 = r8 * t % 8;
            else if (t == u)
                ++nonres;
        }
        for (int i = 0; i < b.u_blocks; ++i) r8 = r8 * 7 % 8;
        for (int i = 0; i < b.v_blocks; ++i) r8 = r8 * 3 % 8;
    }
    out.unit = p.prime() == 2 ? r8 : (nonres % 2 ? u : 1L);
    return out;
}

// Rational diagonal entries of a form with the same Q_p-isometry class.
inline std::vector<Rational> rational_diagonal(const PAdicForm& f) {
    std::vector<Rational> d;
    if (f.place().is_infinite()) {
        d.assign(f.positive(), Rational(1));
        d.insert(d.end(), f.negative(), Rational(-1));
        return d;
    }
    const Integer p(static_cast<unsigned long>(f.place().prime()));
    for (const auto& b : f.jordan()) {
        const Integer s = ipow(p, b.scale);
        for (long t : b.units) d.emplace_back(s * t);
        // U = 2xy is <1, -1> over Q_2; V = [[2,1],[1,2]] is <2, 3/2> ~ <2, 6>.
        for (int i = 0; i < b.u_blocks; ++i) {
            d.emplace_back(s);
            d.emplace_back(-s);
        }
        for (int i = 0; i < b.v_blocks; ++i) {
            d.emplace_back(2 * s);
            d.emplace_back(6 * s);
        }
    }
    return d;
}

inline int hasse_witt(const PAdicForm& f) {
    if (f.place().is_infinite()) throw invalid_argument("hasse_witt: finite prime required");
    const auto d = rational_diagonal(f);
    int s = 1;
    for (std::size_t i = 0; i < d.size(); ++i)
        for (std::size_t j = i + 1; j < d.size(); ++j) s *= hilbert(d[i], d[j], f.place());
    return s;
}

namespace detail {

// Conway-Sloane data of one 2-adic Jordan constituent.
struct DyadicSymbol {
    int rank = 0;
    bool odd = false;
    int sign = 1;
    int oddity = 0;
};

inline DyadicSymbol dyadic_symbol(const JordanBlock* b) {
    DyadicSymbol s;
    if (!b) return s;
    s.rank = b->dim();
    s.odd = b->odd_type();
    long det = 1;
    for (long t : b->units) {
        det = det * t % 8;
        s.oddity = static_cast<int>((s.oddity + t) % 8);
    }
    for (int i = 0; i < b->u_blocks; ++i) det = det * 7 % 8;
    for (int i = 0; i < b->v_blocks; ++i) det = det * 3 % 8;
    s.sign = (det == 1 || det == 7) ? 1 : -1;
    return s;
}

// Canonical invariants of a 2-adic form supported on scales {0, 1}.
inline std::vector<int> dyadic_key(const PAdicForm& f) {
    DyadicSymbol s0 = dyadic_symbol(f.block_at(0)), s1 = dyadic_symbol(f.block_at(1));
    const bool same_train = s0.rank > 0 && s1.rank > 0 && (s0.odd || s1.odd);
    if (same_train && s1.sign < 0) {
        // Sign walking: flip both signs and move the oddity of the compartment by 4.
        s1.sign = 1;
        s0.sign = -s0.sign;
        (s0.odd ? s0 : s1).oddity = ((s0.odd ? s0 : s1).oddity + 4) % 8;
    }
    std::vector<int> key{s0.rank, s0.odd, s0.sign, s1.rank, s1.odd, s1.sign};
    if (s0.rank > 0 && s1.rank > 0 && s0.odd && s1.odd) {
        key.push_back((s0.oddity + s1.oddity) % 8);
    } else {
        key.push_back(s0.oddity);
        key.push_back(s1.oddity);
    }
    return key;
}

}  // namespace detail

// Z_p-isometry. Complete for odd p and p = -1; over Z_2 decided when both
// forms live on scales {0, 1}, indeterminate (nullopt) otherwise.
inline std::optional<bool> isometric_zp(const PAdicForm& a, const PAdicForm& b) {
    if (a.place() != b.place()) throw invalid_argument("isometric_zp: forms over different primes");
    if (a.place().is_infinite()) return a.positive() == b.positive() && a.negative() == b.negative();
    const auto& ja = a.jordan();
    const auto& jb = b.jordan();
    if (ja.size() != jb.size()) return false;
    for (std::size_t i = 0; i < ja.size(); ++i)
        if (ja[i].scale != jb[i].scale || ja[i].dim() != jb[i].dim()) return false;
    if (a.place().prime() != 2) return ja == jb;

    for (std::size_t i = 0; i < ja.size(); ++i)
        if (ja[i].odd_type() != jb[i].odd_type()) return false;
    for (const auto& blk : ja)
        if (blk.scale > 1) return std::nullopt;
    const bool same = detail::dyadic_key(a) == detail::dyadic_key(b);
    if (same && (det_square_class(a) != det_square_class(b) || hasse_witt(a) != hasse_witt(b)))
        throw internal_consistency("isometric_zp: equal 2-adic symbols with different determinant or Hasse-Witt invariant");
    return same;
}

// k copies of U at the given scale over Z_2.
inline PAdicForm hyperbolic_sum(int k, int scale = 1) {
    if (k < 0) throw invalid_argument("hyperbolic_sum: negative count");
    PAdicForm f(Place(2));
    f.add_u(scale, k);
    return f;
}

}  // namespace ramify
