#ifndef REALSAMPLE_GROEBNER_IDEAL_HPP
#define REALSAMPLE_GROEBNER_IDEAL_HPP

#include <realsample/errors.hpp>
#include <realsample/groebner/buchberger.hpp>
#include <realsample/random.hpp>

#include <algorithm>
#include <bit>
#include <cstdint>
#include <deque>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace realsample {

/// Krull dimension from the leading-term ideal: the size of a largest set S of
/// variables such that no leading monomial uses only variables of S.
/// Returns -1 for the unit ideal.
inline int dimension(const GroebnerBasis& g) {
    if (g.is_unit()) return -1;
    const int n = static_cast<int>(g.ring().size());
    std::vector<std::uint64_t> supports;
    for (const auto& m : g.leading_monomials()) supports.push_back(m.support_mask());
    int best = -1;
    auto independent = [&](std::uint64_t s) {
        for (auto sup : supports)
            if ((sup & ~s) == 0) return false;
        return true;
    };
    auto dfs = [&](auto&& self, int idx, std::uint64_t s, int size) -> void {
        if (size + (n - idx) <= best) return;
        if (idx == n) {
            best = size;
            return;
        }
        std::uint64_t with = s | (std::uint64_t{1} << idx);
        if (independent(with)) self(self, idx + 1, with, size + 1);
        self(self, idx + 1, s, size);
    };
    dfs(dfs, 0, 0, 0);
    return best;
}

/// Monomials outside the leading-term ideal of a zero-dimensional ideal,
/// sorted increasingly by the basis order.
class QuotientBasis {
public:
    QuotientBasis(Ring ring, std::vector<Monomial> monomials) : ring_(std::move(ring)), monomials_(std::move(monomials)) {
        for (std::size_t i = 0; i < monomials_.size(); ++i) index_.emplace(monomials_[i], i);
    }

    const Ring& ring() const noexcept { return ring_; }
    const std::vector<Monomial>& monomials() const noexcept { return monomials_; }
    std::size_t size() const noexcept { return monomials_.size(); }

    /// Position of m in the basis, or -1 when m is not a standard monomial.
    long index_of(const Monomial& m) const {
        auto it = index_.find(m);
        return it == index_.end() ? -1 : static_cast<long>(it->second);
    }

private:
    Ring ring_;
    std::vector<Monomial> monomials_;
    std::unordered_map<Monomial, std::size_t, MonomialHash> index_;
};

inline bool is_standard_monomial(const Monomial& m, const GroebnerBasis& g) {
    for (const auto& lm : g.leading_monomials())
        if (lm.divides(m)) return false;
    return true;
}

inline QuotientBasis quotient_basis(const GroebnerBasis& g) {
    if (dimension(g) != 0) throw NotZeroDimensional("quotient_basis: ideal is not zero-dimensional");
    const std::size_t n = g.ring().size();
    std::vector<Monomial> out;
    std::unordered_set<Monomial, MonomialHash> seen;
    std::deque<Monomial> queue{Monomial(n)};
    seen.insert(queue.front());
    while (!queue.empty()) {
        Monomial m = std::move(queue.front());
        queue.pop_front();
        for (std::size_t v = 0; v < n; ++v) {
            Monomial next = m * Monomial::unit(n, v);
            if (seen.count(next) || !is_standard_monomial(next, g)) continue;
            seen.insert(next);
            queue.push_back(next);
        }
        out.push_back(std::move(m));
    }
    const MonomialOrder& order = g.order();
    std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) { return order.compare(a, b) < 0; });
    return QuotientBasis(g.ring(), std::move(out));
}

namespace detail {

using QVector = std::vector<Rational>;

/// Incremental echelon form that remembers how each row was built from the
/// inserted vectors.
class Echelon {
public:
    explicit Echelon(std::size_t dim) : dim_(dim) {}

    /// Reduces v against the stored rows. Returns true if v is in their span;
    /// then `combo` holds coefficients with v = sum combo_j w_j.
    bool reduce(QVector v, QVector& combo) const {
        combo.assign(count_, Rational(0));
        for (const auto& row : rows_) {
            const Rational& x = v[row.pivot];
            if (x == 0) continue;
            Rational factor = x / row.vec[row.pivot];
            for (std::size_t k = row.pivot; k < dim_; ++k)
                if (row.vec[k] != 0) v[k] -= factor * row.vec[k];
            for (std::size_t j = 0; j < row.combo.size(); ++j)
                if (row.combo[j] != 0) combo[j] += factor * row.combo[j];
        }
        for (const auto& x : v)
            if (x != 0) return false;
        return true;
    }

    /// Inserts w (assumed independent of the stored rows) as w_count.
    void insert(QVector v) {
        QVector combo(count_ + 1, Rational(0));
        combo[count_] = 1;
        for (const auto& row : rows_) {
            const Rational& x = v[row.pivot];
            if (x == 0) continue;
            Rational factor = x / row.vec[row.pivot];
            for (std::size_t k = row.pivot; k < dim_; ++k)
                if (row.vec[k] != 0) v[k] -= factor * row.vec[k];
            for (std::size_t j = 0; j < row.combo.size(); ++j)
                if (row.combo[j] != 0) combo[j] -= factor * row.combo[j];
        }
        std::size_t pivot = 0;
        while (pivot < dim_ && v[pivot] == 0) ++pivot;
        if (pivot == dim_) throw std::logic_error("Echelon::insert: dependent vector");
        rows_.push_back({std::move(v), std::move(combo), pivot});
        ++count_;
        for (auto& row : rows_) row.combo.resize(count_, Rational(0));
    }

    std::size_t size() const noexcept { return count_; }

private:
    struct Row {
        QVector vec;
        QVector combo;  // vec = sum combo_j w_j
        std::size_t pivot;
    };
    std::size_t dim_;
    std::size_t count_ = 0;
    std::vector<Row> rows_;
};

/// Columns NF(x_v * b_k) in coordinates of the quotient basis.
inline std::vector<QVector> multiplication_matrix(const GroebnerBasis& g, const QuotientBasis& qb, std::size_t v) {
    const std::size_t n = g.ring().size(), D = qb.size();
    std::vector<QVector> cols(D, QVector(D, Rational(0)));
    for (std::size_t k = 0; k < D; ++k) {
        Monomial m = qb.monomials()[k] * Monomial::unit(n, v);
        long idx = qb.index_of(m);
        if (idx >= 0) {
            cols[k][static_cast<std::size_t>(idx)] = 1;
            continue;
        }
        Polynomial nf = normal_form(Polynomial::monomial(g.ring(), m), g);
        for (const auto& t : nf.terms()) {
            long j = qb.index_of(t.mono);
            if (j < 0) throw std::logic_error("normal form left the staircase");
            cols[k][static_cast<std::size_t>(j)] = t.coeff;
        }
    }
    return cols;
}

inline QVector apply_columns(const std::vector<QVector>& cols, const QVector& x) {
    QVector out(x.size(), Rational(0));
    for (std::size_t k = 0; k < x.size(); ++k) {
        if (x[k] == 0) continue;
        for (std::size_t r = 0; r < x.size(); ++r)
            if (cols[k][r] != 0) out[r] += x[k] * cols[k][r];
    }
    return out;
}

/// Reduced degrevlex basis of the elimination ideal of a zero-dimensional
/// ideal, by linear algebra on its quotient (FGLM restricted to the kept
/// variables).
inline std::vector<Polynomial> eliminate_zero_dimensional(const GroebnerBasis& g, const std::vector<std::size_t>& kept,
                                                          const Ring& sub) {
    QuotientBasis qb = quotient_basis(g);
    const std::size_t D = qb.size(), m = kept.size();
    std::vector<std::vector<QVector>> mult;
    for (auto v : kept) mult.push_back(multiplication_matrix(g, qb, v));
    const MonomialOrder target = MonomialOrder::degrevlex(sub);
    auto less = [&](const Monomial& a, const Monomial& b) { return target.compare(a, b) < 0; };

    Echelon ech(D);
    std::vector<Monomial> staircase;
    std::unordered_map<Monomial, QVector, MonomialHash> vectors;
    std::vector<Monomial> leads;
    std::vector<Polynomial> out;
    std::vector<Monomial> todo{Monomial(m)};
    std::unordered_set<Monomial, MonomialHash> queued{Monomial(m)};
    QVector one(D, Rational(0));
    one[static_cast<std::size_t>(qb.index_of(Monomial(g.ring().size())))] = 1;
    while (!todo.empty()) {
        auto it = std::min_element(todo.begin(), todo.end(), less);
        Monomial mono = *it;
        todo.erase(it);
        bool divisible = false;
        for (const auto& l : leads) divisible = divisible || l.divides(mono);
        if (divisible) continue;
        QVector vec;
        if (mono.is_one()) {
            vec = one;
        } else {
            for (std::size_t v = 0; v < m; ++v) {
                if (mono[v] == 0) continue;
                auto prev = vectors.find(mono / Monomial::unit(m, v));
                if (prev == vectors.end()) continue;
                vec = apply_columns(mult[v], prev->second);
                break;
            }
        }
        QVector combo;
        if (ech.reduce(vec, combo)) {
            std::vector<Term> terms{{mono, Rational(1)}};
            for (std::size_t j = 0; j < combo.size(); ++j)
                if (combo[j] != 0) terms.push_back({staircase[j], -combo[j]});
            out.push_back(Polynomial::from_terms(sub, std::move(terms)));
            leads.push_back(mono);
            continue;
        }
        ech.insert(vec);
        staircase.push_back(mono);
        vectors.emplace(mono, std::move(vec));
        for (std::size_t v = 0; v < m; ++v) {
            Monomial next = mono * Monomial::unit(m, v);
            if (queued.insert(next).second) todo.push_back(std::move(next));
        }
    }
    return out;
}

}  // namespace detail

/// Elimination through a block order with `drop_vars` first; the generators
/// free of them, over the remaining variables.
inline std::vector<Polynomial> eliminate_by_block_order(const std::vector<Polynomial>& gens, const Ring& ring,
                                                        const std::vector<std::string>& drop_vars) {
    std::vector<bool> dropped(ring.size(), false);
    for (const auto& v : drop_vars) dropped[ring.require_index(v)] = true;
    std::vector<std::string> kept;
    for (std::size_t i = 0; i < ring.size(); ++i)
        if (!dropped[i]) kept.push_back(ring.name(i));
    Ring sub(kept);
    GroebnerBasis g = groebner_basis(gens, MonomialOrder::block_elimination(ring, drop_vars));
    std::vector<Polynomial> out;
    for (const auto& p : g.generators()) {
        bool free = true;
        for (std::size_t i = 0; i < ring.size() && free; ++i)
            if (dropped[i] && p.involves(i)) free = false;
        if (free) out.push_back(p.map_to(sub));
    }
    return out;
}

/// Generators of the ideal intersected with the subring that omits
/// `drop_vars`, expressed over that subring. Zero-dimensional ideals go
/// through their quotient algebra; otherwise a block elimination order.
inline std::vector<Polynomial> eliminate(const std::vector<Polynomial>& gens, const Ring& ring,
                                         const std::vector<std::string>& drop_vars) {
    std::vector<bool> dropped(ring.size(), false);
    for (const auto& v : drop_vars) dropped[ring.require_index(v)] = true;
    std::vector<std::string> kept;
    std::vector<std::size_t> kept_index;
    for (std::size_t i = 0; i < ring.size(); ++i)
        if (!dropped[i]) {
            kept.push_back(ring.name(i));
            kept_index.push_back(i);
        }
    Ring sub(kept);
    GroebnerBasis grevlex = groebner_basis(gens, MonomialOrder::degrevlex(ring));
    if (grevlex.is_unit()) return {Polynomial::constant(sub, 1)};
    if (dimension(grevlex) == 0) return detail::eliminate_zero_dimensional(grevlex, kept_index, sub);
    return eliminate_by_block_order(gens, ring, drop_vars);
}

inline std::vector<Polynomial> eliminate(const std::vector<Polynomial>& gens, const std::vector<std::string>& drop_vars) {
    if (gens.empty()) throw std::invalid_argument("eliminate: no generators to take the ring from");
    return eliminate(gens, gens.front().ring(), drop_vars);
}

inline constexpr long kSliceCoefficientBound = 997;
inline constexpr int kGenericityRetries = 5;

/// Degree of an ideal of dimension `target_dim` as the number of points (with
/// multiplicity) on a random affine slice of matching codimension.
inline long ideal_degree_by_slicing(const std::vector<Polynomial>& gens, const Ring& ring, int target_dim, Rng& rng) {
    if (target_dim < 0) throw std::invalid_argument("ideal_degree_by_slicing: negative target dimension");
    for (int attempt = 0; attempt < kGenericityRetries; ++attempt) {
        std::vector<Polynomial> sys = gens;
        for (int f = 0; f < target_dim; ++f) {
            Polynomial form = Polynomial::constant(ring, rng.uniform(-kSliceCoefficientBound, kSliceCoefficientBound));
            for (std::size_t v = 0; v < ring.size(); ++v)
                form += Rational(rng.uniform(-kSliceCoefficientBound, kSliceCoefficientBound)) * Polynomial::variable(ring, v);
            sys.push_back(std::move(form));
        }
        GroebnerBasis g = groebner_basis(sys, MonomialOrder::degrevlex(ring));
        if (dimension(g) != 0) continue;
        return static_cast<long>(quotient_basis(g).size());
    }
    throw GenericityError("ideal_degree_by_slicing: slice not zero-dimensional after " +
                          std::to_string(kGenericityRetries) + " attempts");
}

inline long ideal_degree_by_slicing(const std::vector<Polynomial>& gens, int target_dim, Rng& rng) {
    if (gens.empty()) throw std::invalid_argument("ideal_degree_by_slicing: no generators to take the ring from");
    return ideal_degree_by_slicing(gens, gens.front().ring(), target_dim, rng);
}

}  // namespace realsample

#endif
