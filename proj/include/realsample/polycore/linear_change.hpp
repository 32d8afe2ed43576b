#ifndef REALSAMPLE_POLYCORE_LINEAR_CHANGE_HPP
#define REALSAMPLE_POLYCORE_LINEAR_CHANGE_HPP

#include <realsample/polycore/polynomial.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace realsample {

using RationalMatrix = std::vector<std::vector<Rational>>;

inline Rational determinant(RationalMatrix m) {
    const std::size_t n = m.size();
    Rational det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && m[piv][c] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != c) {
            std::swap(m[piv], m[c]);
            det = -det;
        }
        det *= m[c][c];
        for (std::size_t r = c + 1; r < n; ++r) {
            if (m[r][c] == 0) continue;
            Rational f = m[r][c] / m[c][c];
            for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
        }
    }
    return det;
}

/// Rank by exact Gaussian elimination; works for any rectangular matrix.
inline std::size_t matrix_rank(RationalMatrix m) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size(), cols = m[0].size();
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t piv = rank;
        while (piv < rows && m[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[rank]);
        for (std::size_t r = rank + 1; r < rows; ++r) {
            if (m[r][c] == 0) continue;
            Rational f = m[r][c] / m[rank][c];
            for (std::size_t k = c; k < cols; ++k) m[r][k] -= f * m[rank][k];
        }
        ++rank;
    }
    return rank;
}

/// An invertible square rational matrix acting on a list of variables by
/// X <- A X.
class LinearChange {
public:
    explicit LinearChange(RationalMatrix matrix) : matrix_(std::move(matrix)) {
        for (const auto& row : matrix_)
            if (row.size() != matrix_.size()) throw std::invalid_argument("linear change: matrix is not square");
        if (determinant(matrix_) == 0) throw std::invalid_argument("linear change: matrix is singular");
    }

    static LinearChange identity(std::size_t n) {
        RationalMatrix m(n, std::vector<Rational>(n, Rational(0)));
        for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
        return LinearChange(std::move(m));
    }

    std::size_t dimension() const noexcept { return matrix_.size(); }
    const RationalMatrix& matrix() const noexcept { return matrix_; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return matrix_[r][c]; }

    LinearChange inverse() const {
        const std::size_t n = matrix_.size();
        RationalMatrix a = matrix_;
        RationalMatrix inv(n, std::vector<Rational>(n, Rational(0)));
        for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
        for (std::size_t c = 0; c < n; ++c) {
            std::size_t piv = c;
            while (a[piv][c] == 0) ++piv;
            std::swap(a[piv], a[c]);
            std::swap(inv[piv], inv[c]);
            Rational p = a[c][c];
            for (std::size_t k = 0; k < n; ++k) {
                a[c][k] /= p;
                inv[c][k] /= p;
            }
            for (std::size_t r = 0; r < n; ++r) {
                if (r == c || a[r][c] == 0) continue;
                Rational f = a[r][c];
                for (std::size_t k = 0; k < n; ++k) {
                    a[r][k] -= f * a[c][k];
                    inv[r][k] -= f * inv[c][k];
                }
            }
        }
        return LinearChange(std::move(inv));
    }

    std::vector<Rational> apply(const std::vector<Rational>& v) const {
        if (v.size() != dimension()) throw std::invalid_argument("linear change: vector has wrong dimension");
        std::vector<Rational> out(v.size(), Rational(0));
        for (std::size_t r = 0; r < v.size(); ++r)
            for (std::size_t c = 0; c < v.size(); ++c) out[r] += matrix_[r][c] * v[c];
        return out;
    }

    friend bool operator==(const LinearChange& a, const LinearChange& b) { return a.matrix_ == b.matrix_; }

private:
    RationalMatrix matrix_;
};

/// f^A: substitutes vars[r] by sum_c A[r][c] * vars[c].
inline Polynomial apply_linear_change(const Polynomial& f, const LinearChange& a, const std::vector<std::string>& vars) {
    if (vars.size() != a.dimension())
        throw std::invalid_argument("apply_linear_change: " + std::to_string(vars.size()) + " variables for a " +
                                    std::to_string(a.dimension()) + "x" + std::to_string(a.dimension()) + " matrix");
    const Ring& ring = f.ring();
    std::vector<std::size_t> idx;
    for (const auto& v : vars) idx.push_back(ring.require_index(v));
    std::vector<Polynomial> images;
    for (std::size_t i = 0; i < ring.size(); ++i) images.push_back(Polynomial::variable(ring, i));
    for (std::size_t r = 0; r < idx.size(); ++r) {
        Polynomial img(ring);
        for (std::size_t c = 0; c < idx.size(); ++c)
            if (a(r, c) != 0) img += a(r, c) * Polynomial::variable(ring, idx[c]);
        images[idx[r]] = img;
    }
    return f.compose(ring, images);
}

}  // namespace realsample

#endif
