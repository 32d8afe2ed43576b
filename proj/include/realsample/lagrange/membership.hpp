#ifndef REALSAMPLE_LAGRANGE_MEMBERSHIP_HPP
#define REALSAMPLE_LAGRANGE_MEMBERSHIP_HPP

#include <realsample/interval.hpp>
#include <realsample/lagrange/system.hpp>

#include <stdexcept>
#include <vector>

namespace realsample {

namespace detail {

inline Interval interval_determinant(const std::vector<std::vector<Interval>>& m) {
    const std::size_t n = m.size();
    if (n == 1) return m[0][0];
    Interval det = Interval::point(0);
    for (std::size_t c = 0; c < n; ++c) {
        std::vector<std::vector<Interval>> minor;
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<Interval> row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != c) row.push_back(m[r][k]);
            minor.push_back(std::move(row));
        }
        Interval term = m[0][c] * interval_determinant(minor);
        det = (c % 2 == 0) ? det + term : det - term;
    }
    return det;
}

/// Calls visit(cols) for every increasing selection of `size` columns out of n.
template <class F>
void for_each_selection(std::size_t n, std::size_t size, F&& visit) {
    std::vector<std::size_t> cols(size);
    auto rec = [&](auto&& self, std::size_t pos, std::size_t from) -> bool {
        if (pos == size) return visit(cols);
        for (std::size_t c = from; c + (size - pos) <= n; ++c) {
            cols[pos] = c;
            if (!self(self, pos + 1, c + 1)) return false;
        }
        return true;
    };
    rec(rec, 0, 0);
}

}  // namespace detail

/// Exact check at a rational point that the gradients of the constraints and
/// the objective have rank at most the number of constraints. Throws if the
/// point is not on the variety.
inline bool lagrange_membership_check(const std::vector<Rational>& point, const std::vector<Polynomial>& constraints,
                                      const Polynomial& objective) {
    const Ring& ring = objective.ring();
    if (point.size() != ring.size()) throw std::invalid_argument("membership check: point has wrong dimension");
    for (const auto& f : constraints)
        if (f.evaluate(point) != 0) throw std::invalid_argument("membership check: point is not on the variety");
    RationalMatrix grads;
    for (const auto& f : constraints) {
        std::vector<Rational> row;
        for (std::size_t m = 0; m < ring.size(); ++m) row.push_back(f.derivative(m).evaluate(point));
        grads.push_back(std::move(row));
    }
    std::vector<Rational> orow;
    for (std::size_t m = 0; m < ring.size(); ++m) orow.push_back(objective.derivative(m).evaluate(point));
    grads.push_back(std::move(orow));
    return matrix_rank(grads) <= constraints.size();
}

/// Box version: false only when some maximal minor of the gradient matrix
/// (constraints plus objective) provably does not vanish on the box.
/// Throws if some constraint provably does not vanish on the box.
inline bool lagrange_membership_check(const Box& box, const std::vector<Polynomial>& constraints,
                                      const Polynomial& objective) {
    const Ring& ring = objective.ring();
    if (box.size() != ring.size()) throw std::invalid_argument("membership check: box has wrong dimension");
    for (const auto& f : constraints)
        if (evaluate(f, box).excludes_zero()) throw std::invalid_argument("membership check: box misses the variety");
    std::vector<std::vector<Interval>> grads;
    auto push = [&](const Polynomial& f) {
        std::vector<Interval> row;
        for (std::size_t m = 0; m < ring.size(); ++m) row.push_back(evaluate(f.derivative(m), box));
        grads.push_back(std::move(row));
    };
    for (const auto& f : constraints) push(f);
    push(objective);
    const std::size_t rows = grads.size();
    if (rows > ring.size()) return true;
    bool independent = false;
    detail::for_each_selection(ring.size(), rows, [&](const std::vector<std::size_t>& cols) {
        std::vector<std::vector<Interval>> sub;
        for (const auto& row : grads) {
            std::vector<Interval> r;
            for (auto c : cols) r.push_back(row[c]);
            sub.push_back(std::move(r));
        }
        if (detail::interval_determinant(sub).excludes_zero()) {
            independent = true;
            return false;
        }
        return true;
    });
    return !independent;
}

inline bool lagrange_membership_check(const std::vector<Rational>& point, const InputSystem& in,
                                      const Polynomial& objective) {
    return lagrange_membership_check(point, in.polys, objective);
}

inline bool lagrange_membership_check(const Box& box, const InputSystem& in, const Polynomial& objective) {
    return lagrange_membership_check(box, in.polys, objective);
}

/// Constraints and objective describing depth-i points in original
/// coordinates x = A y: the pins (A^-1 x)_r = p_r for r < i and the
/// objective (A^-1 x)_{i+1}.
struct FiberCriticality {
    std::vector<Polynomial> constraints;
    Polynomial objective;
};

inline FiberCriticality fiber_criticality(const InputSystem& in, const LinearChange& a, const std::vector<Rational>& p,
                                          long depth) {
    LinearChange inv = a.inverse();
    auto coordinate = [&](std::size_t r) {
        Polynomial y(in.ring);
        for (std::size_t c = 0; c < in.n(); ++c)
            if (inv(r, c) != 0) y += inv(r, c) * Polynomial::variable(in.ring, c);
        return y;
    };
    FiberCriticality out{in.polys, Polynomial(in.ring)};
    for (long r = 0; r < depth; ++r)
        out.constraints.push_back(coordinate(static_cast<std::size_t>(r)) - p[static_cast<std::size_t>(r)]);
    if (static_cast<std::size_t>(depth) < in.n()) out.objective = coordinate(static_cast<std::size_t>(depth));
    return out;
}

}  // namespace realsample

#endif
