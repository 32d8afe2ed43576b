#ifndef REALSAMPLE_LAGRANGE_SYSTEM_HPP
#define REALSAMPLE_LAGRANGE_SYSTEM_HPP

#include <realsample/errors.hpp>
#include <realsample/groebner/ideal.hpp>
#include <realsample/polycore/blocks.hpp>
#include <realsample/polycore/linear_change.hpp>
#include <realsample/random.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace realsample {

inline constexpr long kMatrixEntryBound = 99;

/// f_1..f_s in Q[X_1..X_n] with 1 <= s <= n-1.
struct InputSystem {
    std::vector<Polynomial> polys;
    Ring ring;
    bool assume_regular_sequence = false;
    bool assume_radical_smooth = true;

    std::size_t n() const { return ring.size(); }
    std::size_t s() const { return polys.size(); }

    std::vector<long> degrees() const {
        std::vector<long> d;
        for (const auto& f : polys) d.push_back(f.total_degree());
        return d;
    }

    void validate() const {
        if (polys.empty()) throw std::invalid_argument("input system has no equations");
        if (s() > n() - 1 || n() < 2)
            throw std::invalid_argument("input system needs s <= n-1 (s = " + std::to_string(s()) +
                                        ", n = " + std::to_string(n()) + ")");
        for (const auto& f : polys) {
            if (!(f.ring() == ring)) throw std::invalid_argument("input polynomial outside the input ring");
            if (f.is_constant()) throw std::invalid_argument("input polynomial is constant: " + f.to_string());
        }
        if (!assume_radical_smooth)
            throw HypothesisViolation("the sampler requires the input to be radical and smooth (assume_radical_smooth)");
    }

    static InputSystem make(std::vector<Polynomial> polys, bool regular = false) {
        if (polys.empty()) throw std::invalid_argument("input system has no equations");
        InputSystem in{polys, polys.front().ring(), regular, true};
        in.validate();
        return in;
    }
};

/// Polynomials in X and the multiplier block. For the projection kinds the
/// objective is the first coordinate.
struct LagrangeSystem {
    enum class Kind { general, projection, reduced_projection, fiber_top };

    std::vector<Polynomial> polys;
    Kind kind = Kind::general;
    Ring ring;
    BlockSplit split;
    std::vector<std::string> x_vars;
    std::vector<std::string> multipliers;
    /// Coefficients a_j of the recombination f_s + sum a_j f_j (reduced kind only).
    std::vector<long> recombination;
};

namespace detail {

/// base1, base2, ... with a trailing underscore added until none collides.
inline std::vector<std::string> fresh_names(const Ring& ring, const std::string& base, std::size_t count) {
    std::string stem = base;
    for (;;) {
        std::vector<std::string> names;
        bool clash = false;
        for (std::size_t j = 1; j <= count; ++j) {
            names.push_back(stem + std::to_string(j));
            if (ring.index_of(names.back())) clash = true;
        }
        if (!clash) return names;
        stem += "_";
    }
}

inline std::vector<Polynomial> changed(const InputSystem& in, const LinearChange& a) {
    std::vector<Polynomial> out;
    for (const auto& f : in.polys) out.push_back(apply_linear_change(f, a, in.ring.names()));
    return out;
}

/// Rows  sum_j l_j d f_j / dX_m - rhs_m  for m in [first, n), over `target`.
inline void append_multiplier_equations(std::vector<Polynomial>& out, const std::vector<Polynomial>& fs,
                                        const Ring& x_ring, const Ring& target, const std::vector<std::string>& mult,
                                        std::size_t first, const std::vector<Polynomial>& rhs) {
    for (std::size_t m = first; m < x_ring.size(); ++m) {
        Polynomial row(target);
        for (std::size_t j = 0; j < fs.size(); ++j)
            row += Polynomial::variable(target, mult[j]) * fs[j].derivative(m).map_to(target);
        row -= rhs[m - first].map_to(target);
        out.push_back(std::move(row));
    }
}

inline LagrangeSystem lagrange_shell(const InputSystem& in, const std::vector<std::string>& mult) {
    LagrangeSystem sys;
    sys.ring = in.ring.extended(mult);
    sys.x_vars = in.ring.names();
    sys.multipliers = mult;
    sys.split = BlockSplit{in.ring.names(), mult, std::nullopt, std::nullopt};
    return sys;
}

inline std::vector<Polynomial> unit_rhs(const Ring& x_ring, std::size_t count) {
    std::vector<Polynomial> rhs;
    for (std::size_t m = 0; m < count; ++m) rhs.push_back(Polynomial::constant(x_ring, m == 0 ? 1 : 0));
    return rhs;
}

}  // namespace detail

/// f_1..f_s and, for each m, sum_j l_j df_j/dX_m - dg/dX_m.
inline LagrangeSystem build_lagrange(const InputSystem& in, const Polynomial& objective) {
    if (!(objective.ring() == in.ring)) throw std::invalid_argument("objective outside the input ring");
    auto mult = detail::fresh_names(in.ring, "l", in.s());
    LagrangeSystem sys = detail::lagrange_shell(in, mult);
    sys.kind = LagrangeSystem::Kind::general;
    for (const auto& f : in.polys) sys.polys.push_back(f.map_to(sys.ring));
    std::vector<Polynomial> rhs;
    for (std::size_t m = 0; m < in.n(); ++m) rhs.push_back(objective.derivative(m));
    detail::append_multiplier_equations(sys.polys, in.polys, in.ring, sys.ring, mult, 0, rhs);
    return sys;
}

/// f^A_1..f^A_s and the multiplier equations with right-hand side (1, 0, ..., 0).
inline LagrangeSystem build_projection_system(const InputSystem& in, const LinearChange& a) {
    auto fa = detail::changed(in, a);
    auto mult = detail::fresh_names(in.ring, "l", in.s());
    LagrangeSystem sys = detail::lagrange_shell(in, mult);
    sys.kind = LagrangeSystem::Kind::projection;
    for (const auto& f : fa) sys.polys.push_back(f.map_to(sys.ring));
    detail::append_multiplier_equations(sys.polys, fa, in.ring, sys.ring, mult, 0, detail::unit_rhs(in.ring, in.n()));
    return sys;
}

/// For a regular sequence: f^A_1..f^A_s (with f_s replaced by a random
/// combination) and sum_{j<s} m_j df_j/dX_r + df_s/dX_r for r = 2..n.
inline LagrangeSystem build_reduced_projection_system(const InputSystem& in, const LinearChange& a, Rng& rng) {
    if (!in.assume_regular_sequence)
        throw HypothesisViolation("reduced projection system requires a regular sequence");
    auto fa = detail::changed(in, a);
    const std::size_t s = in.s();
    LagrangeSystem sys;
    for (std::size_t j = 0; j + 1 < s; ++j) {
        long c = rng.uniform(-kMatrixEntryBound, kMatrixEntryBound);
        sys.recombination.push_back(c);
        fa[s - 1] += Rational(c) * fa[j];
    }
    auto mult = detail::fresh_names(in.ring, "m", s - 1);
    sys.ring = in.ring.extended(mult);
    sys.x_vars = in.ring.names();
    sys.multipliers = mult;
    sys.split = BlockSplit{in.ring.names(), mult, std::nullopt, std::nullopt};
    sys.kind = LagrangeSystem::Kind::reduced_projection;
    for (const auto& f : fa) sys.polys.push_back(f.map_to(sys.ring));
    for (std::size_t r = 1; r < in.n(); ++r) {
        Polynomial row = fa[s - 1].derivative(r).map_to(sys.ring);
        for (std::size_t j = 0; j + 1 < s; ++j)
            row += Polynomial::variable(sys.ring, mult[j]) * fa[j].derivative(r).map_to(sys.ring);
        sys.polys.push_back(std::move(row));
    }
    return sys;
}

struct FiberSystem {
    LagrangeSystem system;
    long depth = 0;
    long d = 0;
    LinearChange A = LinearChange::identity(1);
    std::vector<Rational> p;

    bool has_multipliers() const { return !system.multipliers.empty(); }
};

/// The system of depth i: the projection system for i = 0; f^A plus pins
/// X_1 = p_1..X_i = p_i and multiplier equations over X_{i+1}..X_n for
/// 0 < i < d; f^A plus d pins at i = d. `d` is the dimension of the input.
inline FiberSystem build_fiber_system(const InputSystem& in, const LinearChange& a, const std::vector<Rational>& p,
                                      long i, long d) {
    if (d < 0) throw std::invalid_argument("build_fiber_system: empty variety has no fiber systems");
    if (i < 0 || i > d) throw std::out_of_range("fiber depth " + std::to_string(i) + " outside 0.." + std::to_string(d));
    if (static_cast<long>(p.size()) < i) throw std::invalid_argument("fiber depth exceeds the length of p");
    if (a.dimension() != in.n()) throw std::invalid_argument("change of variables has the wrong dimension");
    FiberSystem fs;
    fs.depth = i;
    fs.d = d;
    fs.A = a;
    fs.p = p;
    auto fa = detail::changed(in, a);
    auto pins = [&](const Ring& target) {
        std::vector<Polynomial> out;
        for (long r = 0; r < i; ++r) out.push_back(Polynomial::variable(target, static_cast<std::size_t>(r)) - p[static_cast<std::size_t>(r)]);
        return out;
    };
    if (i == d) {
        LagrangeSystem& sys = fs.system;
        sys.kind = LagrangeSystem::Kind::fiber_top;
        sys.ring = in.ring;
        sys.x_vars = in.ring.names();
        sys.split = BlockSplit{in.ring.names(), {}, std::nullopt, std::nullopt};
        sys.polys = fa;
        for (auto& q : pins(in.ring)) sys.polys.push_back(std::move(q));
        return fs;
    }
    if (i == 0) {
        fs.system = build_projection_system(in, a);
        return fs;
    }
    auto mult = detail::fresh_names(in.ring, "l", in.s());
    LagrangeSystem sys = detail::lagrange_shell(in, mult);
    sys.kind = LagrangeSystem::Kind::projection;
    for (const auto& f : fa) sys.polys.push_back(f.map_to(sys.ring));
    for (auto& q : pins(sys.ring)) sys.polys.push_back(std::move(q));
    detail::append_multiplier_equations(sys.polys, fa, in.ring, sys.ring, mult, static_cast<std::size_t>(i),
                                        detail::unit_rhs(in.ring, in.n() - static_cast<std::size_t>(i)));
    fs.system = std::move(sys);
    return fs;
}

/// Dimension of the input ideal from a degrevlex basis.
inline long input_dimension(const InputSystem& in) {
    return dimension(groebner_basis(in.polys, MonomialOrder::degrevlex(in.ring)));
}

inline FiberSystem build_fiber_system(const InputSystem& in, const LinearChange& a, const std::vector<Rational>& p,
                                      long i) {
    return build_fiber_system(in, a, p, i, input_dimension(in));
}

/// Random invertible n x n integer matrix with entries in [-bound, bound].
inline LinearChange random_linear_change(std::size_t n, Rng& rng, long bound = kMatrixEntryBound) {
    for (;;) {
        RationalMatrix m(n, std::vector<Rational>(n));
        for (auto& row : m)
            for (auto& v : row) v = rng.uniform(-bound, bound);
        if (determinant(m) != 0) return LinearChange(std::move(m));
    }
}

inline std::string to_string(LagrangeSystem::Kind k) {
    switch (k) {
    case LagrangeSystem::Kind::general: return "general";
    case LagrangeSystem::Kind::projection: return "projection";
    case LagrangeSystem::Kind::reduced_projection: return "reduced_projection";
    case LagrangeSystem::Kind::fiber_top: return "fiber_top";
    }
    return "unknown";
}

}  // namespace realsample

#endif
