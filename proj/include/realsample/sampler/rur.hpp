#ifndef REALSAMPLE_SAMPLER_RUR_HPP
#define REALSAMPLE_SAMPLER_RUR_HPP

#include <realsample/errors.hpp>
#include <realsample/groebner/ideal.hpp>
#include <realsample/interval.hpp>
#include <realsample/random.hpp>
#include <realsample/sampler/univariate.hpp>

#include <optional>
#include <string>
#include <vector>

namespace realsample {

/// v_m = q_m(T) / q_0(T) at the roots of f(T), with T = sum_m c_m v_m.
struct RationalParameterization {
    std::string T = "T";
    UPoly f;
    UPoly q0;
    std::vector<UPoly> q;
    std::vector<std::string> coordinate_names;
    std::vector<long> separating_form;
    /// Dimension of the quotient by the (radical of the) ideal.
    long quotient_dimension = 0;
    /// Whether squarefree parts of eliminants had to be added.
    bool radicalized = false;

    bool empty() const { return f.degree() <= 0; }
};

inline constexpr long kSeparatingBound = 20;
inline constexpr int kSeparatingRetries = 32;

namespace detail {

/// Multiplication by each variable on the quotient algebra, as columns.
struct QuotientAlgebra {
    GroebnerBasis basis;
    QuotientBasis qb;
    std::vector<std::vector<QVector>> mult;  // mult[v][k] = coords of x_v * b_k
    std::size_t one = 0;

    std::size_t dim() const { return qb.size(); }

    QVector apply(const std::vector<QVector>& columns, const QVector& x) const { return apply_columns(columns, x); }

    QVector unit() const {
        QVector e(dim(), Rational(0));
        e[one] = 1;
        return e;
    }
};

inline QuotientAlgebra build_algebra(GroebnerBasis g) {
    QuotientBasis qb = quotient_basis(g);
    const std::size_t n = g.ring().size();
    std::vector<std::vector<QVector>> mult;
    for (std::size_t v = 0; v < n; ++v) mult.push_back(multiplication_matrix(g, qb, v));
    std::size_t one = static_cast<std::size_t>(qb.index_of(Monomial(n)));
    return QuotientAlgebra{std::move(g), std::move(qb), std::move(mult), one};
}

/// Minimal polynomial of the operator `columns` (monic), from the Krylov
/// sequence of 1, together with the Krylov echelon form.
inline UPoly krylov_minimal_polynomial(const QuotientAlgebra& alg, const std::vector<QVector>& columns,
                                       Echelon* keep = nullptr) {
    Echelon ech(alg.dim());
    QVector w = alg.unit();
    QVector combo;
    for (;;) {
        if (ech.reduce(w, combo)) {
            // w_k = sum combo_j w_j  =>  T^k - sum combo_j T^j
            std::vector<Rational> c(combo.size() + 1, Rational(0));
            for (std::size_t j = 0; j < combo.size(); ++j) c[j] = -combo[j];
            c[combo.size()] = 1;
            if (keep) *keep = std::move(ech);
            return UPoly(std::move(c));
        }
        ech.insert(w);
        w = alg.apply(columns, w);
    }
}

inline Polynomial univariate_in(const UPoly& p, const Ring& ring, std::size_t var) {
    Polynomial out(ring);
    for (std::size_t i = 0; i < p.coeffs().size(); ++i)
        if (p.coeffs()[i] != 0)
            out += Polynomial::monomial(ring, Monomial::unit(ring.size(), var, static_cast<Monomial::exponent_type>(i)),
                                        p.coeffs()[i]);
    return out;
}

}  // namespace detail

/// Rational parameterization of the (radical of the) zero-dimensional ideal
/// generated by `gens` over `ring`. The unit ideal gives f = 1.
inline RationalParameterization solve_zero_dim(const std::vector<Polynomial>& gens, const Ring& ring, Rng& rng) {
    RationalParameterization out;
    out.coordinate_names = ring.names();
    GroebnerBasis g = groebner_basis(gens, MonomialOrder::degrevlex(ring));
    if (g.is_unit()) {
        out.f = UPoly::constant(1);
        out.q0 = UPoly::constant(1);
        out.q.assign(ring.size(), UPoly());
        return out;
    }
    if (dimension(g) != 0) throw NotZeroDimensional("solve_zero_dim: ideal is not zero-dimensional");

    detail::QuotientAlgebra alg = detail::build_algebra(g);
    std::vector<Polynomial> extra;
    for (std::size_t v = 0; v < ring.size(); ++v) {
        UPoly mp = detail::krylov_minimal_polynomial(alg, alg.mult[v]);
        UPoly sq = squarefree_part(mp);
        if (sq.degree() < mp.degree()) extra.push_back(detail::univariate_in(sq, ring, v));
    }
    if (!extra.empty()) {
        std::vector<Polynomial> all = g.generators();
        all.insert(all.end(), extra.begin(), extra.end());
        alg = detail::build_algebra(groebner_basis(all, MonomialOrder::degrevlex(ring)));
        out.radicalized = true;
    }
    const std::size_t D = alg.dim();
    out.quotient_dimension = static_cast<long>(D);

    for (int attempt = 0; attempt < kSeparatingRetries; ++attempt) {
        std::vector<long> c(ring.size());
        for (auto& x : c) x = rng.uniform(-kSeparatingBound, kSeparatingBound);
        std::vector<detail::QVector> mt(D, detail::QVector(D, Rational(0)));
        for (std::size_t v = 0; v < ring.size(); ++v) {
            if (c[v] == 0) continue;
            for (std::size_t k = 0; k < D; ++k)
                for (std::size_t r = 0; r < D; ++r)
                    if (alg.mult[v][k][r] != 0) mt[k][r] += Rational(c[v]) * alg.mult[v][k][r];
        }
        detail::Echelon krylov(D);
        UPoly f = detail::krylov_minimal_polynomial(alg, mt, &krylov);
        if (f.degree() != static_cast<long>(D)) continue;
        out.separating_form = c;
        out.f = f;
        out.q0 = f.derivative();
        for (std::size_t v = 0; v < ring.size(); ++v) {
            detail::QVector u = alg.apply(alg.mult[v], alg.unit());
            detail::QVector combo;
            if (!krylov.reduce(u, combo)) throw std::logic_error("Krylov basis does not span the quotient");
            UPoly gv(combo);
            out.q.push_back((gv * out.q0) % f);
        }
        return out;
    }
    throw GenericityError("solve_zero_dim: no separating linear form found after " +
                          std::to_string(kSeparatingRetries) + " draws");
}

inline RationalParameterization solve_zero_dim(const std::vector<Polynomial>& gens, Rng& rng) {
    if (gens.empty()) throw NotZeroDimensional("solve_zero_dim: the zero ideal is not zero-dimensional");
    return solve_zero_dim(gens, gens.front().ring(), rng);
}

/// Remainder of p(q_1/q_0, ..., q_m/q_0) modulo f; zero iff p vanishes on
/// every encoded point.
inline UPoly parameterization_residual(const RationalParameterization& param, const Polynomial& p) {
    if (param.empty()) return UPoly();
    const Ring& ring = p.ring();
    std::vector<UPoly> coord;
    UPoly inv = inverse_mod(param.q0, param.f);
    for (std::size_t v = 0; v < ring.size(); ++v) {
        std::size_t idx = param.coordinate_names.size();
        for (std::size_t k = 0; k < param.coordinate_names.size(); ++k)
            if (param.coordinate_names[k] == ring.name(v)) idx = k;
        if (idx == param.coordinate_names.size())
            throw std::invalid_argument("parameterization has no coordinate '" + ring.name(v) + "'");
        coord.push_back((param.q[idx] * inv) % param.f);
    }
    UPoly acc;
    for (const auto& t : p.terms()) {
        UPoly term = UPoly::constant(t.coeff);
        for (std::size_t v = 0; v < ring.size(); ++v)
            for (unsigned e = 0; e < t.mono[v]; ++e) term = (term * coord[v]) % param.f;
        acc = acc + term;
    }
    return acc % param.f;
}

struct ParameterizationValue {
    Interval root;
    Box box;
};

/// Encloses the point attached to the root isolated by `root`, refining the
/// root interval until q_0 is bounded away from zero and every coordinate is
/// narrower than `width`.
inline ParameterizationValue evaluate_parameterization(const RationalParameterization& param, Interval root,
                                                       const Rational& width, int max_bisections = 20000) {
    const UPoly g = squarefree_part(param.f);
    for (int step = 0; step <= max_bisections; ++step) {
        Interval den = param.q0.evaluate(root);
        if (!den.contains_zero()) {
            Box box;
            for (const auto& qm : param.q) box.push_back(qm.evaluate(root) / den);
            if (box_width(box) < width || root.is_point()) return {root, std::move(box)};
        } else if (root.is_point()) {
            throw GenericityError("evaluate_parameterization: q0 vanishes at the root");
        }
        root = bisect_root(g, root);
    }
    throw GenericityError("evaluate_parameterization: refinement limit reached");
}

}  // namespace realsample

#endif
