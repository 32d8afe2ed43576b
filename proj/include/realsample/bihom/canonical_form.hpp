#ifndef REALSAMPLE_BIHOM_CANONICAL_FORM_HPP
#define REALSAMPLE_BIHOM_CANONICAL_FORM_HPP

#include <realsample/bihom/biseries.hpp>

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace realsample {

/// The window of a bi-series table did not capture the whole numerator.
class WindowTooSmall : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

using IntegerGrid = std::vector<std::vector<Integer>>;

/// H = sum C[d,e] / ((1-t1)^(d+1) (1-t2)^(e+1))
///   + sum lower_terms[i,j] / ((1-t1)^(i+1) (1-t2)^(j+1)) + Q(t1, t2).
/// Keys of lower_terms may be negative (-1 means no pole in that variable,
/// below that the factor moves to the numerator).
struct CanonicalForm {
    long D = 0;
    std::map<std::pair<long, long>, Integer> C;
    std::map<std::pair<long, long>, Integer> lower_terms;
    IntegerGrid Q;
    /// Numerator over (1-t1)^(n+1) (1-t2)^(k+1).
    IntegerGrid numerator;

    Integer c(long d, long e) const {
        auto it = C.find({d, e});
        return it == C.end() ? Integer(0) : it->second;
    }

    bool q_is_zero() const {
        for (const auto& row : Q)
            for (const auto& v : row)
                if (v != 0) return false;
        return true;
    }
};

namespace detail {

/// Coefficients c_a with p(t) = sum_a c_a (1-t)^a, by repeated synthetic
/// division by (1-t).
inline std::vector<Integer> rewrite_in_one_minus_t(std::vector<Integer> p) {
    std::vector<Integer> out;
    while (!p.empty()) {
        // p = (t-1) q + p(1)
        std::vector<Integer> q(p.size() > 1 ? p.size() - 1 : 0);
        Integer carry = 0;
        for (std::size_t k = p.size(); k-- > 0;) {
            carry = carry + p[k];
            if (k > 0) q[k - 1] = carry;
        }
        out.push_back(carry);
        for (auto& v : q) v = -v;  // (t-1) q = (1-t)(-q)
        p = std::move(q);
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

/// Coefficient of t^i in (1-t)^(-a).
inline Integer pole_coefficient(long a, long i) {
    if (a > 0) return binomial(i + a - 1, a - 1);
    Integer b = binomial(-a, i);
    return (i % 2 == 0) ? b : Integer(-b);
}

}  // namespace detail

/// Extracts the canonical form from a table whose ideal has dimension D.
/// `guard` is the width of the band along the window's far edges where the
/// numerator must vanish; by default max generator degree + 1.
inline CanonicalForm canonical_form(const BiSeriesTable& table, long D, long guard = -1) {
    if (guard < 0) guard = table.max_generator_degree + 1;
    const long nx = static_cast<long>(table.split.x_vars.size());
    const long nl = static_cast<long>(table.split.l_vars.size());
    const long imax = table.imax, jmax = table.jmax;
    const long ilim = imax - guard, jlim = jmax - guard;
    if (ilim < table.numerator_bound_x || jlim < table.numerator_bound_l)
        throw WindowTooSmall("canonical_form: window " + std::to_string(imax) + "x" + std::to_string(jmax) +
                             " leaves no room for the guard band");

    IntegerGrid p(static_cast<std::size_t>(imax + 1), std::vector<Integer>(static_cast<std::size_t>(jmax + 1), 0));
    for (long i = 0; i <= imax; ++i)
        for (long j = 0; j <= jmax; ++j) {
            Integer acc = 0;
            for (long a = 0; a <= std::min(nx, i); ++a) {
                Integer ca = binomial(nx, a);
                if (a % 2) ca = -ca;
                for (long b = 0; b <= std::min(nl, j); ++b) {
                    long v = table.at(i - a, j - b);
                    if (v == 0) continue;
                    Integer cb = binomial(nl, b);
                    if (b % 2) cb = -cb;
                    acc += ca * cb * v;
                }
            }
            if ((i > ilim || j > jlim) && acc != 0)
                throw WindowTooSmall("canonical_form: numerator reaches the guard band at (" + std::to_string(i) +
                                     "," + std::to_string(j) + ")");
            p[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = acc;
        }

    // Rewrite first along t1 (rows of fixed j), then along t2.
    IntegerGrid r1(static_cast<std::size_t>(ilim + 1), std::vector<Integer>(static_cast<std::size_t>(jlim + 1), 0));
    for (long j = 0; j <= jlim; ++j) {
        std::vector<Integer> col;
        for (long i = 0; i <= ilim; ++i) col.push_back(p[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
        auto c = detail::rewrite_in_one_minus_t(col);
        for (std::size_t a = 0; a < c.size(); ++a) r1[a][static_cast<std::size_t>(j)] = c[a];
    }
    IntegerGrid basis(r1.size(), std::vector<Integer>(static_cast<std::size_t>(jlim + 1), 0));
    for (std::size_t a = 0; a < r1.size(); ++a) {
        auto c = detail::rewrite_in_one_minus_t(r1[a]);
        for (std::size_t b = 0; b < c.size(); ++b) basis[a][b] = c[b];
    }

    CanonicalForm out;
    out.D = D;
    out.numerator.assign(static_cast<std::size_t>(ilim + 1), std::vector<Integer>(static_cast<std::size_t>(jlim + 1), 0));
    for (long i = 0; i <= ilim; ++i)
        for (long j = 0; j <= jlim; ++j)
            out.numerator[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                p[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    for (long d = 0; d < nx; ++d) {
        long e = D - 2 - d;
        if (e >= 0 && e < nl) out.C[{d, e}] = 0;
    }
    const long qdim_i = std::max(0L, ilim - nx) + 1, qdim_j = std::max(0L, jlim - nl) + 1;
    out.Q.assign(static_cast<std::size_t>(qdim_i), std::vector<Integer>(static_cast<std::size_t>(qdim_j), 0));
    for (long a = 0; a <= ilim; ++a)
        for (long b = 0; b <= jlim; ++b) {
            const Integer& c = basis[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
            if (c == 0) continue;
            const long pa = nx - a, pb = nl - b;
            if (pa >= 1 && pb >= 1 && pa + pb > D)
                throw std::domain_error("canonical_form: pole of total order " + std::to_string(pa + pb) +
                                        " exceeds dimension " + std::to_string(D));
            if (pa >= 1 && pb >= 1 && pa + pb == D) {
                out.C[{pa - 1, pb - 1}] = c;
            } else if (pa <= 0 && pb <= 0) {
                // c (1-t1)^(-pa) (1-t2)^(-pb), expanded.
                for (long u = 0; u <= -pa; ++u)
                    for (long w = 0; w <= -pb; ++w)
                        out.Q[static_cast<std::size_t>(u)][static_cast<std::size_t>(w)] +=
                            c * detail::pole_coefficient(pa, u) * detail::pole_coefficient(pb, w);
            } else {
                out.lower_terms[{pa - 1, pb - 1}] = c;
            }
        }
    return out;
}

/// Series coefficients of a canonical form on [0, imax] x [0, jmax].
inline IntegerGrid reconstruct_series(const CanonicalForm& cf, long imax, long jmax) {
    IntegerGrid out(static_cast<std::size_t>(imax + 1), std::vector<Integer>(static_cast<std::size_t>(jmax + 1), 0));
    auto add_pole = [&](long d, long e, const Integer& c) {
        for (long i = 0; i <= imax; ++i) {
            Integer ci = detail::pole_coefficient(d + 1, i);
            if (ci == 0) continue;
            for (long j = 0; j <= jmax; ++j)
                out[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] += c * ci * detail::pole_coefficient(e + 1, j);
        }
    };
    for (const auto& [k, c] : cf.C) add_pole(k.first, k.second, c);
    for (const auto& [k, c] : cf.lower_terms) add_pole(k.first, k.second, c);
    for (std::size_t i = 0; i < cf.Q.size() && static_cast<long>(i) <= imax; ++i)
        for (std::size_t j = 0; j < cf.Q[i].size() && static_cast<long>(j) <= jmax; ++j) out[i][j] += cf.Q[i][j];
    return out;
}

struct CanonicalFormResult {
    BiSeriesTable table;
    CanonicalForm form;
};

/// Computes the bi-series on a window of 2*maxdeg+4 per axis and doubles the
/// window until the canonical form's guard band is clean.
inline CanonicalFormResult canonical_form_adaptive(const std::vector<Polynomial>& gens, const BlockSplit& split, long D,
                                                   long max_window = 512) {
    detail::require_bihomogeneous(gens, split);
    Ring ring = detail::ring_for(gens, split);
    GroebnerBasis g = groebner_basis(gens, MonomialOrder::degrevlex(ring));
    long maxdeg = 0;
    for (const auto& m : g.leading_monomials()) maxdeg = std::max<long>(maxdeg, static_cast<long>(m.degree()));
    for (long w = 2 * maxdeg + 4; w <= max_window; w *= 2) {
        BiSeriesTable t = hilbert_biseries(g, split, w, w);
        try {
            CanonicalForm f = canonical_form(t, D);
            return {std::move(t), std::move(f)};
        } catch (const WindowTooSmall&) {
        }
    }
    throw WindowTooSmall("canonical_form_adaptive: window limit " + std::to_string(max_window) + " reached");
}

}  // namespace realsample

#endif
