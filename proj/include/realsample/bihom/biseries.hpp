#ifndef REALSAMPLE_BIHOM_BISERIES_HPP
#define REALSAMPLE_BIHOM_BISERIES_HPP

#include <realsample/groebner/ideal.hpp>
#include <realsample/polycore/blocks.hpp>

#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace realsample {

/// dims[i][j] = dim (R/I)_{i,j} for 0 <= i <= imax, 0 <= j <= jmax.
struct BiSeriesTable {
    BlockSplit split;
    long imax = 0;
    long jmax = 0;
    std::vector<std::vector<long>> dims;
    /// Largest total degree among the leading monomials, used to size guard bands.
    long max_generator_degree = 0;
    /// Block degrees of the lcm of all leading monomials; the numerator of the
    /// series has no term beyond them.
    long numerator_bound_x = 0;
    long numerator_bound_l = 0;

    long at(long i, long j) const { return dims.at(static_cast<std::size_t>(i)).at(static_cast<std::size_t>(j)); }

    friend bool operator==(const BiSeriesTable& a, const BiSeriesTable& b) {
        return a.imax == b.imax && a.jmax == b.jmax && a.dims == b.dims;
    }
};

namespace detail {

/// Calls visit(m) for every monomial of degree `deg` in the variables `vars`.
inline void for_each_monomial(std::size_t nvars, const std::vector<std::size_t>& vars, long deg,
                              const std::function<void(const Monomial&)>& visit) {
    Monomial m(nvars);
    auto rec = [&](auto&& self, std::size_t pos, long left) -> void {
        if (pos + 1 == vars.size()) {
            m.set(vars[pos], static_cast<Monomial::exponent_type>(left));
            visit(m);
            m.set(vars[pos], 0);
            return;
        }
        for (long e = left; e >= 0; --e) {
            m.set(vars[pos], static_cast<Monomial::exponent_type>(e));
            self(self, pos + 1, left - e);
        }
        m.set(vars[pos], 0);
    };
    if (vars.empty()) {
        if (deg == 0) visit(m);
        return;
    }
    rec(rec, 0, deg);
}

inline std::vector<std::size_t> indices_of(const Ring& ring, const std::vector<std::string>& names) {
    std::vector<std::size_t> out;
    for (const auto& v : names) out.push_back(ring.require_index(v));
    return out;
}

inline void require_bihomogeneous(const std::vector<Polynomial>& gens, const BlockSplit& split) {
    for (const auto& f : gens)
        if (!bidegree_of(f, split).is_bihomogeneous)
            throw std::invalid_argument("generator is not bi-homogeneous: " + f.to_string());
}

inline Ring ring_for(const std::vector<Polynomial>& gens, const BlockSplit& split) {
    return gens.empty() ? split.ring() : gens.front().ring();
}

}  // namespace detail

/// Bi-graded Hilbert function of the ideal with Groebner basis `g`, on the
/// window [0, imax] x [0, jmax], by counting standard monomials per cell.
inline BiSeriesTable hilbert_biseries(const GroebnerBasis& g, const BlockSplit& split, long imax, long jmax) {
    if (imax < 0 || jmax < 0) throw std::invalid_argument("hilbert_biseries: negative window");
    const Ring& ring = g.ring();
    split.validate(ring);
    const std::size_t nv = ring.size();
    auto xs = detail::indices_of(ring, split.x_vars);
    auto ls = detail::indices_of(ring, split.l_vars);
    auto xmask = split.x_mask(ring);
    auto lmask = split.l_mask(ring);
    const auto& lms = g.leading_monomials();

    BiSeriesTable table;
    table.split = split;
    table.imax = imax;
    table.jmax = jmax;
    table.dims.assign(static_cast<std::size_t>(imax + 1), std::vector<long>(static_cast<std::size_t>(jmax + 1), 0));
    Monomial all(nv);
    for (const auto& m : lms) {
        table.max_generator_degree = std::max<long>(table.max_generator_degree, static_cast<long>(m.degree()));
        all = lcm(all, m);
    }
    table.numerator_bound_x = static_cast<long>(all.degree_in(xmask));
    table.numerator_bound_l = static_cast<long>(all.degree_in(lmask));

    // Split every leading monomial into its X-part and l-part. For a fixed
    // X-monomial the relevant obstructions are the l-parts of the leading
    // monomials whose X-part divides it; cells sharing that set share counts.
    std::vector<Monomial> xpart, lpart;
    for (const auto& m : lms) {
        Monomial a(nv), b(nv);
        for (std::size_t v = 0; v < nv; ++v) (xmask[v] ? a : b).set(v, m[v]);
        xpart.push_back(std::move(a));
        lpart.push_back(std::move(b));
    }
    std::map<std::vector<bool>, std::vector<long>> cache;
    auto l_counts = [&](const std::vector<bool>& active) -> const std::vector<long>& {
        auto it = cache.find(active);
        if (it != cache.end()) return it->second;
        std::vector<long> counts(static_cast<std::size_t>(jmax + 1), 0);
        for (long j = 0; j <= jmax; ++j) {
            detail::for_each_monomial(nv, ls, j, [&](const Monomial& w) {
                for (std::size_t q = 0; q < lpart.size(); ++q)
                    if (active[q] && lpart[q].divides(w)) return;
                ++counts[static_cast<std::size_t>(j)];
            });
        }
        return cache.emplace(active, std::move(counts)).first->second;
    };
    for (long i = 0; i <= imax; ++i) {
        detail::for_each_monomial(nv, xs, i, [&](const Monomial& u) {
            std::vector<bool> active(lms.size());
            for (std::size_t q = 0; q < lms.size(); ++q) active[q] = xpart[q].divides(u);
            const auto& counts = l_counts(active);
            for (long j = 0; j <= jmax; ++j)
                table.dims[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] += counts[static_cast<std::size_t>(j)];
        });
    }
    return table;
}

/// Generators must be bi-homogeneous for the split. With no generators the
/// ring is the one spelled by the split (X-block first).
inline BiSeriesTable hilbert_biseries(const std::vector<Polynomial>& gens, const BlockSplit& split, long imax,
                                      long jmax) {
    detail::require_bihomogeneous(gens, split);
    Ring ring = detail::ring_for(gens, split);
    return hilbert_biseries(groebner_basis(gens, MonomialOrder::degrevlex(ring)), split, imax, jmax);
}

/// Sums the table along anti-diagonals: h_d = sum_{i+j=d} dims(i,j).
inline std::vector<long> specialize_to_hilbert_series(const BiSeriesTable& table, long dmax) {
    if (dmax > std::min(table.imax, table.jmax))
        throw std::invalid_argument("specialize_to_hilbert_series: window " + std::to_string(table.imax) + "x" +
                                    std::to_string(table.jmax) + " too small for degree " + std::to_string(dmax));
    std::vector<long> h(static_cast<std::size_t>(dmax + 1), 0);
    for (long d = 0; d <= dmax; ++d)
        for (long i = 0; i <= d; ++i) h[static_cast<std::size_t>(d)] += table.at(i, d - i);
    return h;
}

/// Single-graded Hilbert function h_0..h_dmax, counting all standard
/// monomials of each total degree.
inline std::vector<long> hilbert_function(const GroebnerBasis& g, long dmax) {
    const std::size_t nv = g.ring().size();
    std::vector<std::size_t> all(nv);
    for (std::size_t v = 0; v < nv; ++v) all[v] = v;
    std::vector<long> h(static_cast<std::size_t>(dmax + 1), 0);
    for (long d = 0; d <= dmax; ++d)
        detail::for_each_monomial(nv, all, d, [&](const Monomial& m) {
            if (is_standard_monomial(m, g)) ++h[static_cast<std::size_t>(d)];
        });
    return h;
}

}  // namespace realsample

#endif
