#ifndef REALSAMPLE_BIHOM_SLICING_HPP
#define REALSAMPLE_BIHOM_SLICING_HPP

#include <realsample/bihom/biseries.hpp>
#include <realsample/errors.hpp>
#include <realsample/random.hpp>

#include <string>
#include <vector>

namespace realsample {

namespace detail {

inline Polynomial random_form(const Ring& ring, const std::vector<std::size_t>& vars, Rng& rng) {
    Polynomial f(ring);
    for (auto v : vars) f += Rational(rng.uniform(-kSliceCoefficientBound, kSliceCoefficientBound)) * Polynomial::variable(ring, v);
    return f;
}

}  // namespace detail

/// C_{d,e}: degree of I + <u_1 - 1, u_2, ..., u_{d+1}, v_1 - 1, v_2, ..., v_{e+1}>
/// for random linear forms u in the X-block and v in the l-block.
inline long bidegree_by_slicing(const std::vector<Polynomial>& gens, const BlockSplit& split, long d, long e, Rng& rng) {
    detail::require_bihomogeneous(gens, split);
    Ring ring = detail::ring_for(gens, split);
    split.validate(ring);
    if (d < 0 || e < 0 || d + 1 > static_cast<long>(split.x_vars.size()) ||
        e + 1 > static_cast<long>(split.l_vars.size()))
        throw std::invalid_argument("bidegree_by_slicing: (" + std::to_string(d) + "," + std::to_string(e) +
                                    ") does not fit the blocks");
    auto xs = detail::indices_of(ring, split.x_vars);
    auto ls = detail::indices_of(ring, split.l_vars);
    for (int attempt = 0; attempt < kGenericityRetries; ++attempt) {
        std::vector<Polynomial> sys = gens;
        for (long f = 0; f <= d; ++f) {
            Polynomial u = detail::random_form(ring, xs, rng);
            if (f == 0) u -= Polynomial::constant(ring, 1);
            sys.push_back(std::move(u));
        }
        for (long f = 0; f <= e; ++f) {
            Polynomial v = detail::random_form(ring, ls, rng);
            if (f == 0) v -= Polynomial::constant(ring, 1);
            sys.push_back(std::move(v));
        }
        GroebnerBasis g = groebner_basis(sys, MonomialOrder::degrevlex(ring));
        if (g.is_unit()) return 0;
        if (dimension(g) != 0) continue;
        return static_cast<long>(quotient_basis(g).size());
    }
    throw GenericityError("bidegree_by_slicing: slice not zero-dimensional after " +
                          std::to_string(kGenericityRetries) + " attempts");
}

}  // namespace realsample

#endif
