#ifndef REALSAMPLE_POLYCORE_BLOCKS_HPP
#define REALSAMPLE_POLYCORE_BLOCKS_HPP

#include <realsample/polycore/polynomial.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace realsample {

/// Partition of a ring's variables into the X-block and the l-block. The
/// homogenizing variables, when present, are named in `x0` / `l0` and are also
/// members of the corresponding block.
struct BlockSplit {
    std::vector<std::string> x_vars;
    std::vector<std::string> l_vars;
    std::optional<std::string> x0;
    std::optional<std::string> l0;

    bool x0_present() const { return x0.has_value(); }
    bool l0_present() const { return l0.has_value(); }

    /// Affine counts n and k (block sizes minus the homogenizing variable).
    std::size_t n() const { return x_vars.size() - (x0 ? 1 : 0); }
    std::size_t k() const { return l_vars.size() - (l0 ? 1 : 0); }

    /// Throws unless the two blocks are disjoint and cover `ring` exactly.
    void validate(const Ring& ring) const {
        std::vector<int> seen(ring.size(), 0);
        for (const auto& v : x_vars) ++seen[ring.require_index(v)];
        for (const auto& v : l_vars) ++seen[ring.require_index(v)];
        for (std::size_t i = 0; i < seen.size(); ++i)
            if (seen[i] != 1)
                throw std::invalid_argument("block split does not partition the ring at '" + ring.name(i) + "'");
        auto member = [](const std::vector<std::string>& b, const std::string& v) {
            return std::find(b.begin(), b.end(), v) != b.end();
        };
        if (x0 && !member(x_vars, *x0)) throw std::invalid_argument("x0 is not in the X-block");
        if (l0 && !member(l_vars, *l0)) throw std::invalid_argument("l0 is not in the l-block");
    }

    /// mask[i] is true iff ring variable i is in the X-block.
    std::vector<bool> x_mask(const Ring& ring) const {
        std::vector<bool> mask(ring.size(), false);
        for (const auto& v : x_vars) mask[ring.require_index(v)] = true;
        return mask;
    }

    std::vector<bool> l_mask(const Ring& ring) const {
        std::vector<bool> mask(ring.size(), false);
        for (const auto& v : l_vars) mask[ring.require_index(v)] = true;
        return mask;
    }

    /// Ring whose variable order is X-block then l-block.
    Ring ring() const {
        auto all = x_vars;
        all.insert(all.end(), l_vars.begin(), l_vars.end());
        return Ring(std::move(all));
    }

    friend bool operator==(const BlockSplit&, const BlockSplit&) = default;
};

struct BiDegree {
    long alpha = 0;
    long beta = 0;
    friend bool operator==(const BiDegree&, const BiDegree&) = default;
};

struct BiDegreeInfo {
    BiDegree degree;
    bool is_bihomogeneous = false;
};

/// Max X-block degree and max l-block degree over the support, plus whether
/// every term carries exactly that pair. The zero polynomial gets (0,0), true.
inline BiDegreeInfo bidegree_of(const Polynomial& f, const BlockSplit& split) {
    auto xm = split.x_mask(f.ring());
    auto lm = split.l_mask(f.ring());
    BiDegreeInfo info{{0, 0}, true};
    if (f.is_zero()) return info;
    std::vector<BiDegree> degs;
    for (const auto& t : f.terms()) {
        BiDegree d{static_cast<long>(t.mono.degree_in(xm)), static_cast<long>(t.mono.degree_in(lm))};
        info.degree.alpha = std::max(info.degree.alpha, d.alpha);
        info.degree.beta = std::max(info.degree.beta, d.beta);
        degs.push_back(d);
    }
    for (const auto& d : degs)
        if (!(d == info.degree)) info.is_bihomogeneous = false;
    return info;
}

struct Bihomogenized {
    Polynomial poly;
    BlockSplit split;
};

/// X0^degX l0^degl f(X/X0, l/l0). Homogenizing variables are appended to the
/// ring (X0 first) unless the split already names them.
inline Bihomogenized bihomogenize(const Polynomial& f, const BlockSplit& split, const std::string& x0_name = "X0",
                                 const std::string& l0_name = "L0") {
    split.validate(f.ring());
    BlockSplit out_split = split;
    Ring ring = f.ring();
    std::vector<std::string> extra;
    if (split.x0) {
        if (f.involves(ring.require_index(*split.x0)))
            throw std::invalid_argument("bihomogenize: input involves homogenizing variable " + *split.x0);
    } else {
        extra.push_back(x0_name);
        out_split.x0 = x0_name;
        out_split.x_vars.insert(out_split.x_vars.begin(), x0_name);
    }
    if (split.l0) {
        if (f.involves(ring.require_index(*split.l0)))
            throw std::invalid_argument("bihomogenize: input involves homogenizing variable " + *split.l0);
    } else {
        extra.push_back(l0_name);
        out_split.l0 = l0_name;
        out_split.l_vars.insert(out_split.l_vars.begin(), l0_name);
    }
    Ring target = extra.empty() ? ring : ring.extended(extra);
    Polynomial lifted = f.map_to(target);
    auto xm = out_split.x_mask(target);
    auto lm = out_split.l_mask(target);
    std::size_t ix0 = target.require_index(*out_split.x0);
    std::size_t il0 = target.require_index(*out_split.l0);
    auto info = bidegree_of(lifted, out_split);
    std::vector<Term> terms;
    for (const auto& t : lifted.terms()) {
        Monomial m = t.mono;
        m.set(ix0, static_cast<Monomial::exponent_type>(info.degree.alpha - static_cast<long>(t.mono.degree_in(xm))));
        m.set(il0, static_cast<Monomial::exponent_type>(info.degree.beta - static_cast<long>(t.mono.degree_in(lm))));
        terms.push_back({std::move(m), t.coeff});
    }
    return {Polynomial::from_terms(target, std::move(terms)), out_split};
}

struct Dehomogenized {
    Polynomial poly;
    BlockSplit split;
};

/// Sets X0 = 1 and l0 = 1 and drops them from the ring and the split.
inline Dehomogenized dehomogenize(const Polynomial& f, const BlockSplit& split) {
    const Ring& ring = f.ring();
    std::vector<bool> drop(ring.size(), false);
    BlockSplit out = split;
    if (split.x0) {
        drop[ring.require_index(*split.x0)] = true;
        std::erase(out.x_vars, *split.x0);
        out.x0.reset();
    }
    if (split.l0) {
        drop[ring.require_index(*split.l0)] = true;
        std::erase(out.l_vars, *split.l0);
        out.l0.reset();
    }
    std::vector<std::string> kept;
    std::vector<std::size_t> from;
    for (std::size_t i = 0; i < ring.size(); ++i)
        if (!drop[i]) {
            kept.push_back(ring.name(i));
            from.push_back(i);
        }
    Ring target(kept);
    std::vector<Term> terms;
    for (const auto& t : f.terms()) {
        Monomial m(target.size());
        for (std::size_t j = 0; j < from.size(); ++j) m.set(j, t.mono[from[j]]);
        terms.push_back({std::move(m), t.coeff});
    }
    return {Polynomial::from_terms(target, std::move(terms)), out};
}

}  // namespace realsample

#endif
