#ifndef REALSAMPLE_GROEBNER_BUCHBERGER_HPP
#define REALSAMPLE_GROEBNER_BUCHBERGER_HPP

#include <realsample/groebner/order.hpp>

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

namespace realsample {

namespace detail {

struct ZTerm {
    Monomial mono;
    Integer coeff;
};

/// Integer polynomial with terms sorted decreasingly for a given order.
using ZPoly = std::vector<ZTerm>;

inline Integer content(const ZPoly& p) {
    Integer g = 0;
    for (const auto& t : p) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coeff.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

/// Divides out the content and makes the leading coefficient positive.
/// Returns the factor removed (signed).
inline Integer make_primitive(ZPoly& p) {
    if (p.empty()) return 1;
    Integer c = content(p);
    if (p.front().coeff < 0) c = -c;
    if (c != 1)
        for (auto& t : p) mpz_divexact(t.coeff.get_mpz_t(), t.coeff.get_mpz_t(), c.get_mpz_t());
    return c;
}

inline void sort_terms(ZPoly& p, const MonomialOrder& order) {
    std::sort(p.begin(), p.end(), [&](const ZTerm& a, const ZTerm& b) { return order.greater(a.mono, b.mono); });
}

/// Clears denominators of a rational polynomial (no content removal).
/// Returns the multiplier used.
inline ZPoly to_zpoly(const Polynomial& f, const MonomialOrder& order, Integer* multiplier = nullptr) {
    Integer den = 1;
    for (const auto& t : f.terms()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.coeff.get_den_mpz_t());
    ZPoly p;
    p.reserve(f.size());
    for (const auto& t : f.terms()) {
        Integer c = t.coeff.get_num() * (den / t.coeff.get_den());
        p.push_back({t.mono, c});
    }
    sort_terms(p, order);
    if (multiplier) *multiplier = den;
    return p;
}

inline Polynomial to_polynomial(const ZPoly& p, const Ring& ring, const Rational& scale = 1) {
    std::vector<Term> terms;
    terms.reserve(p.size());
    for (const auto& t : p) terms.push_back({t.mono, Rational(t.coeff) / scale});
    return Polynomial::from_terms(ring, std::move(terms));
}

/// a*h - b*q*g, all terms kept sorted.
inline ZPoly axpy(const ZPoly& h, const Integer& a, const ZPoly& g, const Monomial& q, const Integer& b,
                  const MonomialOrder& order) {
    ZPoly out;
    out.reserve(h.size() + g.size());
    std::size_t i = 0, j = 0;
    while (i < h.size() || j < g.size()) {
        if (j == g.size()) {
            out.push_back({h[i].mono, a * h[i].coeff});
            ++i;
            continue;
        }
        Monomial gm = g[j].mono * q;
        int c = i == h.size() ? -1 : order.compare(h[i].mono, gm);
        if (c > 0) {
            out.push_back({h[i].mono, a * h[i].coeff});
            ++i;
        } else if (c < 0) {
            out.push_back({std::move(gm), -b * g[j].coeff});
            ++j;
        } else {
            Integer v = a * h[i].coeff - b * g[j].coeff;
            if (v != 0) out.push_back({std::move(gm), std::move(v)});
            ++i;
            ++j;
        }
    }
    return out;
}

/// Fully reduces h by the polynomials in `basis` (each with positive leading
/// coefficient). On return h_out / scale is congruent to h_in modulo the ideal.
inline ZPoly reduce(ZPoly h, const std::vector<const ZPoly*>& basis, const MonomialOrder& order, Rational* scale) {
    std::size_t pos = 0;
    unsigned steps = 0;
    while (pos < h.size()) {
        const ZPoly* red = nullptr;
        for (const ZPoly* g : basis) {
            if (g->front().mono.divides(h[pos].mono) && (red == nullptr || g->size() < red->size())) red = g;
        }
        if (!red) {
            ++pos;
            continue;
        }
        const Integer& lg = red->front().coeff;
        Integer gcd;
        mpz_gcd(gcd.get_mpz_t(), lg.get_mpz_t(), h[pos].coeff.get_mpz_t());
        Integer a = lg / gcd;
        Integer b = h[pos].coeff / gcd;
        Monomial q = h[pos].mono / red->front().mono;
        h = axpy(h, a, *red, q, b, order);
        if (scale) *scale *= a;
        if (++steps % 8 == 0 || pos == 0) {
            Integer c = content(h);
            if (c > 1) {
                for (auto& t : h) mpz_divexact(t.coeff.get_mpz_t(), t.coeff.get_mpz_t(), c.get_mpz_t());
                if (scale) *scale /= c;
            }
        }
    }
    return h;
}

struct CriticalPair {
    std::size_t i, j;
    Monomial lcm;
    std::uint64_t sugar;
};

class Buchberger {
public:
    explicit Buchberger(const MonomialOrder& order) : order_(order) {}

    std::vector<ZPoly> run(const std::vector<Polynomial>& gens) {
        for (const auto& f : gens) {
            if (f.is_zero()) continue;
            if (!(f.ring() == order_.ring())) throw std::invalid_argument("groebner: generator outside the order's ring");
            ZPoly p = to_zpoly(f, order_);
            std::uint64_t sugar = static_cast<std::uint64_t>(f.total_degree());
            p = reduce(std::move(p), active_basis(), order_, nullptr);
            if (p.empty()) continue;
            make_primitive(p);
            insert(std::move(p), sugar);
            if (unit_found_) break;
        }
        while (!pairs_.empty() && !unit_found_) {
            std::size_t best = 0;
            for (std::size_t k = 1; k < pairs_.size(); ++k) {
                const auto& a = pairs_[k];
                const auto& b = pairs_[best];
                if (a.sugar < b.sugar || (a.sugar == b.sugar && order_.compare(a.lcm, b.lcm) < 0)) best = k;
            }
            CriticalPair pr = pairs_[best];
            pairs_.erase(pairs_.begin() + static_cast<std::ptrdiff_t>(best));
            ZPoly s = spoly(polys_[pr.i], polys_[pr.j], pr.lcm);
            s = reduce(std::move(s), active_basis(), order_, nullptr);
            if (s.empty()) continue;
            make_primitive(s);
            insert(std::move(s), pr.sugar);
        }
        return finalize();
    }

private:
    std::vector<const ZPoly*> active_basis() const {
        std::vector<const ZPoly*> out;
        out.reserve(active_.size());
        for (auto i : active_) out.push_back(&polys_[i]);
        return out;
    }

    ZPoly spoly(const ZPoly& f, const ZPoly& g, const Monomial& l) const {
        const Integer& a = f.front().coeff;
        const Integer& b = g.front().coeff;
        Integer gcd;
        mpz_gcd(gcd.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        ZPoly fs;
        fs.reserve(f.size());
        Monomial qf = l / f.front().mono;
        Integer bf = b / gcd;
        for (std::size_t k = 1; k < f.size(); ++k) fs.push_back({f[k].mono * qf, bf * f[k].coeff});
        ZPoly gtail(g.begin() + 1, g.end());
        return axpy(fs, 1, gtail, l / g.front().mono, a / gcd, order_);
    }

    // Gebauer-Moeller installation of a new basis element.
    void insert(ZPoly h, std::uint64_t sugar) {
        const std::size_t hi = polys_.size();
        const Monomial lh = h.front().mono;
        if (lh.is_one()) unit_found_ = true;
        polys_.push_back(std::move(h));
        sugars_.push_back(sugar);

        std::vector<CriticalPair> fresh;
        for (auto g : active_) {
            const Monomial& lg = polys_[g].front().mono;
            Monomial l = lcm(lh, lg);
            std::uint64_t s = std::max(sugar + l.degree() - lh.degree(), sugars_[g] + l.degree() - lg.degree());
            fresh.push_back({g, hi, std::move(l), s});
        }
        // Chain criterion among the new pairs: keep (g,h) unless another new
        // pair's lcm strictly divides it; ties keep the first occurrence.
        std::vector<bool> keep(fresh.size(), true);
        for (std::size_t a = 0; a < fresh.size(); ++a) {
            for (std::size_t b = 0; b < fresh.size() && keep[a]; ++b) {
                if (a == b || !keep[b]) continue;
                if (fresh[b].lcm.divides(fresh[a].lcm) && (!(fresh[b].lcm == fresh[a].lcm) || b < a))
                    keep[a] = false;
            }
        }
        std::vector<CriticalPair> kept;
        for (std::size_t a = 0; a < fresh.size(); ++a) {
            if (!keep[a]) continue;
            const Monomial& lg = polys_[fresh[a].i].front().mono;
            if (lg.coprime_with(lh)) continue;  // product criterion
            kept.push_back(std::move(fresh[a]));
        }
        // Old pairs made redundant by h.
        std::erase_if(pairs_, [&](const CriticalPair& p) {
            if (!lh.divides(p.lcm)) return false;
            const Monomial& li = polys_[p.i].front().mono;
            const Monomial& lj = polys_[p.j].front().mono;
            return !(lcm(li, lh) == p.lcm) && !(lcm(lj, lh) == p.lcm);
        });
        for (auto& p : kept) pairs_.push_back(std::move(p));
        std::erase_if(active_, [&](std::size_t g) { return lh.divides(polys_[g].front().mono); });
        // Keep the other elements reduced by h; their leading terms do not change.
        const std::vector<const ZPoly*> by_h{&polys_[hi]};
        for (auto g : active_) {
            ZPoly& f = polys_[g];
            bool hit = false;
            for (std::size_t t = 1; t < f.size() && !hit; ++t) hit = lh.divides(f[t].mono);
            if (!hit) continue;
            ZPoly tail(f.begin() + 1, f.end());
            Rational scale = 1;
            tail = reduce(std::move(tail), by_h, order_, &scale);
            ZPoly combined{{f.front().mono, f.front().coeff * scale.get_num()}};
            for (auto& t : tail) combined.push_back({t.mono, t.coeff * scale.get_den()});
            make_primitive(combined);
            f = std::move(combined);
        }
        active_.push_back(hi);
    }

    std::vector<ZPoly> finalize() {
        if (unit_found_) return {ZPoly{ZTerm{Monomial(order_.ring().size()), Integer(1)}}};
        std::vector<ZPoly> basis;
        for (auto i : active_) basis.push_back(polys_[i]);
        // Drop non-minimal elements.
        std::vector<ZPoly> minimal;
        for (std::size_t a = 0; a < basis.size(); ++a) {
            bool redundant = false;
            for (std::size_t b = 0; b < basis.size() && !redundant; ++b) {
                if (a == b) continue;
                const auto& la = basis[a].front().mono;
                const auto& lb = basis[b].front().mono;
                if (lb.divides(la) && (!(la == lb) || b < a)) redundant = true;
            }
            if (!redundant) minimal.push_back(basis[a]);
        }
        // Interreduce tails.
        for (std::size_t a = 0; a < minimal.size(); ++a) {
            std::vector<const ZPoly*> others;
            for (std::size_t b = 0; b < minimal.size(); ++b)
                if (b != a) others.push_back(&minimal[b]);
            ZPoly head{minimal[a].front()};
            ZPoly tail(minimal[a].begin() + 1, minimal[a].end());
            Rational scale = 1;
            tail = reduce(std::move(tail), others, order_, &scale);
            // head*scale + tail keeps the same ideal element up to a unit.
            ZPoly combined;
            Integer num = scale.get_num(), den = scale.get_den();
            combined.push_back({head[0].mono, head[0].coeff * num});
            for (auto& t : tail) combined.push_back({t.mono, t.coeff * den});
            make_primitive(combined);
            minimal[a] = std::move(combined);
        }
        std::sort(minimal.begin(), minimal.end(),
                  [&](const ZPoly& x, const ZPoly& y) { return order_.compare(x.front().mono, y.front().mono) < 0; });
        return minimal;
    }

    const MonomialOrder& order_;
    std::vector<ZPoly> polys_;
    std::vector<std::uint64_t> sugars_;
    std::vector<std::size_t> active_;
    std::vector<CriticalPair> pairs_;
    bool unit_found_ = false;
};

}  // namespace detail

/// Reduced Groebner basis: monic generators sorted by increasing leading
/// monomial. The unit ideal is [1]; the zero ideal has no generators.
class GroebnerBasis {
public:
    GroebnerBasis(MonomialOrder order, std::vector<detail::ZPoly> zgens)
        : order_(std::move(order)), zgens_(std::move(zgens)) {
        for (const auto& z : zgens_) {
            Rational lc = z.front().coeff;
            gens_.push_back(detail::to_polynomial(z, order_.ring(), lc));
            lms_.push_back(z.front().mono);
        }
    }

    const MonomialOrder& order() const noexcept { return order_; }
    const Ring& ring() const noexcept { return order_.ring(); }
    const std::vector<Polynomial>& generators() const noexcept { return gens_; }
    const std::vector<Monomial>& leading_monomials() const noexcept { return lms_; }
    std::size_t size() const noexcept { return gens_.size(); }
    bool is_unit() const noexcept { return lms_.size() == 1 && lms_[0].is_one(); }
    bool is_zero_ideal() const noexcept { return gens_.empty(); }

    /// Integer (primitive) forms of the generators, sorted by the order.
    const std::vector<detail::ZPoly>& integer_generators() const noexcept { return zgens_; }

private:
    MonomialOrder order_;
    std::vector<detail::ZPoly> zgens_;
    std::vector<Polynomial> gens_;
    std::vector<Monomial> lms_;
};

/// Buchberger's algorithm with the sugar strategy and the Gebauer-Moeller
/// criteria, fraction-free over the integers.
inline GroebnerBasis groebner_basis(const std::vector<Polynomial>& gens, const MonomialOrder& order) {
    detail::Buchberger engine(order);
    return GroebnerBasis(order, engine.run(gens));
}

/// Remainder of f modulo G; zero iff f is in the ideal.
inline Polynomial normal_form(const Polynomial& f, const GroebnerBasis& g) {
    if (!(f.ring() == g.ring())) throw std::invalid_argument("normal_form: polynomial outside the basis ring");
    if (f.is_zero()) return f;
    Integer mult;
    detail::ZPoly z = detail::to_zpoly(f, g.order(), &mult);
    std::vector<const detail::ZPoly*> basis;
    for (const auto& b : g.integer_generators()) basis.push_back(&b);
    Rational scale = Rational(mult);
    z = detail::reduce(std::move(z), basis, g.order(), &scale);
    return detail::to_polynomial(z, g.ring(), scale);
}

/// S-polynomial over Q (monic-leading form), exposed for checking bases.
inline Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& order) {
    Monomial lf = leading_monomial(f, order), lg = leading_monomial(g, order);
    Monomial l = lcm(lf, lg);
    Rational cf = leading_coefficient(f, order), cg = leading_coefficient(g, order);
    const Ring& r = f.ring();
    return Polynomial::monomial(r, l / lf, Rational(1) / cf) * f - Polynomial::monomial(r, l / lg, Rational(1) / cg) * g;
}

}  // namespace realsample

#endif
