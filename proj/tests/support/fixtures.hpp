// Shared test data: sampler fixtures with their known real components,
// bi-homogeneous fixtures, dense random systems and random polynomials.
#ifndef REALSAMPLE_TESTS_FIXTURES_HPP
#define REALSAMPLE_TESTS_FIXTURES_HPP

#include <realsample/bihom/canonical_form.hpp>
#include <realsample/bihom/slicing.hpp>
#include <realsample/groebner/ideal.hpp>
#include <realsample/polycore/parse.hpp>
#include <realsample/sampler/sample.hpp>

#include <functional>
#include <string>
#include <vector>

namespace fixtures {

using namespace realsample;

inline std::vector<Polynomial> polys(const Ring& ring, const std::vector<std::string>& text) {
    std::vector<Polynomial> out;
    for (const auto& t : text) out.push_back(parse_polynomial(t, ring));
    return out;
}

inline InputSystem input(const std::vector<std::string>& vars, const std::vector<std::string>& eqs,
                         bool regular = false) {
    return InputSystem::make(polys(Ring(vars), eqs), regular);
}

/// A connected component, recognised from a certified box by rational
/// hyperplanes that separate it from the other components.
struct Component {
    std::string name;
    std::function<bool(const Box&)> holds;
};

struct SamplerFixture {
    std::string name;
    InputSystem input;
    std::vector<Component> components;
};

inline Component everywhere(const std::string& name) {
    return {name, [](const Box&) { return true; }};
}

/// Component lying in x_var < cut.
inline Component below(const std::string& name, std::size_t var, Rational cut) {
    return {name, [var, cut](const Box& b) { return b[var].hi < cut; }};
}

inline Component above(const std::string& name, std::size_t var, Rational cut) {
    return {name, [var, cut](const Box& b) { return b[var].lo > cut; }};
}

inline SamplerFixture circle() {
    return {"circle", input({"x", "y"}, {"x^2 + y^2 - 1"}), {everywhere("circle")}};
}

inline SamplerFixture two_circles() {
    // (x^2+y^2-1)((x-3)^2+y^2-1), expanded
    return {"two_circles",
            input({"x", "y"}, {"x^4 - 6*x^3 + 2*x^2*y^2 + 7*x^2 - 6*x*y^2 + 6*x + y^4 + 7*y^2 - 8"}),
            {below("left", 0, Rational(3, 2)), above("right", 0, Rational(3, 2))}};
}

inline SamplerFixture hyperbola() {
    return {"hyperbola", input({"x", "y"}, {"x*y - 1"}), {above("x>0", 0, 0), below("x<0", 0, 0)}};
}

inline SamplerFixture empty_real() {
    return {"empty", input({"x", "y"}, {"x^2 + y^2 + 1"}), {}};
}

inline SamplerFixture sphere() {
    return {"sphere", input({"x", "y", "z"}, {"x^2 + y^2 + z^2 - 1"}), {everywhere("sphere")}};
}

inline SamplerFixture torus() {
    return {"torus",
            input({"x", "y", "z"},
                  {"x^4 + y^4 + z^4 + 2*x^2*y^2 + 2*x^2*z^2 + 2*y^2*z^2 - 10*x^2 - 10*y^2 + 6*z^2 + 9"}),
            {everywhere("torus")}};
}

/// The five fixtures with known components that stay fast.
inline std::vector<SamplerFixture> desk_fixtures() {
    return {circle(), two_circles(), hyperbola(), empty_real(), sphere()};
}

/// A bi-homogeneous ideal with the affine Krull dimension D of its cone.
struct BiFixture {
    std::string name;
    std::vector<Polynomial> gens;
    BlockSplit split;
    long D = 0;
    Ring ring;
};

inline BiFixture bi(const std::string& name, const std::vector<std::string>& xs, const std::vector<std::string>& ls,
                    const std::vector<std::string>& eqs, long D) {
    std::vector<std::string> all = xs;
    all.insert(all.end(), ls.begin(), ls.end());
    Ring ring(all);
    return {name, polys(ring, eqs), BlockSplit{xs, ls, std::nullopt, std::nullopt}, D, ring};
}

/// Admissible fixtures (products of generic bi-linear forms and
/// hypersurfaces), each with its bi-degrees worked out by intersection
/// numbers on P^n x P^k.
inline std::vector<BiFixture> bi_fixtures() {
    std::vector<BiFixture> out;
    out.push_back(bi("P1xP1", {"x0", "x1"}, {"l0", "l1"}, {}, 4));
    out.push_back(bi("bilinear_P1xP1", {"x0", "x1"}, {"l0", "l1"}, {"2*x0*l0 - 3*x0*l1 + 5*x1*l0 + 7*x1*l1"}, 3));
    out.push_back(bi("bilinear_pair", {"x0", "x1", "x2"}, {"l0", "l1"},
                     {"3*x0*l0 - 2*x1*l1 + x2*l0 + 5*x2*l1", "x0*l1 + 4*x1*l0 - 7*x2*l1 + x1*l1"}, 3));
    out.push_back(bi("conic_x_P1", {"x0", "x1", "x2"}, {"l0", "l1"}, {"x1^2 + x2^2 - 4*x0^2 + x0*x1"}, 4));
    BiFixture prod = bi("line_times_bilinear", {"x0", "x1"}, {"l0", "l1"}, {"x0 - 2*x1"}, 3);
    prod.gens[0] *= parse_polynomial("2*x0*l0 - 3*x0*l1 + 5*x1*l0 + 7*x1*l1", prod.ring);
    out.push_back(prod);
    out.push_back(bi("two_bilinear_P2xP2", {"x0", "x1", "x2"}, {"l0", "l1", "l2"},
                     {"x0*l0 + 2*x1*l1 - 3*x2*l2 + x0*l2 - x2*l1", "5*x0*l1 - x1*l0 + 4*x2*l0 + x1*l2 + 3*x2*l2"},
                     4));
    return out;
}

// g is a nonzerodivisor mod J iff J \cap <g> = g J; the intersection comes
// from eliminating t in t J + (1 - t) g.
inline bool is_nonzerodivisor(const std::vector<Polynomial>& J, const Polynomial& g, const Ring& ring) {
    if (J.empty()) return !g.is_zero();
    std::vector<std::string> names = ring.names();
    names.push_back("t_");
    Ring big(names);
    Polynomial t = Polynomial::variable(big, "t_");
    std::vector<Polynomial> gens;
    for (const auto& j : J) gens.push_back(t * j.map_to(big));
    gens.push_back((Polynomial::constant(big, 1) - t) * g.map_to(big));
    std::vector<Polynomial> gJ;
    for (const auto& j : J) gJ.push_back(g * j);
    GroebnerBasis prod = groebner_basis(gJ, MonomialOrder::degrevlex(ring));
    for (const auto& h : eliminate(gens, big, {"t_"}))
        if (!normal_form(h.map_to(ring), prod).is_zero()) return false;
    return true;
}

/// Pairs (d, e) with d + e = D - 2 that fit the blocks.
inline std::vector<std::pair<long, long>> admissible_pairs(const BiFixture& f) {
    const long n = static_cast<long>(f.split.x_vars.size()) - 1;
    const long k = static_cast<long>(f.split.l_vars.size()) - 1;
    std::vector<std::pair<long, long>> out;
    for (long d = 0; d <= n; ++d) {
        long e = f.D - 2 - d;
        if (e >= 0 && e <= k) out.push_back({d, e});
    }
    return out;
}

/// Dense polynomial of total degree D in the ring, integer coefficients in
/// [-9, 9] and a nonzero coefficient on x_0^D.
inline Polynomial dense(const Ring& ring, long D, Rng& rng) {
    Polynomial f(ring);
    std::vector<std::size_t> all(ring.size());
    for (std::size_t v = 0; v < ring.size(); ++v) all[v] = v;
    for (long deg = 0; deg <= D; ++deg)
        detail::for_each_monomial(ring.size(), all, deg, [&](const Monomial& m) {
            long c = rng.uniform(-9, 9);
            if (c != 0) f += Polynomial::monomial(ring, m, c);
        });
    f += Polynomial::monomial(ring, Monomial::unit(ring.size(), 0, static_cast<Monomial::exponent_type>(D)),
                              rng.uniform_nonzero(9));
    return f;
}

inline InputSystem dense_system(std::size_t n, std::size_t s, long D, Rng& rng) {
    std::vector<std::string> names;
    for (std::size_t v = 0; v < n; ++v) names.push_back("x" + std::to_string(v + 1));
    Ring ring(names);
    std::vector<Polynomial> fs;
    for (std::size_t j = 0; j < s; ++j) fs.push_back(dense(ring, D, rng));
    return InputSystem::make(fs, true);
}

/// Sparse random polynomial with rational coefficients p/q.
inline Polynomial random_polynomial(const Ring& ring, Rng& rng, int max_terms = 6, long max_exp = 3) {
    Polynomial f(ring);
    const int terms = static_cast<int>(rng.uniform(0, max_terms));
    for (int t = 0; t < terms; ++t) {
        Monomial m(ring.size());
        for (std::size_t v = 0; v < ring.size(); ++v)
            m.set(v, static_cast<Monomial::exponent_type>(rng.uniform(0, max_exp)));
        f += Polynomial::monomial(ring, m, make_rational(rng.uniform(-20, 20), rng.uniform(1, 9)));
    }
    return f;
}

}  // namespace fixtures

#endif
