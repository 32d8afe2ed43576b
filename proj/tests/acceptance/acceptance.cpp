// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include "fixtures.hpp"

#include <realsample/bihom/bounds.hpp>
#include <realsample/lagrange/membership.hpp>
#include <realsample/lagrange/system.hpp>

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

using namespace realsample;
using fixtures::SamplerFixture;

namespace {

struct Outcome {
    bool ok = true;
    std::ostringstream note;

    void require(bool cond, const std::string& what) {
        if (!cond && ok) note << "first failure: " << what;
        ok = ok && cond;
    }
};

int failures = 0;

void criterion(const std::string& name, double limit_s, const std::function<void(Outcome&)>& body) {
    Outcome out;
    auto t0 = std::chrono::steady_clock::now();
    try {
        body(out);
    } catch (const std::exception& e) {
        out.ok = false;
        out.note << "exception: " << e.what();
    }
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (s >= limit_s) {
        if (out.ok) out.note << "too slow";
        out.ok = false;
    }
    if (!out.ok) ++failures;
    std::cout << (out.ok ? "PASS " : "FAIL ") << name << " (" << s << " s, limit " << limit_s << " s)";
    if (!out.note.str().empty()) std::cout << ": " << out.note.str();
    std::cout << std::endl;
}

long degree_of(const std::vector<Polynomial>& gens, const Ring& ring) {
    GroebnerBasis g = groebner_basis(gens, MonomialOrder::degrevlex(ring));
    if (g.is_unit()) return 0;
    return static_cast<long>(quotient_basis(g).size());
}

std::vector<Polynomial> eliminated(const LagrangeSystem& sys) {
    return sys.multipliers.empty() ? sys.polys : eliminate(sys.polys, sys.ring, sys.multipliers);
}

std::vector<GroebnerBasis> fixture_bases() {
    std::vector<GroebnerBasis> out;
    Ring xy({"x", "y"}), xyz({"x", "y", "z"});
    std::vector<std::vector<Polynomial>> ideals = {
        fixtures::polys(xy, {"x^2 + y^2 - 1", "x - y"}),
        fixtures::polys(xyz, {"x*y - z", "y*z - x", "x*z - y"}),
        fixtures::polys(xyz, {"x^2 + y^2 + z^2 - 4", "x^2 - 2*x + y^2"}),
        fixtures::polys(xy, {"x^3 - y^2", "x*y - 1"}),
    };
    for (const auto& fx : fixtures::desk_fixtures()) {
        ideals.push_back(fx.input.polys);
        LagrangeSystem sys = build_projection_system(fx.input, LinearChange::identity(fx.input.n()));
        out.push_back(groebner_basis(sys.polys, MonomialOrder::degrevlex(sys.ring)));
    }
    for (const auto& f : ideals) {
        out.push_back(groebner_basis(f, MonomialOrder::degrevlex(f.front().ring())));
        out.push_back(groebner_basis(f, MonomialOrder::lex(f.front().ring())));
    }
    for (const auto& f : fixtures::bi_fixtures())
        if (!f.gens.empty()) out.push_back(groebner_basis(f.gens, MonomialOrder::degrevlex(f.ring)));
    return out;
}

}  // namespace

int main() {
    criterion("bound calculator exactness", 1, [](Outcome& o) {
        o.require(bezout_bound(BoundInputs{2, 1, {BiDegree{2, 1}, BiDegree{1, 1}}}) == 5, "bezout (2,1),(1,1) n=2 k=1");
        o.require(critical_bound({2}, 2, true) == 2, "critical D=2 n=2 s=1 regular");
        o.require(critical_bound({2}, 3, false) == 6, "critical D=2 n=3 s=1 non-regular");
        o.require(thom_milnor_bound(2, 2) == 6, "thom_milnor(2,2)");
    });

    criterion("bi-series closed form of the zero ideal", 5, [](Outcome& o) {
        const std::pair<long, long> nk[] = {{0, 0}, {1, 0}, {1, 1}, {2, 1}};
        for (auto [n, k] : nk) {
            std::vector<std::string> xs, ls;
            for (long i = 0; i <= n; ++i) xs.push_back("x" + std::to_string(i));
            for (long j = 0; j <= k; ++j) ls.push_back("l" + std::to_string(j));
            BiSeriesTable t = hilbert_biseries({}, BlockSplit{xs, ls, std::nullopt, std::nullopt}, 9, 9);
            for (long i = 0; i <= 9; ++i)
                for (long j = 0; j <= 9; ++j)
                    o.require(Integer(t.at(i, j)) == binomial(i + n, n) * binomial(j + k, k),
                              "(n,k)=(" + std::to_string(n) + "," + std::to_string(k) + ")");
        }
    });

    criterion("two-route bi-degree agreement", 60, [](Outcome& o) {
        std::size_t fx = 0, compared = 0;
        for (const auto& f : fixtures::bi_fixtures()) {
            ++fx;
            for (std::uint64_t seed : {1u, 2u, 3u}) {
                CanonicalFormResult cf = canonical_form_adaptive(f.gens, f.split, f.D);
                Rng rng(seed);
                for (auto [d, e] : fixtures::admissible_pairs(f)) {
                    long sliced = bidegree_by_slicing(f.gens, f.split, d, e, rng);
                    o.require(cf.form.c(d, e) == sliced, f.name + " C_" + std::to_string(d) + std::to_string(e));
                    ++compared;
                }
            }
        }
        o.require(fx >= 5, "at least 5 fixtures");
        o.note << fx << " fixtures, " << compared << " comparisons";
    });

    criterion("specialization identity", 10, [](Outcome& o) {
        for (const auto& f : fixtures::bi_fixtures()) {
            BiSeriesTable t = hilbert_biseries(f.gens, f.split, 8, 8);
            GroebnerBasis lex = groebner_basis(f.gens, MonomialOrder::lex(f.ring));
            o.require(specialize_to_hilbert_series(t, 8) == hilbert_function(lex, 8), f.name);
        }
    });

    criterion("non-zerodivisor multiplication", 60, [](Outcome& o) {
        std::size_t checked = 0;
        std::vector<std::string> skipped;
        for (const auto& f : fixtures::bi_fixtures()) {
            Rng rng(77);
            auto xs = detail::indices_of(f.ring, f.split.x_vars);
            auto ls = detail::indices_of(f.ring, f.split.l_vars);
            Polynomial g = detail::random_form(f.ring, xs, rng) * detail::random_form(f.ring, ls, rng) +
                           detail::random_form(f.ring, xs, rng) * detail::random_form(f.ring, ls, rng);
            if (!fixtures::is_nonzerodivisor(f.gens, g, f.ring)) {
                skipped.push_back(f.name);
                continue;
            }
            ++checked;
            std::vector<Polynomial> more = f.gens;
            more.push_back(g);
            BiSeriesTable before = hilbert_biseries(f.gens, f.split, 8, 8);
            BiSeriesTable after = hilbert_biseries(more, f.split, 8, 8);
            for (long i = 0; i <= 8; ++i)
                for (long j = 0; j <= 8; ++j)
                    o.require(after.at(i, j) == before.at(i, j) - (i > 0 && j > 0 ? before.at(i - 1, j - 1) : 0),
                              f.name);
        }
        o.require(checked >= 5, "at least 5 fixtures with g a nonzerodivisor");
        o.note << checked << " fixtures";
        for (const auto& s : skipped) o.note << "; g is a zerodivisor on " << s;
    });

    criterion("critical-locus degree vs bound", 300, [](Outcome& o) {
        InputSystem circle = fixtures::input({"x", "y"}, {"x^2 + y^2 - 1"}, true);
        Rng rng(1);
        LagrangeSystem red = build_reduced_projection_system(circle, LinearChange::identity(2), rng);
        long c = degree_of(red.polys, red.ring);
        o.require(c == 2 && critical_bound({2}, 2, true) == 2, "circle reduced system degree 2");
        struct Shape {
            std::size_t n, s;
            long D;
        };
        const Shape shapes[] = {{2, 1, 2}, {2, 1, 3}, {3, 1, 2}, {3, 2, 2}, {3, 1, 3}};
        int equal = 0;
        o.note << "circle 2";
        for (auto sh : shapes) {
            Rng r(1000 + sh.n * 100 + sh.s * 10 + static_cast<std::uint64_t>(sh.D));
            InputSystem in = fixtures::dense_system(sh.n, sh.s, sh.D, r);
            LagrangeSystem sys = build_projection_system(in, LinearChange::identity(sh.n));
            long deg = degree_of(eliminated(sys), in.ring);
            Integer bound = critical_bound(in.degrees(), static_cast<long>(sh.n), true);
            o.require(Integer(deg) <= bound, "dense instance above bound");
            equal += Integer(deg) == bound;
            o.note << "; (n,s,D)=(" << sh.n << "," << sh.s << "," << sh.D << ") " << deg << "/" << bound;
        }
        o.require(equal >= 1, "no dense instance reaches the bound");
    });

    criterion("sampler completeness on known components", 300, [](Outcome& o) {
        std::size_t runs = 0, points = 0;
        for (const SamplerFixture& fx : fixtures::desk_fixtures()) {
            for (std::uint64_t seed : {1u, 2u, 3u}) {
                SampleOptions opt;
                opt.seed = seed;
                SampleReport rep = sample_real_points(fx.input, opt);
                ++runs;
                std::string tag = fx.name + " seed " + std::to_string(seed);
                for (const auto& c : fx.components) {
                    bool hit = false;
                    for (const auto& pt : rep.points) hit = hit || c.holds(pt.coords);
                    o.require(hit, tag + " misses " + c.name);
                }
                if (fx.components.empty()) o.require(rep.points.empty(), tag + " has points");
                for (const auto& pt : rep.points) {
                    o.require(verify_on_variety(pt, fx.input), tag + " box off the variety");
                    if (static_cast<std::size_t>(pt.fiber_depth) < fx.input.n()) {
                        FiberCriticality fc = fiber_criticality(fx.input, *rep.A, rep.p, pt.fiber_depth);
                        o.require(lagrange_membership_check(pt.coords, fc.constraints, fc.objective),
                                  tag + " box not critical");
                    }
                }
                o.require(rep.betti.has_value() || rep.points.empty(), tag + " without betti bound");
                o.require(rep.within_betti_bound(), tag + " exceeds betti bound");
                points += rep.points.size();
            }
        }
        o.note << runs << " runs, " << points << " points";
    });

    criterion("betti-bound dominance", 1, [](Outcome& o) {
        long cases = 0;
        for (long D = 2; D <= 8; ++D)
            for (long n = 2; n <= 8; ++n)
                for (long s = 1; s <= n - 1; ++s)
                    for (bool regular : {false, true}) {
                        std::vector<long> degs(static_cast<std::size_t>(s), D);
                        o.require(betti_bound(degs, n, n - s, regular) <= thom_milnor_bound(D, n),
                                  "D=" + std::to_string(D) + " n=" + std::to_string(n) + " s=" + std::to_string(s));
                        ++cases;
                    }
        o.note << cases << " cases";
    });

    criterion("round-trip and algebra property suites", 120, [](Outcome& o) {
        {
            Ring r({"x1", "x2", "l1", "l2"});
            BlockSplit split{{"x1", "x2"}, {"l1", "l2"}, std::nullopt, std::nullopt};
            Rng rng(200);
            for (int t = 0; t < 200; ++t) {
                Polynomial f = fixtures::random_polynomial(r, rng);
                auto h = bihomogenize(f, split);
                o.require(dehomogenize(h.poly, h.split).poly == f, "psi(phi(f)) != f");
            }
        }
        std::vector<GroebnerBasis> bases = fixture_bases();
        Rng rng(201);
        for (const auto& g : bases) {
            const auto& gs = g.generators();
            for (std::size_t a = 0; a < gs.size(); ++a)
                for (std::size_t b = a + 1; b < gs.size(); ++b)
                    o.require(normal_form(s_polynomial(gs[a], gs[b], g.order()), g).is_zero(),
                              "S-polynomial does not reduce to zero");
            for (int t = 0; t < 10; ++t) {
                Polynomial h = fixtures::random_polynomial(g.ring(), rng);
                Polynomial nf = normal_form(h, g);
                o.require(normal_form(nf, g) == nf, "normal form not idempotent");
                Polynomial shifted = h;
                for (const auto& q : gs) shifted += fixtures::random_polynomial(g.ring(), rng, 3, 2) * q;
                o.require(normal_form(shifted, g) == nf, "normal form not canonical");
            }
        }
        std::size_t solves = 0;
        for (const auto& fx : fixtures::desk_fixtures()) {
            SampleReport rep = sample_real_points(fx.input);
            for (const auto& d : rep.depths) {
                if (d.status != DepthReport::Status::zero_dimensional) continue;
                ++solves;
                for (const auto& f : d.eliminated)
                    o.require(parameterization_residual(d.parameterization, f).is_zero(),
                              fx.name + " parameterization residual");
            }
        }
        o.note << bases.size() << " bases, " << solves << " solves";
    });

    return failures == 0 ? 0 : 1;
}
