#include "fixtures.hpp"

#include <realsample/bihom/bounds.hpp>
#include <realsample/bihom/canonical_form.hpp>
#include <realsample/bihom/slicing.hpp>
#include <realsample/groebner/ideal.hpp>

#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <map>
#include <set>

using namespace realsample;

namespace {

Polynomial P(const std::string& s, const Ring& r) { return parse_polynomial(s, r); }

std::vector<Polynomial> Ps(const Ring& r, std::initializer_list<const char*> texts) {
    std::vector<Polynomial> out;
    for (const char* t : texts) out.push_back(P(t, r));
    return out;
}

std::set<std::string> printed(const std::vector<Polynomial>& ps) {
    std::set<std::string> out;
    for (const auto& p : ps) out.insert(p.to_string());
    return out;
}

/// Bases the property tests sweep: desk inputs, their projection systems
/// under a random change of variables, and a few classical ideals.
std::vector<GroebnerBasis> fixture_bases() {
    std::vector<GroebnerBasis> out;
    Ring xy({"x", "y"});
    out.push_back(groebner_basis(Ps(xy, {"x^2 + y^2 - 1", "x - y"}), MonomialOrder::degrevlex(xy)));
    out.push_back(groebner_basis(Ps(xy, {"x^3 - y^2", "x*y - 1"}), MonomialOrder::lex(xy)));
    Ring txy({"t", "x", "y"});
    out.push_back(groebner_basis(Ps(txy, {"x - t^2", "y - t^3"}), MonomialOrder::lex(txy)));
    out.push_back(groebner_basis(Ps(txy, {"x - t^2", "y - t^3"}), MonomialOrder::block_elimination(txy, {"t"})));
    Rng rng(3);
    for (const auto& fx : fixtures::desk_fixtures()) {
        out.push_back(groebner_basis(fx.input.polys, MonomialOrder::degrevlex(fx.input.ring)));
        LagrangeSystem sys = build_projection_system(fx.input, random_linear_change(fx.input.n(), rng));
        out.push_back(groebner_basis(sys.polys, MonomialOrder::degrevlex(sys.ring)));
    }
    for (const auto& bf : fixtures::bi_fixtures())
        if (!bf.gens.empty()) out.push_back(groebner_basis(bf.gens, MonomialOrder::degrevlex(bf.ring)));
    return out;
}

}  // namespace

TEST(Groebner, AlreadyReducedLex) {
    Ring r({"x", "y"});
    GroebnerBasis g = groebner_basis(Ps(r, {"x - 1", "y - 2"}), MonomialOrder::lex(r));
    EXPECT_EQ(printed(g.generators()), printed(Ps(r, {"x - 1", "y - 2"})));
}

TEST(Groebner, ContainmentCollapses) {
    Ring r({"x"});
    GroebnerBasis g = groebner_basis(Ps(r, {"x^2", "x"}), MonomialOrder::degrevlex(r));
    ASSERT_EQ(g.size(), 1u);
    EXPECT_EQ(g.generators()[0], P("x", r));
}

TEST(Groebner, CircleMeetsDiagonalInTwoPoints) {
    Ring r({"x", "y"});
    GroebnerBasis g = groebner_basis(Ps(r, {"x^2 + y^2 - 1", "x - y"}), MonomialOrder::degrevlex(r));
    EXPECT_EQ(dimension(g), 0);
    EXPECT_EQ(quotient_basis(g).size(), 2u);
    // (1/sqrt2, 1/sqrt2): x - y and 2y^2 - 1 vanish there
    EXPECT_TRUE(normal_form(P("x - y", r), g).is_zero());
    EXPECT_TRUE(normal_form(P("2*y^2 - 1", r), g).is_zero());
}

TEST(Groebner, UnitIdealIsOne) {
    Ring r({"x", "y"});
    GroebnerBasis g = groebner_basis(Ps(r, {"x*y - 1", "x"}), MonomialOrder::degrevlex(r));
    EXPECT_TRUE(g.is_unit());
    EXPECT_EQ(dimension(g), -1);
    EXPECT_THROW(quotient_basis(g), NotZeroDimensional);
}

TEST(Groebner, GeneratorsAreMonic) {
    for (const auto& g : fixture_bases())
        for (const auto& p : g.generators()) EXPECT_EQ(leading_coefficient(p, g.order()), 1) << p.to_string();
}

TEST(NormalForm, Examples) {
    Ring r({"x", "y"});
    GroebnerBasis g = groebner_basis(Ps(r, {"x^2 + y^2 - 1"}), MonomialOrder::degrevlex(r));
    EXPECT_TRUE(normal_form(P("x^2 + y^2 - 1", r), g).is_zero());
    EXPECT_EQ(normal_form(P("1", r), g), P("1", r));
    EXPECT_EQ(normal_form(P("x^2", r), g), P("1 - y^2", r));
}

TEST(NormalForm, RequiresSameRing) {
    Ring r({"x", "y"});
    GroebnerBasis g = groebner_basis(Ps(r, {"x"}), MonomialOrder::degrevlex(r));
    EXPECT_THROW(normal_form(P("z", Ring({"z"})), g), std::invalid_argument);
}

TEST(GroebnerProperty, SPolynomialsReduceToZero) {
    for (const auto& g : fixture_bases()) {
        const auto& gens = g.generators();
        for (std::size_t a = 0; a < gens.size(); ++a)
            for (std::size_t b = a + 1; b < gens.size(); ++b)
                EXPECT_TRUE(normal_form(s_polynomial(gens[a], gens[b], g.order()), g).is_zero())
                    << gens[a].to_string() << " / " << gens[b].to_string();
    }
}

TEST(GroebnerProperty, BasesAreReduced) {
    for (const auto& g : fixture_bases()) {
        const auto& gens = g.generators();
        const auto& lms = g.leading_monomials();
        for (std::size_t a = 0; a < gens.size(); ++a)
            for (std::size_t b = 0; b < gens.size(); ++b) {
                if (a == b) continue;
                for (const auto& t : gens[a].terms()) EXPECT_FALSE(lms[b].divides(t.mono)) << gens[a].to_string();
            }
    }
}

TEST(GroebnerProperty, NormalFormIsIdempotentAndCanonical) {
    Rng rng(41);
    for (const auto& g : fixture_bases()) {
        for (int t = 0; t < 10; ++t) {
            Polynomial f = fixtures::random_polynomial(g.ring(), rng, 5, 3);
            Polynomial nf = normal_form(f, g);
            EXPECT_EQ(normal_form(nf, g), nf);
            for (const auto& term : nf.terms()) EXPECT_TRUE(is_standard_monomial(term.mono, g));
            // f - nf lies in the ideal
            EXPECT_TRUE(normal_form(f - nf, g).is_zero());
        }
    }
}

TEST(GroebnerProperty, QuotientBasisExactlyWhenZeroDimensional) {
    for (const auto& g : fixture_bases()) {
        if (dimension(g) == 0) {
            QuotientBasis qb = quotient_basis(g);
            for (const auto& m : qb.monomials())
                for (std::size_t v = 0; v < m.size(); ++v)
                    if (m[v] > 0) {
                        Monomial d = m;
                        d.set(v, m[v] - 1);
                        EXPECT_GE(qb.index_of(d), 0);
                    }
        } else {
            EXPECT_THROW(quotient_basis(g), NotZeroDimensional);
        }
    }
}

TEST(Dimension, Examples) {
    Ring r({"x", "y"});
    auto dim = [&](std::initializer_list<const char*> gens) {
        return dimension(groebner_basis(Ps(r, gens), MonomialOrder::degrevlex(r)));
    };
    EXPECT_EQ(dim({"x", "y"}), 0);
    EXPECT_EQ(dim({"1"}), -1);
    EXPECT_EQ(dim({"x*y"}), 1);
    EXPECT_EQ(dim({"x^2 + y^2 - 1"}), 1);
    EXPECT_EQ(dimension(groebner_basis({}, MonomialOrder::degrevlex(r))), 2);
}

TEST(QuotientBasis, Examples) {
    Ring r({"x", "y"});
    QuotientBasis a = quotient_basis(groebner_basis(Ps(r, {"x^2", "y"}), MonomialOrder::degrevlex(r)));
    ASSERT_EQ(a.size(), 2u);
    EXPECT_GE(a.index_of(Monomial{0, 0}), 0);
    EXPECT_GE(a.index_of(Monomial{1, 0}), 0);
    EXPECT_EQ(a.index_of(Monomial{2, 0}), -1);
    EXPECT_EQ(quotient_basis(groebner_basis(Ps(r, {"x - 1", "y - 2"}), MonomialOrder::degrevlex(r))).size(), 1u);
}

TEST(Eliminate, Examples) {
    Ring lx({"l", "x"});
    EXPECT_EQ(printed(eliminate(Ps(lx, {"l - x", "x^2 - 1"}), lx, {"l"})), printed(Ps(Ring({"x"}), {"x^2 - 1"})));

    Ring txy({"t", "x", "y"});
    auto cusp = eliminate(Ps(txy, {"x - t^2", "y - t^3"}), txy, {"t"});
    Ring xy({"x", "y"});
    GroebnerBasis gc = groebner_basis(cusp, MonomialOrder::degrevlex(xy));
    EXPECT_TRUE(normal_form(P("y^2 - x^3", xy), gc).is_zero());
    EXPECT_EQ(printed(gc.generators()), printed({P("x^3 - y^2", xy).monic()}));

    auto unit = eliminate(Ps(txy, {"1"}), txy, {"t", "x"});
    ASSERT_EQ(unit.size(), 1u);
    EXPECT_EQ(unit[0], P("1", Ring({"y"})));
}

TEST(Eliminate, QuotientRouteMatchesBlockOrder) {
    Rng rng(8);
    int compared = 0;
    for (const auto& fx : fixtures::desk_fixtures()) {
        for (int draw = 0; draw < 2; ++draw) {
            LinearChange a = random_linear_change(fx.input.n(), rng, 9);
            LagrangeSystem sys = build_projection_system(fx.input, a);
            Ring sub(sys.x_vars);
            auto fast = eliminate(sys.polys, sys.ring, sys.multipliers);
            auto block = eliminate_by_block_order(sys.polys, sys.ring, sys.multipliers);
            EXPECT_EQ(groebner_basis(fast, MonomialOrder::degrevlex(sub)).generators(),
                      groebner_basis(block, MonomialOrder::degrevlex(sub)).generators())
                << fx.name;
            ++compared;
        }
    }
    EXPECT_EQ(compared, 10);
}

TEST(Eliminate, ResultLiesInTheIdeal) {
    Rng rng(12);
    for (const auto& fx : fixtures::desk_fixtures()) {
        LagrangeSystem sys = build_projection_system(fx.input, random_linear_change(fx.input.n(), rng));
        GroebnerBasis full = groebner_basis(sys.polys, MonomialOrder::degrevlex(sys.ring));
        for (const auto& e : eliminate(sys.polys, sys.ring, sys.multipliers))
            EXPECT_TRUE(normal_form(e.map_to(sys.ring), full).is_zero()) << fx.name << ": " << e.to_string();
    }
    Ring txy({"t", "x", "y"});
    std::vector<Polynomial> gens = Ps(txy, {"x*t - 1", "y - t^2 - x"});
    GroebnerBasis full = groebner_basis(gens, MonomialOrder::degrevlex(txy));
    for (const auto& e : eliminate(gens, txy, {"t"})) EXPECT_TRUE(normal_form(e.map_to(txy), full).is_zero());
}

TEST(IdealDegree, ExamplesAreSeedInvariant) {
    Ring r({"x", "y"});
    for (std::uint64_t seed : {1u, 2u, 3u}) {
        Rng rng(seed);
        EXPECT_EQ(ideal_degree_by_slicing(Ps(r, {"x^2 + y^2 - 1"}), 1, rng), 2);
        EXPECT_EQ(ideal_degree_by_slicing(Ps(r, {"x - 1", "y - 2"}), 0, rng), 1);
        EXPECT_EQ(ideal_degree_by_slicing(Ps(r, {"x*y - 1"}), 1, rng), 2);
        EXPECT_EQ(ideal_degree_by_slicing(Ps(r, {"x^4 - 6*x^3 + 2*x^2*y^2 + 7*x^2 - 6*x*y^2 + 6*x + y^4 + 7*y^2 - 8"}),
                                          1, rng),
                  4);
    }
}

TEST(IdealDegree, WrongDimensionClaimExhaustsRetries) {
    Ring r({"x", "y"});
    Rng rng(1);
    EXPECT_THROW(ideal_degree_by_slicing(Ps(r, {"x^2 + y^2 - 1"}), 0, rng), GenericityError);
}

// Bi-graded Hilbert function

namespace {

BlockSplit split_of(std::initializer_list<const char*> xs, std::initializer_list<const char*> ls) {
    return BlockSplit{std::vector<std::string>(xs.begin(), xs.end()), std::vector<std::string>(ls.begin(), ls.end()),
                      std::nullopt, std::nullopt};
}

BlockSplit zero_ideal_split(long n, long k) {
    BlockSplit s;
    for (long i = 0; i <= n; ++i) s.x_vars.push_back("X" + std::to_string(i));
    for (long j = 0; j <= k; ++j) s.l_vars.push_back("L" + std::to_string(j));
    return s;
}

}  // namespace

TEST(BiSeries, ZeroIdealSmall) {
    BiSeriesTable t = hilbert_biseries({}, split_of({"X0", "X1"}, {"L0"}), 2, 0);
    EXPECT_EQ(t.at(0, 0), 1);
    EXPECT_EQ(t.at(1, 0), 2);
    EXPECT_EQ(t.at(2, 0), 3);
}

TEST(BiSeries, ZeroIdealClosedForm) {
    for (auto [n, k] : std::vector<std::pair<long, long>>{{0, 0}, {1, 0}, {1, 1}, {2, 1}, {3, 2}}) {
        BiSeriesTable t = hilbert_biseries({}, zero_ideal_split(n, k), 10, 10);
        for (long i = 0; i <= 10; ++i)
            for (long j = 0; j <= 10; ++j)
                EXPECT_EQ(Integer(t.at(i, j)), binomial(i + n, n) * binomial(j + k, k)) << n << k << i << j;
    }
}

TEST(BiSeries, KilledXBlock) {
    Ring r({"X0", "L0"});
    BiSeriesTable t = hilbert_biseries(Ps(r, {"X0"}), split_of({"X0"}, {"L0"}), 4, 4);
    for (long i = 0; i <= 4; ++i)
        for (long j = 0; j <= 4; ++j) EXPECT_EQ(t.at(i, j), i == 0 ? 1 : 0);
}

TEST(BiSeries, ProductCell) {
    Ring r({"X0", "X1", "L0", "L1"});
    BiSeriesTable t = hilbert_biseries(Ps(r, {"X0*L0"}), split_of({"X0", "X1"}, {"L0", "L1"}), 3, 3);
    EXPECT_EQ(t.at(1, 1), 3);
    EXPECT_EQ(t.at(0, 0), 1);
    // every X-only and l-only cell is untouched
    EXPECT_EQ(t.at(2, 0), 3);
    EXPECT_EQ(t.at(0, 2), 3);
}

TEST(BiSeries, UnitIdealAndErrors) {
    Ring r({"X0", "L0"});
    BiSeriesTable t = hilbert_biseries(Ps(r, {"1"}), split_of({"X0"}, {"L0"}), 3, 3);
    EXPECT_EQ(t.at(0, 0), 0);
    EXPECT_EQ(specialize_to_hilbert_series(t, 3), (std::vector<long>{0, 0, 0, 0}));
    EXPECT_THROW(hilbert_biseries(Ps(r, {"X0 + L0"}), split_of({"X0"}, {"L0"}), 3, 3), std::invalid_argument);
    EXPECT_THROW(specialize_to_hilbert_series(t, 4), std::invalid_argument);
}

TEST(BiSeries, SpecializationExamples) {
    // Q[X0,X1,L0]: h_d = sum_i (i+1) = (d+1)(d+2)/2
    BiSeriesTable zero = hilbert_biseries({}, split_of({"X0", "X1"}, {"L0"}), 6, 6);
    auto h = specialize_to_hilbert_series(zero, 6);
    for (long d = 0; d <= 6; ++d) EXPECT_EQ(h[static_cast<std::size_t>(d)], (d + 1) * (d + 2) / 2);

    Ring r({"X0", "X1", "L0", "L1"});
    BiSeriesTable prod = hilbert_biseries(Ps(r, {"X0*L0"}), split_of({"X0", "X1"}, {"L0", "L1"}), 4, 4);
    // dims(2,0) + dims(1,1) + dims(0,2) = 3 + 3 + 3
    EXPECT_EQ(specialize_to_hilbert_series(prod, 2)[2], 9);
}

TEST(BiSeries, SpecializationMatchesLexHilbertFunction) {
    // The single-graded Hilbert function does not depend on the order, so a
    // lex basis gives an independent count.
    for (const auto& f : fixtures::bi_fixtures()) {
        BiSeriesTable t = hilbert_biseries(f.gens, f.split, 8, 8);
        GroebnerBasis lex = groebner_basis(f.gens, MonomialOrder::lex(f.ring));
        EXPECT_EQ(specialize_to_hilbert_series(t, 8), hilbert_function(lex, 8)) << f.name;
    }
}

TEST(BiSeries, NonZerodivisorMultipliesByOneMinusT1T2) {
    int checked = 0;
    for (const auto& f : fixtures::bi_fixtures()) {
        Rng rng(77);
        auto xs = detail::indices_of(f.ring, f.split.x_vars);
        auto ls = detail::indices_of(f.ring, f.split.l_vars);
        Polynomial g = detail::random_form(f.ring, xs, rng) * detail::random_form(f.ring, ls, rng) +
                       detail::random_form(f.ring, xs, rng) * detail::random_form(f.ring, ls, rng);
        // the pair of bilinear forms also vanishes on l = 0, where g does too
        if (f.name == "bilinear_pair") {
            EXPECT_FALSE(fixtures::is_nonzerodivisor(f.gens, g, f.ring));
            continue;
        }
        ASSERT_TRUE(fixtures::is_nonzerodivisor(f.gens, g, f.ring)) << f.name;
        ++checked;
        std::vector<Polynomial> more = f.gens;
        more.push_back(g);
        BiSeriesTable before = hilbert_biseries(f.gens, f.split, 8, 8);
        BiSeriesTable after = hilbert_biseries(more, f.split, 8, 8);
        for (long i = 0; i <= 8; ++i)
            for (long j = 0; j <= 8; ++j) {
                long expect = before.at(i, j) - (i > 0 && j > 0 ? before.at(i - 1, j - 1) : 0);
                EXPECT_EQ(after.at(i, j), expect) << f.name << " (" << i << "," << j << ")";
            }
    }
    EXPECT_EQ(checked, 5);
}

TEST(BiSeries, DimensionTwoSeriesSettlesAtTheSliceDegree) {
    // three generic (1,1) forms on P^2 x P^1 cut out points; dims become
    // constant and equal C_{0,0}
    Ring r({"x0", "x1", "x2", "l0", "l1"});
    BlockSplit s = split_of({"x0", "x1", "x2"}, {"l0", "l1"});
    auto gens = Ps(r, {"3*x0*l0 - 2*x1*l1 + x2*l0 + 5*x2*l1", "x0*l1 + 4*x1*l0 - 7*x2*l1 + x1*l1",
                       "2*x0*l0 + x1*l0 - x1*l1 + 3*x2*l1 - 6*x0*l1"});
    BiSeriesTable t = hilbert_biseries(gens, s, 12, 12);
    Rng rng(4);
    long c00 = bidegree_by_slicing(gens, s, 0, 0, rng);
    EXPECT_EQ(c00, 3);
    for (long i = 6; i <= 12; ++i)
        for (long j = 6; j <= 12; ++j) EXPECT_EQ(t.at(i, j), c00);
    BoundInputs in{2, 1, {{1, 1}, {1, 1}, {1, 1}}};
    EXPECT_EQ(bezout_bound(in), c00);
}

TEST(CanonicalForm, Examples) {
    CanonicalForm zero = canonical_form(hilbert_biseries({}, split_of({"X0"}, {"L0"}), 8, 8), 2);
    EXPECT_EQ(zero.c(0, 0), 1);
    EXPECT_TRUE(zero.lower_terms.empty());
    EXPECT_TRUE(zero.q_is_zero());

    Ring r({"X0", "X1", "L0"});
    BlockSplit s = split_of({"X0", "X1"}, {"L0"});
    CanonicalForm line = canonical_form(hilbert_biseries(Ps(r, {"X0 - X1"}), s, 8, 8), 2);
    EXPECT_EQ(line.c(0, 0), 1);

    CanonicalForm unit = canonical_form(hilbert_biseries(Ps(r, {"1"}), s, 8, 8), 2);
    for (const auto& [k, v] : unit.C) EXPECT_EQ(v, 0);
    EXPECT_TRUE(unit.q_is_zero());
}

TEST(CanonicalForm, SmallWindowIsDetected) {
    Ring r({"x0", "x1", "x2", "l0", "l1"});
    auto gens = Ps(r, {"x1^3 + x2^3 - x0^3"});
    BlockSplit s = split_of({"x0", "x1", "x2"}, {"l0", "l1"});
    EXPECT_THROW(canonical_form(hilbert_biseries(gens, s, 3, 3), 4), WindowTooSmall);
    CanonicalFormResult ok = canonical_form_adaptive(gens, s, 4);
    EXPECT_EQ(ok.form.c(1, 1), 3);
}

TEST(CanonicalForm, ReconstructsTheTable) {
    for (const auto& f : fixtures::bi_fixtures()) {
        CanonicalFormResult r = canonical_form_adaptive(f.gens, f.split, f.D);
        IntegerGrid back = reconstruct_series(r.form, r.table.imax, r.table.jmax);
        for (long i = 0; i <= r.table.imax; ++i)
            for (long j = 0; j <= r.table.jmax; ++j)
                EXPECT_EQ(back[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)], Integer(r.table.at(i, j)))
                    << f.name;
    }
}

TEST(Slicing, Examples) {
    Ring r({"X0", "X1", "L0"});
    BlockSplit s = split_of({"X0", "X1"}, {"L0"});
    Rng rng(6);
    EXPECT_EQ(bidegree_by_slicing({}, s, 1, 0, rng), 1);
    EXPECT_EQ(bidegree_by_slicing(Ps(r, {"X0*X1"}), s, 0, 0, rng), 2);
    EXPECT_EQ(bidegree_by_slicing(Ps(r, {"1"}), s, 0, 0, rng), 0);
    EXPECT_THROW(bidegree_by_slicing({}, s, 0, 1, rng), std::invalid_argument);
}

TEST(Slicing, AgreesWithCanonicalFormOnFixtures) {
    for (const auto& f : fixtures::bi_fixtures()) {
        CanonicalFormResult r = canonical_form_adaptive(f.gens, f.split, f.D);
        for (auto [d, e] : fixtures::admissible_pairs(f))
            for (std::uint64_t seed : {1u, 2u, 3u}) {
                Rng rng(seed);
                EXPECT_EQ(Integer(bidegree_by_slicing(f.gens, f.split, d, e, rng)), r.form.c(d, e))
                    << f.name << " (" << d << "," << e << ") seed " << seed;
            }
    }
}

TEST(Slicing, IntersectionNumbers) {
    // [H] h1^d h2^e on P^n x P^k for a hypersurface class a h1 + b h2
    std::map<std::string, std::map<std::pair<long, long>, long>> expect = {
        {"P1xP1", {{{1, 1}, 1}}},
        {"bilinear_P1xP1", {{{1, 0}, 1}, {{0, 1}, 1}}},
        {"bilinear_pair", {{{1, 0}, 2}, {{0, 1}, 1}}},
        {"conic_x_P1", {{{1, 1}, 2}, {{2, 0}, 0}}},
        {"line_times_bilinear", {{{1, 0}, 1}, {{0, 1}, 2}}},
        {"two_bilinear_P2xP2", {{{2, 0}, 1}, {{1, 1}, 2}, {{0, 2}, 1}}},
    };
    for (const auto& f : fixtures::bi_fixtures()) {
        Rng rng(10);
        for (auto [de, v] : expect.at(f.name))
            EXPECT_EQ(bidegree_by_slicing(f.gens, f.split, de.first, de.second, rng), v) << f.name;
    }
}

// Bounds

TEST(Bounds, BezoutExamples) {
    EXPECT_EQ(bezout_bound({2, 1, {{2, 1}, {1, 1}}}), 5);
    EXPECT_EQ(bezout_bound({3, 2, {{7, 0}}}), 7);
    EXPECT_EQ(bezout_bound({1, 1, {{1, 1}, {1, 1}}}), 2);
    EXPECT_EQ(bezout_bound({2, 1, {{1, 1}, {1, 1}, {1, 1}}}), 3);
}

TEST(Bounds, BezoutWithoutSecondBlockIsClassical) {
    EXPECT_EQ(bezout_bound({3, 0, {{2, 0}, {3, 0}, {5, 0}}}), 30);
    EXPECT_EQ(bezout_bound({3, 0, {{2, 0}, {4, 0}}}), 8);
}

TEST(Bounds, BezoutHypothesis) {
    EXPECT_THROW(bezout_bound({1, 1, {{1, 0}, {1, 0}}}), HypothesisViolation);
    EXPECT_THROW(bezout_bound({1, 1, {{0, 1}, {0, 1}}}), HypothesisViolation);
    EXPECT_THROW(bezout_bound({1, 1, {{1, 1}, {1, 1}, {1, 1}}}), HypothesisViolation);
}

TEST(Bounds, BezoutMatchesBruteForce) {
    // independent recursion over items: each goes to I (alpha) or J (beta)
    std::function<Integer(const std::vector<BiDegree>&, std::size_t, long, long)> rec =
        [&](const std::vector<BiDegree>& b, std::size_t i, long n, long k) -> Integer {
        if (i == b.size()) return 1;
        Integer total = 0;
        if (n > 0) total += b[i].alpha * rec(b, i + 1, n - 1, k);
        if (k > 0) total += b[i].beta * rec(b, i + 1, n, k - 1);
        return total;
    };
    Rng rng(2);
    for (int t = 0; t < 200; ++t) {
        long n = rng.uniform(0, 4), k = rng.uniform(0, 4);
        std::vector<BiDegree> b;
        long s = rng.uniform(0, n + k);
        for (long i = 0; i < s; ++i) b.push_back({rng.uniform(1, 4), rng.uniform(1, 4)});
        EXPECT_EQ(bezout_bound({n, k, b}), rec(b, 0, n, k));
    }
}

TEST(Bounds, CriticalExamples) {
    EXPECT_EQ(critical_bound({2}, 2, true), 2);
    EXPECT_EQ(critical_bound({2}, 3, false), 6);
    EXPECT_EQ(critical_bound({1}, 3, false), 0);
    EXPECT_EQ(critical_bound({1, 1}, 4, true), 0);
    EXPECT_EQ(critical_bound({4}, 2, true), 12);
    EXPECT_THROW(critical_bound({2, 2}, 2, true), std::invalid_argument);
    EXPECT_THROW(critical_bound({}, 2, true), std::invalid_argument);
}

TEST(Bounds, BettiExamples) {
    EXPECT_EQ(betti_bound({2}, 2, 1, true), 4);
    EXPECT_EQ(betti_bound({1, 1}, 4, 2, true), 1);
    EXPECT_EQ(betti_bound({1}, 3, 2, false), 1);
    // 2 * [1*binom(3,2) + 1*binom(2,1) + 1*binom(1,0)]
    EXPECT_EQ(betti_bound({2}, 3, 2, false), 12);
}

TEST(Bounds, ThomMilnorExamples) {
    EXPECT_EQ(thom_milnor_bound(2, 2), 6);
    EXPECT_EQ(thom_milnor_bound(1, 5), 1);
    EXPECT_EQ(thom_milnor_bound(2, 3), 18);
}

TEST(Bounds, BettiBelowThomMilnor) {
    for (long D = 2; D <= 8; ++D)
        for (long n = 2; n <= 8; ++n)
            for (long s = 1; s <= n - 1; ++s) {
                std::vector<long> degs(static_cast<std::size_t>(s), D);
                for (bool regular : {false, true})
                    EXPECT_LE(betti_bound(degs, n, n - s, regular), thom_milnor_bound(D, n))
                        << D << " " << n << " " << s << " " << regular;
            }
}
