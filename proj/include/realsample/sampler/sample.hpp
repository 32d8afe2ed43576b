#ifndef REALSAMPLE_SAMPLER_SAMPLE_HPP
#define REALSAMPLE_SAMPLER_SAMPLE_HPP

#include <realsample/bihom/bounds.hpp>
#include <realsample/lagrange/membership.hpp>
#include <realsample/sampler/rur.hpp>

#include <future>
#include <optional>
#include <string>
#include <vector>

namespace realsample {

struct SampleOptions {
    std::uint64_t seed = 42;
    Rational width = pow2(-20);
    bool parallel = false;
    bool cross_check = false;
    /// Base point of the fibers; zeros when absent.
    std::optional<std::vector<Rational>> p;
};

/// Isolating box of one sample point, in the input coordinates, together
/// with its box in the generic coordinates y (x = A y) and the root of the
/// parameterization it came from.
struct IsolatingBox {
    Box coords;
    Box fiber_coords;
    Interval root_interval;
    long fiber_depth = 0;
    std::uint64_t witness_seed = 0;
    bool on_variety = false;
    bool critical = false;
};

struct CrossCheckReport {
    long depth = 0;
    long sliced_dimension = 0;
    long real_points = 0;
    long matched = 0;
};

struct DepthReport {
    enum class Status { zero_dimensional, unit };
    long depth = 0;
    Status status = Status::unit;
    std::size_t equations = 0;
    std::size_t variables = 0;
    /// Degree of the eliminated ideal in the X-variables (0 for the unit ideal).
    long degree = 0;
    long real_roots = 0;
    std::uint64_t seed = 0;
    std::vector<Polynomial> eliminated;
    RationalParameterization parameterization;
};

struct AttemptRecord {
    int matrix_draw = 0;
    int p_shift = 0;
    /// "ok", or why the attempt was abandoned.
    std::string outcome;
};

struct SampleReport {
    InputSystem input;
    long dimension = -1;
    std::uint64_t seed = 42;
    Rational width = pow2(-20);
    std::vector<AttemptRecord> attempts;
    std::optional<LinearChange> A;
    std::vector<Rational> p;
    std::vector<DepthReport> depths;
    std::vector<IsolatingBox> points;
    std::size_t duplicates_removed = 0;
    std::optional<Integer> betti;
    std::optional<Integer> critical;
    std::vector<CrossCheckReport> cross_checks;

    bool within_betti_bound() const { return !betti || Integer(static_cast<long>(points.size())) <= *betti; }
    bool depth0_within_critical_bound() const {
        return !critical || depths.empty() || Integer(depths.front().degree) <= *critical;
    }
};

/// True iff every input equation's interval extension over the box contains 0.
inline bool verify_on_variety(const Box& box, const InputSystem& in) {
    if (box.size() != in.n()) return false;
    for (const auto& f : in.polys)
        if (!evaluate(f, box).contains_zero()) return false;
    return true;
}

inline bool verify_on_variety(const IsolatingBox& box, const InputSystem& in) {
    return verify_on_variety(box.coords, in);
}

inline constexpr int kMatrixDraws = 3;
inline constexpr int kPointPerturbations = 3;

namespace detail {

inline Box apply_to_box(const LinearChange& a, const Box& y) {
    Box x;
    for (std::size_t r = 0; r < a.dimension(); ++r) {
        Interval acc = Interval::point(0);
        for (std::size_t c = 0; c < a.dimension(); ++c)
            if (a(r, c) != 0) acc = acc + a(r, c) * y[c];
        x.push_back(acc);
    }
    return x;
}

inline Rational max_row_sum(const LinearChange& a) {
    Rational best = 1;
    for (std::size_t r = 0; r < a.dimension(); ++r) {
        Rational s = 0;
        for (std::size_t c = 0; c < a.dimension(); ++c) s += abs(a(r, c));
        best = std::max(best, s);
    }
    return best;
}

/// Refines a point of `param` until its image under A is narrower than width.
inline void refine_point(IsolatingBox& pt, const RationalParameterization& param, const LinearChange& a,
                         const Rational& width) {
    Rational target = width / max_row_sum(a);
    for (;;) {
        auto v = evaluate_parameterization(param, pt.root_interval, target);
        pt.root_interval = v.root;
        pt.fiber_coords = v.box;
        pt.coords = apply_to_box(a, v.box);
        if (box_width(pt.coords) < width || v.root.is_point()) return;
        target /= 2;
    }
}

struct DepthOutcome {
    bool ok = false;
    std::string failure;
    DepthReport report;
    std::vector<IsolatingBox> points;
    std::optional<CrossCheckReport> cross;
};

inline std::vector<Polynomial> eliminate_multipliers(const FiberSystem& fs) {
    if (!fs.has_multipliers()) return fs.system.polys;
    return eliminate(fs.system.polys, fs.system.ring, fs.system.multipliers);
}

inline bool boxes_meet(const Box& a, const Box& b) { return boxes_intersect(a, b); }

/// Slices the full (X, multiplier) ideal by generic linear equations through
/// the origin and checks that the real solutions project onto points found
/// by elimination.
inline CrossCheckReport cross_check_depth(const FiberSystem& fs, const std::vector<IsolatingBox>& found,
                                          const LinearChange& a, const Rational& width, Rng rng) {
    CrossCheckReport cr;
    cr.depth = fs.depth;
    const Ring& ring = fs.system.ring;
    GroebnerBasis g = groebner_basis(fs.system.polys, MonomialOrder::degrevlex(ring));
    if (g.is_unit()) return cr;
    long p = dimension(g);
    cr.sliced_dimension = p;
    for (int attempt = 0; attempt < kGenericityRetries; ++attempt) {
        std::vector<Polynomial> sys = g.generators();
        if (p > 0) {
            LinearChange b = random_linear_change(ring.size(), rng);
            for (long r = 0; r < p; ++r) {
                Polynomial v(ring);
                for (std::size_t c = 0; c < ring.size(); ++c)
                    v += b(static_cast<std::size_t>(r), c) * Polynomial::variable(ring, c);
                sys.push_back(std::move(v));
            }
        }
        GroebnerBasis gs = groebner_basis(sys, MonomialOrder::degrevlex(ring));
        if (!gs.is_unit() && dimension(gs) != 0) continue;
        auto param = solve_zero_dim(gs.generators(), ring, rng);
        if (param.empty()) return cr;
        const std::size_t nx = fs.system.x_vars.size();
        for (const auto& root : isolate_real_roots(param.f, Rational(1, 16))) {
            auto v = evaluate_parameterization(param, root, width / max_row_sum(a));
            Box y(v.box.begin(), v.box.begin() + static_cast<std::ptrdiff_t>(nx));
            Box x = apply_to_box(a, y);
            ++cr.real_points;
            for (const auto& pt : found)
                if (boxes_meet(pt.coords, x)) {
                    ++cr.matched;
                    break;
                }
        }
        return cr;
    }
    return cr;
}

inline DepthOutcome run_depth(const InputSystem& in, const LinearChange& a, const std::vector<Rational>& p, long depth,
                              long d, const SampleOptions& opt, Rng rng) {
    DepthOutcome out;
    FiberSystem fs = build_fiber_system(in, a, p, depth, d);
    DepthReport& rep = out.report;
    rep.depth = depth;
    rep.equations = fs.system.polys.size();
    rep.variables = fs.system.ring.size();
    rep.seed = rng.seed();
    std::vector<Polynomial> xs = eliminate_multipliers(fs);
    GroebnerBasis g = groebner_basis(xs, MonomialOrder::degrevlex(in.ring));
    rep.eliminated = g.generators();
    if (g.is_unit()) {
        rep.status = DepthReport::Status::unit;
        out.ok = true;
    } else if (dimension(g) != 0) {
        out.failure = "depth " + std::to_string(depth) + ": eliminated ideal has dimension " +
                      std::to_string(dimension(g));
        return out;
    } else {
        rep.status = DepthReport::Status::zero_dimensional;
        rep.degree = static_cast<long>(quotient_basis(g).size());
        rep.parameterization = solve_zero_dim(g.generators(), in.ring, rng);
        FiberCriticality fc = fiber_criticality(in, a, p, depth);
        for (const auto& root : isolate_real_roots(rep.parameterization.f, Rational(1, 16))) {
            IsolatingBox pt;
            pt.root_interval = root;
            pt.fiber_depth = depth;
            pt.witness_seed = rng.seed();
            refine_point(pt, rep.parameterization, a, opt.width);
            pt.on_variety = verify_on_variety(pt.coords, in);
            try {
                pt.critical = static_cast<std::size_t>(depth) >= in.n() ||
                              lagrange_membership_check(pt.coords, fc.constraints, fc.objective);
            } catch (const std::invalid_argument&) {
                pt.critical = false;
            }
            out.points.push_back(std::move(pt));
        }
        rep.real_roots = static_cast<long>(out.points.size());
        out.ok = true;
    }
    if (opt.cross_check && fs.has_multipliers())
        out.cross = cross_check_depth(fs, out.points, a, opt.width, rng.split(0xc0ffee));
    return out;
}

/// Whether box a sits on the zero set of the generators (in y-coordinates).
inline bool straddles(const Box& y, const std::vector<Polynomial>& gens) {
    for (const auto& g : gens)
        if (!evaluate(g, y).contains_zero()) return false;
    return true;
}

/// Drops points of higher depth whose boxes cannot be separated from a point
/// already kept, refining both down to `fine` first.
inline std::size_t deduplicate(std::vector<IsolatingBox>& pts, const std::vector<DepthReport>& depths,
                               const LinearChange& a, const Rational& fine) {
    std::vector<IsolatingBox> kept;
    std::size_t removed = 0;
    for (auto& pt : pts) {
        bool dup = false;
        for (auto& k : kept) {
            if (k.fiber_depth == pt.fiber_depth || !boxes_intersect(k.coords, pt.coords)) continue;
            const auto& pk = depths[static_cast<std::size_t>(k.fiber_depth)];
            const auto& pp = depths[static_cast<std::size_t>(pt.fiber_depth)];
            IsolatingBox kr = k, pr = pt;
            Rational w = box_width(kr.coords);
            while (boxes_intersect(kr.coords, pr.coords) && w > fine) {
                w /= 2;
                refine_point(kr, pk.parameterization, a, w);
                refine_point(pr, pp.parameterization, a, w);
            }
            if (boxes_intersect(kr.coords, pr.coords) && straddles(kr.fiber_coords, pp.eliminated) &&
                straddles(pr.fiber_coords, pk.eliminated)) {
                dup = true;
                break;
            }
        }
        if (dup) ++removed;
        else kept.push_back(pt);
    }
    pts = std::move(kept);
    return removed;
}

}  // namespace detail

/// At least one point in each connected component of the real zero set of
/// a radical input defining a smooth variety, with certified boxes.
inline SampleReport sample_real_points(const InputSystem& in, const SampleOptions& opt = {}) {
    in.validate();
    SampleReport rep;
    rep.input = in;
    rep.seed = opt.seed;
    rep.width = opt.width;
    rep.dimension = input_dimension(in);
    if (rep.dimension < 0) return rep;
    const long d = rep.dimension;
    std::vector<long> degrees = in.degrees();
    rep.betti = betti_bound(degrees, static_cast<long>(in.n()), d, in.assume_regular_sequence);
    rep.critical = critical_bound(degrees, static_cast<long>(in.n()), in.assume_regular_sequence);

    Rng root(opt.seed);
    std::vector<Rational> base_p = opt.p.value_or(std::vector<Rational>(static_cast<std::size_t>(d), Rational(0)));
    if (static_cast<long>(base_p.size()) < d) throw std::invalid_argument("sample: p needs at least d coordinates");
    std::vector<LinearChange> draws;
    std::string last_failure;
    for (int attempt = 0; attempt < kMatrixDraws + kPointPerturbations; ++attempt) {
        const int draw = std::min(attempt, kMatrixDraws - 1);
        const int shift = std::max(0, attempt - (kMatrixDraws - 1));
        while (static_cast<int>(draws.size()) <= draw) {
            Rng ar = root.split(1).split(static_cast<std::uint64_t>(draws.size()));
            draws.push_back(random_linear_change(in.n(), ar));
        }
        const LinearChange& a = draws[static_cast<std::size_t>(draw)];
        std::vector<Rational> p = base_p;
        for (auto& v : p) v += shift;

        std::vector<detail::DepthOutcome> outcomes(static_cast<std::size_t>(d + 1));
        auto depth_rng = [&](long i) {
            return root.split(0x100 + static_cast<std::uint64_t>(i)).split(static_cast<std::uint64_t>(attempt));
        };
        if (opt.parallel) {
            std::vector<std::future<detail::DepthOutcome>> futs;
            for (long i = 0; i <= d; ++i)
                futs.push_back(std::async(std::launch::async, detail::run_depth, std::cref(in), std::cref(a),
                                          std::cref(p), i, d, std::cref(opt), depth_rng(i)));
            for (long i = 0; i <= d; ++i) outcomes[static_cast<std::size_t>(i)] = futs[static_cast<std::size_t>(i)].get();
        } else {
            for (long i = 0; i <= d; ++i)
                outcomes[static_cast<std::size_t>(i)] = detail::run_depth(in, a, p, i, d, opt, depth_rng(i));
        }
        std::string failure;
        for (const auto& o : outcomes)
            if (!o.ok) {
                failure = o.failure;
                break;
            }
        rep.attempts.push_back({draw, shift, failure.empty() ? "ok" : failure});
        if (!failure.empty()) {
            last_failure = failure;
            continue;
        }
        rep.A = a;
        rep.p = p;
        for (auto& o : outcomes) {
            for (auto& pt : o.points) rep.points.push_back(std::move(pt));
            if (o.cross) rep.cross_checks.push_back(*o.cross);
            rep.depths.push_back(std::move(o.report));
        }
        rep.duplicates_removed = detail::deduplicate(rep.points, rep.depths, a, pow2(-80));
        return rep;
    }
    throw HypothesisViolation("sampling failed after " + std::to_string(kMatrixDraws) + " matrix draws and " +
                              std::to_string(kPointPerturbations) + " fiber perturbations (" + last_failure +
                              "); the input is probably not radical or not smooth");
}

}  // namespace realsample

#endif
