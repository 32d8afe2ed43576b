#ifndef REALSAMPLE_CLI_REPORT_HPP
#define REALSAMPLE_CLI_REPORT_HPP

#include <realsample/polycore/parse.hpp>
#include <realsample/sampler/sample.hpp>

#include <nlohmann/json.hpp>

#include <cstdio>
#include <limits>
#include <string>
#include <vector>

namespace realsample {

using Json = nlohmann::ordered_json;

namespace report {

/// Advisory decimal; 12 significant digits.
inline std::string decimal(const Rational& q) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", to_double(q));
    return buf;
}

/// A JSON number when it fits in 64 bits, else a decimal string.
inline Json integer(const Integer& z) {
    if (z.fits_slong_p()) return static_cast<std::int64_t>(z.get_si());
    return to_string(z);
}

inline Json interval(const Interval& iv) {
    Json j;
    j["lo"] = to_string(iv.lo);
    j["hi"] = to_string(iv.hi);
    j["approx"] = decimal(iv.midpoint());
    return j;
}

inline Json box(const Box& b) {
    Json j = Json::array();
    for (const auto& iv : b) j.push_back(interval(iv));
    return j;
}

inline Json coefficients(const UPoly& p) {
    Json j = Json::array();
    for (const auto& c : p.coeffs()) j.push_back(to_string(c));
    return j;
}

inline Json rationals(const std::vector<Rational>& v) {
    Json j = Json::array();
    for (const auto& c : v) j.push_back(to_string(c));
    return j;
}

inline Json matrix(const LinearChange& a) {
    Json j = Json::array();
    for (const auto& row : a.matrix()) j.push_back(rationals(row));
    return j;
}

inline Json polynomials(const std::vector<Polynomial>& ps) {
    Json j = Json::array();
    for (const auto& f : ps) j.push_back(f.to_string());
    return j;
}

inline Json parameterization(const RationalParameterization& r) {
    Json j;
    j["variable"] = r.T;
    j["separating_form"] = r.separating_form;
    j["quotient_dimension"] = r.quotient_dimension;
    j["radicalized"] = r.radicalized;
    j["f"] = coefficients(r.f);
    j["q0"] = coefficients(r.q0);
    Json q;
    for (std::size_t m = 0; m < r.q.size() && m < r.coordinate_names.size(); ++m)
        q[r.coordinate_names[m]] = coefficients(r.q[m]);
    j["q"] = q.is_null() ? Json::object() : q;
    return j;
}

inline Rational rational(const Json& j) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    return parse_rational(j.get<std::string>());
}

inline Interval read_interval(const Json& j) { return Interval(rational(j.at("lo")), rational(j.at("hi"))); }

inline Box read_box(const Json& j) {
    Box b;
    for (const auto& iv : j) b.push_back(read_interval(iv));
    return b;
}

}  // namespace report

inline const char* to_string(DepthReport::Status s) {
    return s == DepthReport::Status::zero_dimensional ? "zero_dimensional" : "unit";
}

/// Exact values as fraction strings, decimals alongside for reading. No
/// timings, so equal inputs and seeds give identical documents.
inline Json sample_report_json(const SampleReport& rep) {
    Json j;
    j["command"] = "sample";
    j["input"]["vars"] = rep.input.ring.names();
    j["input"]["equations"] = report::polynomials(rep.input.polys);
    j["input"]["regular"] = rep.input.assume_regular_sequence;
    j["seed"] = rep.seed;
    j["width"] = to_string(rep.width);
    j["dimension"] = rep.dimension;
    Json bounds = Json::object();
    if (rep.betti) bounds["betti"] = report::integer(*rep.betti);
    if (rep.critical) bounds["critical"] = report::integer(*rep.critical);
    bounds["points"] = rep.points.size();
    bounds["within_betti_bound"] = rep.within_betti_bound();
    bounds["depth0_within_critical_bound"] = rep.depth0_within_critical_bound();
    j["bounds"] = bounds;
    Json attempts = Json::array();
    for (const auto& a : rep.attempts)
        attempts.push_back({{"matrix_draw", a.matrix_draw}, {"p_shift", a.p_shift}, {"outcome", a.outcome}});
    j["attempts"] = attempts;
    j["A"] = rep.A ? report::matrix(*rep.A) : Json();
    j["p"] = report::rationals(rep.p);
    Json depths = Json::array();
    for (const auto& d : rep.depths) {
        Json dj;
        dj["depth"] = d.depth;
        dj["status"] = to_string(d.status);
        dj["equations"] = d.equations;
        dj["variables"] = d.variables;
        dj["degree"] = d.degree;
        dj["real_roots"] = d.real_roots;
        dj["seed"] = d.seed;
        dj["eliminated"] = report::polynomials(d.eliminated);
        if (d.status == DepthReport::Status::zero_dimensional)
            dj["parameterization"] = report::parameterization(d.parameterization);
        depths.push_back(dj);
    }
    j["depths"] = depths;
    Json points = Json::array();
    for (const auto& pt : rep.points) {
        Json pj;
        pj["depth"] = pt.fiber_depth;
        pj["witness_seed"] = pt.witness_seed;
        pj["on_variety"] = pt.on_variety;
        pj["critical"] = pt.critical;
        pj["coords"] = report::box(pt.coords);
        pj["fiber_coords"] = report::box(pt.fiber_coords);
        pj["root"] = report::interval(pt.root_interval);
        points.push_back(pj);
    }
    j["points"] = points;
    j["duplicates_removed"] = rep.duplicates_removed;
    if (!rep.cross_checks.empty()) {
        Json cc = Json::array();
        for (const auto& c : rep.cross_checks)
            cc.push_back({{"depth", c.depth},
                          {"sliced_dimension", c.sliced_dimension},
                          {"real_points", c.real_points},
                          {"matched", c.matched}});
        j["cross_checks"] = cc;
    }
    return j;
}

/// What `verify` needs from a saved report.
struct SavedReport {
    InputSystem input;
    long dimension = -1;
    std::optional<LinearChange> A;
    std::vector<Rational> p;
    std::vector<IsolatingBox> points;
    std::optional<Integer> betti;
};

inline SavedReport read_sample_report(const Json& j) {
    SavedReport out;
    Ring ring(j.at("input").at("vars").get<std::vector<std::string>>());
    std::vector<Polynomial> polys;
    for (const auto& e : j.at("input").at("equations")) polys.push_back(parse_polynomial(e.get<std::string>(), ring));
    out.input = InputSystem{std::move(polys), ring, j.at("input").value("regular", false), true};
    out.dimension = j.at("dimension").get<long>();
    if (j.contains("A") && !j.at("A").is_null()) {
        RationalMatrix m;
        for (const auto& row : j.at("A")) {
            std::vector<Rational> r;
            for (const auto& v : row) r.push_back(report::rational(v));
            m.push_back(std::move(r));
        }
        out.A = LinearChange(std::move(m));
    }
    for (const auto& v : j.at("p")) out.p.push_back(report::rational(v));
    const Json& bounds = j.at("bounds");
    if (bounds.contains("betti")) {
        const Json& b = bounds.at("betti");
        out.betti = b.is_string() ? Integer(b.get<std::string>()) : Integer(b.get<long>());
    }
    for (const auto& pj : j.at("points")) {
        IsolatingBox pt;
        pt.fiber_depth = pj.at("depth").get<long>();
        pt.witness_seed = pj.at("witness_seed").get<std::uint64_t>();
        pt.coords = report::read_box(pj.at("coords"));
        pt.fiber_coords = report::read_box(pj.at("fiber_coords"));
        pt.root_interval = report::read_interval(pj.at("root"));
        out.points.push_back(std::move(pt));
    }
    return out;
}

struct VerifyOutcome {
    std::size_t points = 0;
    std::size_t on_variety = 0;
    std::size_t critical = 0;
    bool within_betti_bound = true;

    bool ok() const { return on_variety == points && critical == points && within_betti_bound; }
};

/// Re-checks every saved box against the saved input: interval vanishing of
/// the equations and the criticality condition at its fiber depth.
inline VerifyOutcome verify_saved_report(const SavedReport& rep) {
    VerifyOutcome out;
    out.points = rep.points.size();
    if (rep.betti) out.within_betti_bound = Integer(static_cast<long>(rep.points.size())) <= *rep.betti;
    for (const auto& pt : rep.points) {
        if (verify_on_variety(pt, rep.input)) ++out.on_variety;
        if (!rep.A) continue;
        if (static_cast<std::size_t>(pt.fiber_depth) >= rep.input.n()) {
            ++out.critical;
            continue;
        }
        FiberCriticality fc = fiber_criticality(rep.input, *rep.A, rep.p, pt.fiber_depth);
        try {
            if (lagrange_membership_check(pt.coords, fc.constraints, fc.objective)) ++out.critical;
        } catch (const std::invalid_argument&) {
        }
    }
    return out;
}

}  // namespace realsample

#endif
