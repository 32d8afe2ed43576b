#ifndef REALSAMPLE_CLI_RUN_HPP
#define REALSAMPLE_CLI_RUN_HPP

#include <realsample/bihom/bounds.hpp>
#include <realsample/bihom/canonical_form.hpp>
#include <realsample/bihom/slicing.hpp>
#include <realsample/cli/report.hpp>
#include <realsample/cli/systemfile.hpp>
#include <realsample/lagrange/system.hpp>
#include <realsample/sampler/sample.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace realsample {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitHypothesis = 2;

struct JobConfig {
    enum class Command { sample, bound, bidegree, biseries, lagrange, verify };

    Command command = Command::sample;
    std::string input;
    std::uint64_t seed = 42;
    std::string width = "1/1048576";
    bool regular = false;
    std::string output;
    int verbosity = 0;

    // sample
    bool parallel = false;
    bool cross_check = false;
    std::vector<std::string> p;

    // bound
    std::vector<long> degrees;
    std::optional<long> n;
    std::optional<long> s;
    std::optional<long> d;
    std::vector<std::string> bidegrees;
    std::optional<long> k;

    // biseries
    std::optional<long> window;

    // lagrange
    std::string objective;
    std::optional<long> depth;
    bool reduced = false;
};

/// Usage error that is not a parse error (bad flag combination, bad value).
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace cli_detail {

inline std::vector<Rational> parse_rationals(const std::vector<std::string>& items) {
    std::vector<Rational> out;
    for (const auto& s : items) out.push_back(parse_rational(s));
    return out;
}

/// "a:b" -> (a, b).
inline BiDegree parse_bidegree(const std::string& s) {
    auto colon = s.find(':');
    if (colon == std::string::npos) throw UsageError("bi-degree '" + s + "' is not of the form a:b");
    try {
        return {std::stol(s.substr(0, colon)), std::stol(s.substr(colon + 1))};
    } catch (const std::logic_error&) {
        throw UsageError("bi-degree '" + s + "' is not of the form a:b");
    }
}

inline InputSystem input_system(const SystemFile& sys, bool regular) {
    if (sys.polys.empty()) throw UsageError("system file has no equations");
    InputSystem in{sys.polys, sys.ring, regular, true};
    in.validate();
    return in;
}

/// The file's polynomials as a bi-homogeneous system, adding X0 / L0 when
/// some polynomial is not bi-homogeneous for the declared blocks.
inline std::pair<std::vector<Polynomial>, BlockSplit> bihomogeneous_system(const SystemFile& sys) {
    if (!sys.split) throw UsageError("this command needs a 'blocks:' line in the system file");
    bool already = true;
    for (const auto& f : sys.polys) already = already && bidegree_of(f, *sys.split).is_bihomogeneous;
    if (already) return {sys.polys, *sys.split};
    std::vector<Polynomial> out;
    BlockSplit split = *sys.split;
    std::optional<Ring> target;
    for (const auto& f : sys.polys) {
        auto h = bihomogenize(f, *sys.split);
        split = h.split;
        target = h.poly.ring();
        out.push_back(h.poly);
    }
    for (auto& f : out) f = f.map_to(*target);
    return {out, split};
}

/// Krull dimension of the bi-homogeneous ideal; at least 2 unless the
/// biprojective zero set is empty.
inline long affine_dimension(const std::vector<Polynomial>& gens, const BlockSplit& split) {
    Ring ring = split.ring();
    std::vector<Polynomial> mapped;
    for (const auto& f : gens) mapped.push_back(f.map_to(ring));
    long dim = mapped.empty() ? static_cast<long>(ring.size())
                              : dimension(groebner_basis(mapped, MonomialOrder::degrevlex(ring)));
    if (dim < 2) throw HypothesisViolation("ideal defines the empty set in the product of projective spaces");
    return dim;
}

inline Json grid(const std::vector<std::vector<long>>& g) {
    Json j = Json::array();
    for (const auto& row : g) j.push_back(row);
    return j;
}

inline Json grid(const IntegerGrid& g) {
    Json j = Json::array();
    for (const auto& row : g) {
        Json r = Json::array();
        for (const auto& v : row) r.push_back(report::integer(v));
        j.push_back(r);
    }
    return j;
}

inline Json keyed(const std::map<std::pair<long, long>, Integer>& m) {
    Json j = Json::array();
    for (const auto& [key, v] : m)
        if (v != 0) j.push_back({{"d", key.first}, {"e", key.second}, {"value", report::integer(v)}});
    return j;
}

class Job {
public:
    Job(const JobConfig& cfg, std::ostream& out, std::ostream& err) : cfg_(cfg), out_(out), err_(err) {}

    int sample() {
        SystemFile sys = read_system_file(cfg_.input);
        InputSystem in = input_system(sys, cfg_.regular);
        SampleOptions opt;
        opt.seed = cfg_.seed;
        opt.width = parse_rational(cfg_.width);
        if (opt.width <= 0) throw UsageError("--width must be positive");
        opt.parallel = cfg_.parallel;
        opt.cross_check = cfg_.cross_check;
        if (!cfg_.p.empty()) opt.p = parse_rationals(cfg_.p);
        SampleReport rep = sample_real_points(in, opt);
        log(1, "dimension " + std::to_string(rep.dimension) + ", " + std::to_string(rep.points.size()) + " points, " +
                   std::to_string(rep.attempts.size()) + " attempt(s)");
        for (const auto& a : rep.attempts)
            log(2, "attempt draw=" + std::to_string(a.matrix_draw) + " shift=" + std::to_string(a.p_shift) + ": " +
                       a.outcome);
        emit(sample_report_json(rep));
        bool certified = rep.within_betti_bound();
        for (const auto& pt : rep.points) certified = certified && pt.on_variety && pt.critical;
        if (!certified) {
            err_ << "error: some sample points failed certification\n";
            return kExitHypothesis;
        }
        return kExitOk;
    }

    int bound() {
        Json j;
        std::vector<long> degrees = cfg_.degrees;
        std::optional<SystemFile> sys;
        if (!cfg_.input.empty()) {
            sys = read_system_file(cfg_.input);
            if (degrees.empty())
                for (const auto& f : sys->polys) degrees.push_back(f.total_degree());
        }
        if (!cfg_.bidegrees.empty()) {
            BoundInputs bi;
            bi.n = cfg_.n.value_or(0);
            bi.k = cfg_.k.value_or(0);
            if (!cfg_.n || !cfg_.k) throw UsageError("--bidegrees needs --n and --k");
            for (const auto& s : cfg_.bidegrees) bi.bidegrees.push_back(parse_bidegree(s));
            j["bezout"] = report::integer(bezout_bound(bi));
        }
        if (!degrees.empty()) {
            long n = cfg_.n ? *cfg_.n : sys ? static_cast<long>(sys->ring.size()) : -1;
            if (n < 0) throw UsageError("--degrees needs --n");
            long s = cfg_.s.value_or(static_cast<long>(degrees.size()));
            if (degrees.size() == 1 && s > 1) degrees.assign(static_cast<std::size_t>(s), degrees.front());
            if (s != static_cast<long>(degrees.size()))
                throw UsageError("--s is " + std::to_string(s) + " but " + std::to_string(degrees.size()) +
                                 " degrees were given");
            long d = cfg_.d.value_or(n - s);
            long D = 0;
            for (long x : degrees) D = std::max(D, x);
            j["n"] = n;
            j["s"] = s;
            j["d"] = d;
            j["degrees"] = degrees;
            j["regular"] = cfg_.regular;
            j["critical"] = report::integer(critical_bound(degrees, n, cfg_.regular));
            j["betti"] = report::integer(betti_bound(degrees, n, d, cfg_.regular));
            j["thom_milnor"] = report::integer(thom_milnor_bound(D, n));
        }
        if (j.is_null()) throw UsageError("bound needs --degrees, --bidegrees or an input file");
        emit(j);
        return kExitOk;
    }

    int bidegree() {
        SystemFile sys = read_system_file(cfg_.input);
        auto [gens, split] = bihomogeneous_system(sys);
        const long dim = affine_dimension(gens, split), D = dim - 2;
        CanonicalFormResult cf = canonical_form_adaptive(gens, split, dim);
        Rng rng(cfg_.seed);
        Json j;
        j["command"] = "bidegree";
        j["x_block"] = split.x_vars;
        j["l_block"] = split.l_vars;
        j["equations"] = report::polynomials(gens);
        j["dimension"] = D;
        j["seed"] = cfg_.seed;
        Json rows = Json::array();
        bool agree = true;
        const long n = static_cast<long>(split.x_vars.size()) - 1, k = static_cast<long>(split.l_vars.size()) - 1;
        for (long d = std::max(0L, D - k); d <= std::min(n, D); ++d) {
            const long e = D - d;
            Rng r = rng.split(static_cast<std::uint64_t>(d));
            long sliced = bidegree_by_slicing(gens, split, d, e, r);
            Integer canon = cf.form.c(d, e);
            agree = agree && canon == sliced;
            rows.push_back({{"d", d}, {"e", e}, {"canonical_form", report::integer(canon)}, {"slicing", sliced}});
        }
        j["bidegrees"] = rows;
        j["routes_agree"] = agree;
        try {
            BoundInputs bi;
            bi.n = n;
            bi.k = k;
            for (const auto& f : gens) bi.bidegrees.push_back(bidegree_of(f, split).degree);
            j["bezout"] = report::integer(bezout_bound(bi));
        } catch (const HypothesisViolation& e) {
            j["bezout"] = nullptr;
            log(1, e.what());
        }
        emit(j);
        if (!agree) {
            err_ << "error: canonical form and slicing disagree\n";
            return kExitHypothesis;
        }
        return kExitOk;
    }

    int biseries() {
        SystemFile sys = read_system_file(cfg_.input);
        auto [gens, split] = bihomogeneous_system(sys);
        const long dim = affine_dimension(gens, split), D = dim - 2;
        BiSeriesTable table;
        CanonicalForm form;
        if (cfg_.window) {
            table = hilbert_biseries(gens, split, *cfg_.window, *cfg_.window);
            form = canonical_form(table, dim);
        } else {
            CanonicalFormResult r = canonical_form_adaptive(gens, split, dim);
            table = std::move(r.table);
            form = std::move(r.form);
        }
        const long dmax = std::min(table.imax, table.jmax);
        Json j;
        j["command"] = "biseries";
        j["x_block"] = split.x_vars;
        j["l_block"] = split.l_vars;
        j["equations"] = report::polynomials(gens);
        j["dimension"] = D;
        j["window"] = {table.imax, table.jmax};
        j["table"] = grid(table.dims);
        j["canonical_form"] = {{"C", keyed(form.C)},
                               {"lower_terms", keyed(form.lower_terms)},
                               {"Q", grid(form.Q)},
                               {"numerator", grid(form.numerator)}};
        j["specialization"] = specialize_to_hilbert_series(table, dmax);
        emit(j);
        return kExitOk;
    }

    int lagrange() {
        SystemFile sys = read_system_file(cfg_.input);
        InputSystem in = input_system(sys, cfg_.regular);
        const LinearChange a = LinearChange::identity(in.n());
        LagrangeSystem out;
        if (!cfg_.objective.empty()) {
            if (cfg_.depth || cfg_.reduced) throw UsageError("--objective cannot be combined with --depth or --reduced");
            out = build_lagrange(in, parse_polynomial(cfg_.objective, in.ring));
        } else if (cfg_.reduced) {
            if (cfg_.depth) throw UsageError("--reduced cannot be combined with --depth");
            Rng rng(cfg_.seed);
            out = build_reduced_projection_system(in, a, rng);
        } else if (cfg_.depth) {
            std::vector<Rational> p = parse_rationals(cfg_.p);
            p.resize(std::max<std::size_t>(p.size(), static_cast<std::size_t>(*cfg_.depth)), Rational(0));
            out = build_fiber_system(in, a, p, *cfg_.depth).system;
        } else {
            out = build_projection_system(in, a);
        }
        SystemFile text{out.ring, out.polys, std::nullopt};
        if (!out.multipliers.empty()) text.split = out.split;
        std::ostringstream os;
        os << "# " << to_string(out.kind) << " system\n";
        if (!out.recombination.empty()) {
            os << "# recombination:";
            for (long c : out.recombination) os << ' ' << c;
            os << '\n';
        }
        os << format_system(text);
        emit_text(os.str());
        return kExitOk;
    }

    int verify() {
        Json j;
        try {
            j = Json::parse(read_text_file(cfg_.input));
        } catch (const Json::parse_error& e) {
            throw UsageError(std::string("report is not valid JSON: ") + e.what());
        }
        SavedReport rep;
        try {
            rep = read_sample_report(j);
        } catch (const Json::exception& e) {
            throw UsageError(std::string("report is missing fields: ") + e.what());
        }
        VerifyOutcome v = verify_saved_report(rep);
        Json o;
        o["command"] = "verify";
        o["points"] = v.points;
        o["on_variety"] = v.on_variety;
        o["critical"] = v.critical;
        o["within_betti_bound"] = v.within_betti_bound;
        o["ok"] = v.ok();
        emit(o);
        return v.ok() ? kExitOk : kExitHypothesis;
    }

private:
    void log(int level, const std::string& msg) {
        if (cfg_.verbosity >= level) err_ << msg << '\n';
    }

    void emit(const Json& j) { emit_text(j.dump(2) + "\n"); }

    void emit_text(const std::string& text) {
        if (cfg_.output.empty()) {
            out_ << text;
            return;
        }
        std::ofstream f(cfg_.output, std::ios::binary);
        if (!f) throw InputFileError("cannot write '" + cfg_.output + "'");
        f << text;
    }

    const JobConfig& cfg_;
    std::ostream& out_;
    std::ostream& err_;
};

}  // namespace cli_detail

/// Runs one job. Exit codes: 0 success, 1 usage / parse / IO error,
/// 2 violated hypotheses or failed certification.
inline int run(const JobConfig& cfg, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
    cli_detail::Job job(cfg, out, err);
    try {
        switch (cfg.command) {
        case JobConfig::Command::sample: return job.sample();
        case JobConfig::Command::bound: return job.bound();
        case JobConfig::Command::bidegree: return job.bidegree();
        case JobConfig::Command::biseries: return job.biseries();
        case JobConfig::Command::lagrange: return job.lagrange();
        case JobConfig::Command::verify: return job.verify();
        }
    } catch (const HypothesisViolation& e) {
        err << "hypothesis violation: " << e.what() << '\n';
        return kExitHypothesis;
    } catch (const GenericityError& e) {
        err << "genericity failure: " << e.what() << '\n';
        return kExitHypothesis;
    } catch (const NotZeroDimensional& e) {
        err << "not zero-dimensional: " << e.what() << '\n';
        return kExitHypothesis;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace realsample

#endif
