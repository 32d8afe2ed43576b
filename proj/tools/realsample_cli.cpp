// realsample: bounds, bi-degrees and real sample points from the command line.

#include <realsample/cli/run.hpp>

#include <CLI11.hpp>

#include <iostream>
#include <string>

using realsample::JobConfig;

namespace {

void add_common(CLI::App* sub, JobConfig& cfg) {
    sub->add_option("--seed", cfg.seed, "Seed for every random choice")->capture_default_str();
    sub->add_option("--out", cfg.output, "Write the result here instead of stdout");
    sub->add_flag("-v,--verbose", cfg.verbosity, "Diagnostics on stderr (repeat for more)");
}

}  // namespace

int main(int argc, char** argv) {
    JobConfig cfg;
    CLI::App app{"Exact bi-homogeneous bounds and real sample points of smooth algebraic sets"};
    app.require_subcommand(1);

    auto* sample = app.add_subcommand("sample", "Compute at least one point per connected component");
    sample->add_option("input", cfg.input, "System file")->required();
    add_common(sample, cfg);
    sample->add_option("--width", cfg.width, "Box width as p/q")->capture_default_str();
    sample->add_flag("--regular", cfg.regular, "Input is a regular sequence");
    sample->add_flag("--parallel", cfg.parallel, "Solve fiber depths concurrently");
    sample->add_flag("--cross-check", cfg.cross_check, "Also slice the full Lagrange ideal by a random B");
    sample->add_option("--p", cfg.p, "Fiber base point coordinates")->delimiter(',');

    auto* bound = app.add_subcommand("bound", "Critical, Betti and Thom-Milnor bounds; Bezout bound for bi-degrees");
    bound->add_option("input", cfg.input, "Optional system file supplying n and the degrees");
    add_common(bound, cfg);
    bound->add_option("--degrees", cfg.degrees, "Degrees of f_1..f_s (one value is repeated s times)")->delimiter(',');
    bound->add_option("--n", cfg.n, "Number of variables");
    bound->add_option("--s", cfg.s, "Number of equations");
    bound->add_option("--d", cfg.d, "Dimension of the variety (default n - s)");
    bound->add_flag("--regular", cfg.regular, "Equations form a regular sequence");
    bound->add_option("--bidegrees", cfg.bidegrees, "Bi-degrees a:b for the Bezout bound")->delimiter(',');
    bound->add_option("--k", cfg.k, "Size of the second block for --bidegrees");

    auto* bideg = app.add_subcommand("bidegree", "Bi-degrees C_{d,e} by canonical form and by slicing");
    bideg->add_option("input", cfg.input, "System file with a blocks: line")->required();
    add_common(bideg, cfg);

    auto* biser = app.add_subcommand("biseries", "Bi-graded Hilbert table, canonical form and specialization");
    biser->add_option("input", cfg.input, "System file with a blocks: line")->required();
    add_common(biser, cfg);
    biser->add_option("--window", cfg.window, "Fixed window size (default: adaptive)");

    auto* lag = app.add_subcommand("lagrange", "Print a Lagrange or fiber system");
    lag->add_option("input", cfg.input, "System file")->required();
    add_common(lag, cfg);
    lag->add_option("--objective", cfg.objective, "Objective polynomial (default: projection on the first coordinate)");
    lag->add_option("--depth", cfg.depth, "Fiber depth");
    lag->add_option("--p", cfg.p, "Fiber base point coordinates")->delimiter(',');
    lag->add_flag("--reduced", cfg.reduced, "Reduced projection system (needs --regular)");
    lag->add_flag("--regular", cfg.regular, "Equations form a regular sequence");

    auto* verify = app.add_subcommand("verify", "Re-check the boxes of a saved sample report");
    verify->add_option("report", cfg.input, "Report written by sample")->required();
    add_common(verify, cfg);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return realsample::kExitUsage;
    }

    if (*sample) cfg.command = JobConfig::Command::sample;
    else if (*bound) cfg.command = JobConfig::Command::bound;
    else if (*bideg) cfg.command = JobConfig::Command::bidegree;
    else if (*biser) cfg.command = JobConfig::Command::biseries;
    else if (*lag) cfg.command = JobConfig::Command::lagrange;
    else cfg.command = JobConfig::Command::verify;
    return realsample::run(cfg);
}
