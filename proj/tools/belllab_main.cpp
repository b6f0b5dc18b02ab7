// Command-line front end: inequality scans and checks, joint-distribution
// feasibility decisions, and the sequential measurement simulator.
//
// Exit codes: 0 holds/feasible, 3 violated/infeasible, 4 statistical flag
// raised, 2 bad arguments, 1 I/O failure.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "belllab/belllab.hpp"
#include "belllab/io.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitIo = 1;
constexpr int kExitUsage = 2;
constexpr int kExitViolated = 3;
constexpr int kExitFlagged = 4;

constexpr double kDegToRad = 0.017453292519943295;

struct CommonOptions {
    std::string out_path;  // empty = stdout
    std::string format = "json";
    bool degrees = false;
};

void add_common(CLI::App* cmd, CommonOptions& opts, bool with_format) {
    cmd->add_option("--out", opts.out_path, "Write results to this file instead of stdout");
    if (with_format) {
        cmd->add_option("--format", opts.format, "Output format")
            ->check(CLI::IsMember({"json", "csv"}))
            ->capture_default_str();
    }
    cmd->add_flag("--degrees", opts.degrees, "Interpret angle arguments as degrees");
}

double to_radians(double angle, const CommonOptions& opts) {
    return opts.degrees ? angle * kDegToRad : angle;
}

// Writes payload to opts.out_path or stdout; false on I/O failure.
bool emit(const CommonOptions& opts, const std::string& payload) {
    if (opts.out_path.empty()) {
        std::cout << payload;
        return std::cout.good();
    }
    std::ofstream out(opts.out_path, std::ios::binary | std::ios::trunc);
    if (!out) {
        std::cerr << "error: cannot open '" << opts.out_path << "' for writing\n";
        return false;
    }
    out << payload;
    out.flush();
    if (!out.good()) {
        std::cerr << "error: write to '" << opts.out_path << "' failed\n";
        return false;
    }
    return true;
}

std::string dump(const belllab::json& j) { return j.dump(2) + "\n"; }

int run_scan(double min_angle, double max_angle, std::size_t steps, const CommonOptions& opts) {
    const auto scan = belllab::scan_violations(to_radians(min_angle, opts),
                                               to_radians(max_angle, opts), steps);

    std::string payload;
    if (opts.format == "csv") {
        std::ostringstream csv;
        belllab::write_scan_csv(csv, scan);
        payload = csv.str();
    } else {
        payload = dump(belllab::scan_to_json(scan));
    }
    if (!emit(opts, payload)) return kExitIo;

    const belllab::FloatReport& worst = scan.worst();
    std::ostream& summary = opts.out_path.empty() ? std::cerr : std::cout;
    summary << "worst slack " << belllab::format_double(worst.slack) << " at theta="
            << belllab::format_double(scan.grid[scan.worst_index])
            << (worst.violated ? " (violated)" : " (holds)") << "\n";
    return kExitOk;
}

int run_check(double t1, double t2, double t3, const CommonOptions& opts) {
    const belllab::FloatReport report = belllab::quantum_wigner_conditional(
        to_radians(t1, opts), to_radians(t2, opts), to_radians(t3, opts));
    if (!emit(opts, dump(belllab::report_to_json(report)))) return kExitIo;
    return report.violated ? kExitViolated : kExitOk;
}

int run_fit(double t1, double t2, double t3, std::int64_t denom, const CommonOptions& opts) {
    const belllab::PairwiseTargets targets = belllab::targets_from_quantum(
        to_radians(t1, opts), to_radians(t2, opts), to_radians(t3, opts), denom);
    const belllab::FeasibilityResult result = belllab::decide_feasibility(targets);

    belllab::json j = belllab::feasibility_to_json(result);
    j["targets"] = belllab::targets_to_json(targets);
    if (!emit(opts, dump(j))) return kExitIo;
    return result.status == belllab::FeasibilityStatus::Feasible ? kExitOk : kExitViolated;
}

int run_simulate(double first, double second, std::uint64_t trials, std::uint64_t seed,
                 const CommonOptions& opts) {
    const belllab::ProtocolSpec spec{belllab::QubitState(belllab::Complex(1.0, 0.0),
                                                         belllab::Complex(0.0, 0.0)),
                                     belllab::SpinObservable(to_radians(first, opts)),
                                     belllab::SpinObservable(to_radians(second, opts)), trials,
                                     seed};
    const belllab::FrequencyTable table = belllab::run_protocol(spec);
    const belllab::TheoryComparison comparison = belllab::compare_to_theory(spec, table);

    belllab::json j{{"table", belllab::table_to_json(table, seed)},
                    {"comparison", belllab::comparison_to_json(comparison)}};
    if (!emit(opts, dump(j))) return kExitIo;
    return comparison.any_flagged ? kExitFlagged : kExitOk;
}

int run_maximize(double lo, double hi, double tol, const CommonOptions& opts) {
    const belllab::ViolationOptimum optimum =
        belllab::maximize_violation(to_radians(lo, opts), to_radians(hi, opts), tol);
    const belllab::json j{{"theta_star", optimum.theta}, {"f_star", optimum.value}};
    if (!emit(opts, dump(j))) return kExitIo;
    return optimum.value < -belllab::kViolationTol ? kExitViolated : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Classical vs. quantum conditional-probability laboratory"};
    app.require_subcommand(1);

    CommonOptions scan_opts;
    scan_opts.format = "csv";
    double scan_min = 0.0, scan_max = 0.0;
    std::size_t scan_steps = 0;
    CLI::App* scan = app.add_subcommand(
        "scan", "Evaluate f(theta) = cos^2(3t) + sin^2(2t) - cos^2(t) over a uniform grid");
    scan->add_option("--min", scan_min, "Lower grid bound")->required();
    scan->add_option("--max", scan_max, "Upper grid bound")->required();
    scan->add_option("--steps", scan_steps, "Number of grid points (>= 2)")->required();
    add_common(scan, scan_opts, true);

    CommonOptions check_opts;
    double check_t1 = 0.0, check_t2 = 0.0, check_t3 = 0.0;
    CLI::App* check = app.add_subcommand(
        "check", "Check the conditional inequality for three spin-projection angles");
    check->add_option("theta1", check_t1, "First angle")->required();
    check->add_option("theta2", check_t2, "Conditioning angle")->required();
    check->add_option("theta3", check_t3, "Third angle")->required();
    add_common(check, check_opts, false);

    CommonOptions fit_opts;
    double fit_t1 = 0.0, fit_t2 = 0.0, fit_t3 = 0.0;
    std::int64_t fit_denom = 1000000;
    CLI::App* fit = app.add_subcommand(
        "fit", "Decide whether a joint distribution reproduces the quantum pairwise statistics");
    fit->add_option("theta1", fit_t1, "First angle")->required();
    fit->add_option("theta2", fit_t2, "Second angle")->required();
    fit->add_option("theta3", fit_t3, "Third angle")->required();
    fit->add_option("--denom", fit_denom, "Rationalization denominator (>= 2)")
        ->capture_default_str();
    add_common(fit, fit_opts, false);

    CommonOptions sim_opts;
    double sim_first = 0.0, sim_second = 0.0;
    std::uint64_t sim_trials = 0, sim_seed = 0;
    CLI::App* simulate = app.add_subcommand(
        "simulate", "Monte Carlo run of the sequential measure-collapse-measure protocol");
    simulate->add_option("--first", sim_first, "Angle of the first observable")->required();
    simulate->add_option("--second", sim_second, "Angle of the second observable")->required();
    simulate->add_option("--trials", sim_trials, "Number of trials (>= 1)")->required();
    simulate->add_option("--seed", sim_seed, "Generator seed")->capture_default_str();
    add_common(simulate, sim_opts, false);

    CommonOptions max_opts;
    double max_lo = 0.0, max_hi = 0.0, max_tol = 1e-9;
    CLI::App* maximize =
        app.add_subcommand("maximize", "Locate the strongest violation of f in an interval");
    maximize->add_option("--lo", max_lo, "Lower interval bound")->required();
    maximize->add_option("--hi", max_hi, "Upper interval bound")->required();
    maximize->add_option("--tol", max_tol, "Bracket width tolerance")->capture_default_str();
    add_common(maximize, max_opts, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (scan->parsed()) return run_scan(scan_min, scan_max, scan_steps, scan_opts);
        if (check->parsed()) return run_check(check_t1, check_t2, check_t3, check_opts);
        if (fit->parsed()) return run_fit(fit_t1, fit_t2, fit_t3, fit_denom, fit_opts);
        if (simulate->parsed()) return run_simulate(sim_first, sim_second, sim_trials, sim_seed,
                                                    sim_opts);
        if (maximize->parsed()) return run_maximize(max_lo, max_hi, max_tol, max_opts);
    } catch (const belllab::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitIo;
    }
    return kExitUsage;
}
