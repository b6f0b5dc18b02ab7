#ifndef BELLLAB_IO_HPP
#define BELLLAB_IO_HPP

#include <charconv>
#include <cstdint>
#include <ostream>
#include <string>
#include <system_error>

#include <json.hpp>

#include "belllab/errors.hpp"
#include "belllab/feasibility.hpp"
#include "belllab/inequality.hpp"
#include "belllab/measurement.hpp"
#include "belllab/prob_space.hpp"
#include "belllab/qubit.hpp"
#include "belllab/rational.hpp"

namespace belllab {

/// Shortest decimal form that parses back to the same double; the same
/// representation nlohmann::json emits, so mixed text output stays
/// consistent and reruns are byte-identical.
inline std::string format_double(double value) {
    char buf[32];
    const auto result = std::to_chars(buf, buf + sizeof buf, value);
    return std::string(buf, result.ptr);
}

}  // namespace belllab

// Rational <-> canonical "p/q" string.
namespace nlohmann {
template <>
struct adl_serializer<belllab::Rational> {
    static void to_json(json& j, const belllab::Rational& r) { j = belllab::to_string(r); }
    static void from_json(const json& j, belllab::Rational& r) {
        r = belllab::parse_rational(j.get<std::string>());
    }
};
}  // namespace nlohmann

namespace belllab {

using nlohmann::json;

inline json space_to_json(const FiniteProbabilitySpace& space) {
    json weights = json::array();
    for (const Rational& w : space.weights()) weights.push_back(w);
    return json{{"weights", weights}};
}

inline FiniteProbabilitySpace space_from_json(const json& j) {
    std::vector<Rational> weights;
    for (const auto& entry : j.at("weights")) weights.push_back(entry.get<Rational>());
    return FiniteProbabilitySpace(std::move(weights));
}

inline json state_to_json(const QubitState& state) {
    return json{{"re", {state.amp0().real(), state.amp1().real()}},
                {"im", {state.amp0().imag(), state.amp1().imag()}}};
}

inline QubitState state_from_json(const json& j) {
    const auto& re = j.at("re");
    const auto& im = j.at("im");
    return QubitState(Complex(re.at(0).get<double>(), im.at(0).get<double>()),
                      Complex(re.at(1).get<double>(), im.at(1).get<double>()));
}

template <typename Value>
inline json report_to_json(const InequalityReport<Value>& report) {
    return json{{"kind", to_string(report.kind)}, {"lhs", report.lhs},
                {"rhs", report.rhs},             {"slack", report.slack},
                {"violated", report.violated},   {"inputs", report.inputs}};
}

inline json table_to_json(const FrequencyTable& table, std::uint64_t seed) {
    return json{{"counts",
                 {{table.counts[0][0], table.counts[0][1]},
                  {table.counts[1][0], table.counts[1][1]}}},
                {"trials", table.trials},
                {"seed", seed}};
}

/// Reads the {"counts", "trials", "seed"} wire format; returns the table and
/// stores the recorded seed through `seed`.
inline FrequencyTable table_from_json(const json& j, std::uint64_t& seed) {
    FrequencyTable table;
    const auto& counts = j.at("counts");
    for (int i = 0; i < 2; ++i) {
        for (int k = 0; k < 2; ++k) {
            table.counts[i][k] = counts.at(i).at(k).get<std::uint64_t>();
        }
    }
    table.trials = j.at("trials").get<std::uint64_t>();
    seed = j.at("seed").get<std::uint64_t>();
    return table;
}

inline json comparison_to_json(const TheoryComparison& comparison) {
    json branches = json::array();
    for (const BranchComparison& b : comparison.branches) {
        branches.push_back(json{{"first_outcome", b.first_outcome},
                                {"observations", b.observations},
                                {"empirical", b.empirical},
                                {"theoretical", b.theoretical},
                                {"deviation", b.deviation},
                                {"standard_error", b.standard_error},
                                {"flagged", b.flagged}});
    }
    return json{{"branches", branches}, {"any_flagged", comparison.any_flagged}};
}

inline json facet_to_json(const WignerFacet& facet) {
    return json{{"name", facet.name},
                {"atom_coeffs", facet.atom_coeffs},
                {"constant", facet.constant},
                {"target_coeffs", facet.target_coeffs}};
}

inline json targets_to_json(const PairwiseTargets& targets) {
    return json{{"p_ab", targets.p_ab},
                {"p_bc", targets.p_bc},
                {"p_ac", targets.p_ac},
                {"rounding_bound", targets.rounding_bound}};
}

inline json feasibility_to_json(const FeasibilityResult& result) {
    if (result.status == FeasibilityStatus::Feasible) {
        json masses = json::array();
        for (const Rational& m : result.witness->masses()) masses.push_back(m);
        return json{{"status", "feasible"}, {"witness", {{"masses", masses}}}};
    }
    return json{{"status", "infeasible"},
                {"certificate",
                 {{"facet", facet_to_json(result.certificate->facet)},
                  {"deficit", result.certificate->deficit}}}};
}

inline json scan_to_json(const ViolationScanResult& scan) {
    json reports = json::array();
    for (std::size_t k = 0; k < scan.reports.size(); ++k) {
        json entry = report_to_json(scan.reports[k]);
        entry["theta"] = scan.grid[k];
        reports.push_back(std::move(entry));
    }
    return reports;
}

/// Plot-ready CSV: header "theta,f,violated" then one row per grid point,
/// violated encoded as 0/1.
inline void write_scan_csv(std::ostream& out, const ViolationScanResult& scan) {
    out << "theta,f,violated\n";
    for (std::size_t k = 0; k < scan.reports.size(); ++k) {
        const FloatReport& report = scan.reports[k];
        out << format_double(scan.grid[k]) << ',' << format_double(report.slack) << ','
            << (report.violated ? '1' : '0') << '\n';
    }
}

}  // namespace belllab

#endif  // BELLLAB_IO_HPP
