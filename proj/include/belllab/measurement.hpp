#ifndef BELLLAB_MEASUREMENT_HPP
#define BELLLAB_MEASUREMENT_HPP

#include <array>
#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "belllab/errors.hpp"
#include "belllab/qubit.hpp"

namespace belllab {

/**
 * Sequential conditional-measurement protocol: prepare `initial`, measure
 * `first`, collapse onto the observed eigenvector, measure `second`.
 * Deterministic for a fixed seed.
 */
struct ProtocolSpec {
    QubitState initial;
    SpinObservable first;
    SpinObservable second;
    std::uint64_t trials;
    std::uint64_t seed;
};

/**
 * Outcome counts of the two-measurement protocol. counts[i][j] holds the
 * number of trials with first outcome i and second outcome j, index 0
 * meaning +1 and index 1 meaning -1.
 */
struct FrequencyTable {
    std::array<std::array<std::uint64_t, 2>, 2> counts{};
    std::uint64_t trials = 0;

    std::uint64_t row_total(int first_outcome) const {
        const auto& row = counts[first_outcome > 0 ? 0 : 1];
        return row[0] + row[1];
    }

    bool operator==(const FrequencyTable&) const = default;
};

namespace detail {

// Uniform double in [0, 1) from the top 53 bits of one generator word. The
// mt19937_64 output sequence is fixed by the standard and this mapping uses
// no platform-dependent distribution code, so streams are bit-stable
// everywhere.
inline double unit_interval(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace detail

/**
 * Run the protocol. Per trial, two generator words are consumed in order:
 * one to sample the first outcome by its Born weight, one to sample the
 * second outcome from the collapsed state. Collapsing onto outcome i of
 * `first` yields its canonical eigenvector, so both branch states and all
 * four outcome probabilities are fixed before the loop.
 */
inline FrequencyTable run_protocol(const ProtocolSpec& spec) {
    if (spec.trials == 0) {
        throw OutOfRange("trials must be at least 1");
    }

    const double p_first_plus = born_probability(spec.initial, spec.first, +1);
    const auto [first_plus, first_minus] = eigenpairs(spec.first);
    const QubitState second_plus = eigenvector(spec.second, +1);
    const std::array<double, 2> p_second_plus = {
        transition_probability(second_plus, first_plus.eigenvector),
        transition_probability(second_plus, first_minus.eigenvector)};

    FrequencyTable table;
    table.trials = spec.trials;
    std::mt19937_64 rng(spec.seed);
    for (std::uint64_t t = 0; t < spec.trials; ++t) {
        const int i = detail::unit_interval(rng) < p_first_plus ? 0 : 1;
        const int j = detail::unit_interval(rng) < p_second_plus[i] ? 0 : 1;
        ++table.counts[i][j];
    }
    return table;
}

/// Empirical P(second = +1 | first = first_outcome).
inline double conditional_frequency(const FrequencyTable& table, int first_outcome) {
    if (first_outcome != 1 && first_outcome != -1) {
        throw OutOfRange("outcome must be +1 or -1, got " + std::to_string(first_outcome));
    }
    const std::uint64_t row = table.row_total(first_outcome);
    if (row == 0) {
        throw EmptyConditionRow("no observations with first outcome " +
                                std::to_string(first_outcome));
    }
    const std::uint64_t plus = table.counts[first_outcome > 0 ? 0 : 1][0];
    return static_cast<double>(plus) / static_cast<double>(row);
}

/// Empirical vs. theoretical conditional for one conditioning branch.
struct BranchComparison {
    int first_outcome;
    std::uint64_t observations;
    double empirical;
    double theoretical;
    double deviation;
    double standard_error;
    bool flagged;  // deviation > 4 standard errors
};

struct TheoryComparison {
    std::vector<BranchComparison> branches;  // only branches with observations
    bool any_flagged = false;
};

/**
 * Compare the table's conditional frequencies against the closed forms
 * cos²((θ₂-θ₁)/2) for the +1 branch and sin²((θ₂-θ₁)/2) for the -1 branch.
 * Each nonempty branch reports its absolute deviation and the binomial
 * standard error sqrt(p(1-p)/n) at the theoretical p; a branch is flagged
 * when the deviation exceeds 4 standard errors. At 10⁶ trials that keeps
 * the false-alarm rate vanishing while still catching formula errors.
 */
inline TheoryComparison compare_to_theory(const ProtocolSpec& spec, const FrequencyTable& table) {
    const double half_delta = 0.5 * (spec.second.theta() - spec.first.theta());
    const double cos_half = std::cos(half_delta);
    const double sin_half = std::sin(half_delta);

    TheoryComparison comparison;
    for (int outcome : {+1, -1}) {
        const std::uint64_t row = table.row_total(outcome);
        if (row == 0) continue;
        const double theory = outcome > 0 ? cos_half * cos_half : sin_half * sin_half;
        const double empirical = conditional_frequency(table, outcome);
        const double deviation = std::abs(empirical - theory);
        const double standard_error =
            std::sqrt(theory * (1.0 - theory) / static_cast<double>(row));
        const bool flagged = deviation > 4.0 * standard_error;
        comparison.branches.push_back(
            BranchComparison{outcome, row, empirical, theory, deviation, standard_error, flagged});
        comparison.any_flagged = comparison.any_flagged || flagged;
    }
    return comparison;
}

}  // namespace belllab

#endif  // BELLLAB_MEASUREMENT_HPP
