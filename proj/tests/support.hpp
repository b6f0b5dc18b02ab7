#ifndef BELLLAB_TESTS_SUPPORT_HPP
#define BELLLAB_TESTS_SUPPORT_HPP

#include <array>
#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

#include "belllab/feasibility.hpp"
#include "belllab/prob_space.hpp"

namespace belllab::testing {

inline DichotomicVariable var_from_signs(std::string_view signs) {
    std::vector<int> values;
    values.reserve(signs.size());
    for (char c : signs) values.push_back(c == '+' ? +1 : -1);
    return DichotomicVariable(std::move(values));
}

inline FiniteProbabilitySpace uniform_space(std::size_t atoms) {
    return FiniteProbabilitySpace(
        std::vector<Rational>(atoms, Rational(1, static_cast<int>(atoms))));
}

/**
 * Seeded 8-atom space whose three coordinate variables all have exactly
 * unbiased marginals: random 16-bit masses are symmetrized over antipodal
 * sign patterns, m(s) = (k(s) + k(-s)) / (2·Σk), which pins every marginal
 * at exactly 1/2 while leaving the pairwise statistics random.
 */
inline SpaceSample symmetric_triple(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::array<std::uint64_t, 8> raw{};
    std::uint64_t total = 0;
    do {
        total = 0;
        for (auto& k : raw) {
            k = rng() >> 48;
            total += k;
        }
    } while (total == 0);

    std::vector<Rational> masses;
    masses.reserve(8);
    for (std::size_t i = 0; i < 8; ++i) {
        masses.emplace_back(BigInt(raw[i] + raw[7 - i]), BigInt(2) * total);
    }
    return SpaceSample{FiniteProbabilitySpace(std::move(masses)),
                       {JointDistribution8::coordinate(0), JointDistribution8::coordinate(1),
                        JointDistribution8::coordinate(2)}};
}

}  // namespace belllab::testing

#endif  // BELLLAB_TESTS_SUPPORT_HPP
