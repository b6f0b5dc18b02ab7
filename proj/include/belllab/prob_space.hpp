#ifndef BELLLAB_PROB_SPACE_HPP
#define BELLLAB_PROB_SPACE_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "belllab/errors.hpp"
#include "belllab/rational.hpp"

namespace belllab {

/// Probability of an event; an exact rational in [0, 1].
using EventProbability = Rational;

/**
 * Finite probability space: atoms 0..n-1 carrying exact nonnegative rational
 * weights that sum to exactly 1. The event algebra is the full power set of
 * the atoms. Immutable after construction.
 */
class FiniteProbabilitySpace {
  public:
    explicit FiniteProbabilitySpace(std::vector<Rational> weights)
        : weights_(std::move(weights)) {
        Rational total = 0;
        for (const Rational& w : weights_) {
            if (w < 0) {
                throw NegativeWeight("weight " + belllab::to_string(w) + " is negative");
            }
            total += w;
        }
        if (total != 1) {
            throw NotNormalized("weights sum to " + belllab::to_string(total) + ", expected 1/1");
        }
    }

    std::size_t atom_count() const noexcept { return weights_.size(); }
    const Rational& weight(std::size_t atom) const { return weights_.at(atom); }
    const std::vector<Rational>& weights() const noexcept { return weights_; }

  private:
    std::vector<Rational> weights_;
};

/**
 * A ±1-valued random variable, given by its value on every atom.
 */
class DichotomicVariable {
  public:
    explicit DichotomicVariable(std::vector<int> values) : values_(std::move(values)) {
        for (int v : values_) {
            if (v != 1 && v != -1) {
                throw OutOfRange("dichotomic value must be +1 or -1, got " + std::to_string(v));
            }
        }
    }

    std::size_t size() const noexcept { return values_.size(); }
    int operator[](std::size_t atom) const { return values_.at(atom); }

    /// Compact descriptor, e.g. "++-+" for (+1,+1,-1,+1).
    std::string signs() const {
        std::string s;
        s.reserve(values_.size());
        for (int v : values_) s.push_back(v > 0 ? '+' : '-');
        return s;
    }

    /// Pointwise negation.
    DichotomicVariable negated() const {
        std::vector<int> neg(values_.size());
        for (std::size_t i = 0; i < values_.size(); ++i) neg[i] = -values_[i];
        return DichotomicVariable(std::move(neg));
    }

  private:
    std::vector<int> values_;
};

namespace detail {

inline void require_same_dimension(const FiniteProbabilitySpace& space,
                                   const DichotomicVariable& x) {
    if (x.size() != space.atom_count()) {
        throw DimensionMismatch("variable on " + std::to_string(x.size()) +
                                " atoms, space has " + std::to_string(space.atom_count()));
    }
}

inline void require_outcome(int alpha) {
    if (alpha != 1 && alpha != -1) {
        throw OutOfRange("outcome must be +1 or -1, got " + std::to_string(alpha));
    }
}

}  // namespace detail

/// E[x] = Σ_atoms weight·value, exact.
inline Rational expectation(const FiniteProbabilitySpace& space, const DichotomicVariable& x) {
    detail::require_same_dimension(space, x);
    Rational sum = 0;
    for (std::size_t i = 0; i < space.atom_count(); ++i) {
        if (x[i] > 0) {
            sum += space.weight(i);
        } else {
            sum -= space.weight(i);
        }
    }
    return sum;
}

/// ⟨x,y⟩ = E[x·y]; in [-1, 1] for ±1 variables.
inline Rational covariation(const FiniteProbabilitySpace& space, const DichotomicVariable& x,
                            const DichotomicVariable& y) {
    detail::require_same_dimension(space, x);
    detail::require_same_dimension(space, y);
    Rational sum = 0;
    for (std::size_t i = 0; i < space.atom_count(); ++i) {
        if (x[i] == y[i]) {
            sum += space.weight(i);
        } else {
            sum -= space.weight(i);
        }
    }
    return sum;
}

/// P(x = alpha), exact.
inline EventProbability event_probability(const FiniteProbabilitySpace& space,
                                          const DichotomicVariable& x, int alpha) {
    detail::require_same_dimension(space, x);
    detail::require_outcome(alpha);
    Rational mass = 0;
    for (std::size_t i = 0; i < space.atom_count(); ++i) {
        if (x[i] == alpha) mass += space.weight(i);
    }
    return mass;
}

/// P(x = alpha, y = beta): exact mass of the intersection event.
inline EventProbability joint_prob(const FiniteProbabilitySpace& space,
                                   const DichotomicVariable& x, int alpha,
                                   const DichotomicVariable& y, int beta) {
    detail::require_same_dimension(space, x);
    detail::require_same_dimension(space, y);
    detail::require_outcome(alpha);
    detail::require_outcome(beta);
    Rational mass = 0;
    for (std::size_t i = 0; i < space.atom_count(); ++i) {
        if (x[i] == alpha && y[i] == beta) mass += space.weight(i);
    }
    return mass;
}

/**
 * P(x = alpha | y = beta) = P(x = alpha, y = beta) / P(y = beta).
 *
 * Throws ZeroConditioningEvent when P(y = beta) = 0; the quotient is
 * undefined there and silently returning a value would corrupt every
 * downstream inequality verdict.
 */
inline EventProbability bayes_conditional(const FiniteProbabilitySpace& space,
                                          const DichotomicVariable& x, int alpha,
                                          const DichotomicVariable& y, int beta) {
    const Rational denominator = event_probability(space, y, beta);
    if (denominator == 0) {
        throw ZeroConditioningEvent("conditioning event y = " + std::to_string(beta) +
                                    " has probability zero");
    }
    return joint_prob(space, x, alpha, y, beta) / denominator;
}

/// True iff P(x = +1) = 1/2 exactly.
inline bool is_symmetric(const FiniteProbabilitySpace& space, const DichotomicVariable& x) {
    return event_probability(space, x, +1) == Rational(1, 2);
}

/// A space together with three ±1 variables on it.
struct SpaceSample {
    FiniteProbabilitySpace space;
    std::array<DichotomicVariable, 3> variables;
};

/**
 * Deterministic seeded generator of a random space and three random ±1
 * variables. Weights are drawn as 16-bit integers and normalized by their
 * sum, so they are exact rationals over a common denominator; an all-zero
 * draw is redrawn. The generator is std::mt19937_64, whose output sequence
 * is fixed by the C++ standard, so results are identical on every platform.
 *
 * Draw order: one 16-bit weight per atom (top 16 bits of each 64-bit word),
 * then one sign per atom for each of the three variables (top bit).
 */
inline SpaceSample random_space_and_variables(std::uint64_t seed, std::size_t atom_count) {
    if (atom_count == 0) {
        throw OutOfRange("atom_count must be at least 1");
    }
    std::mt19937_64 rng(seed);

    std::vector<std::uint64_t> raw(atom_count);
    std::uint64_t total = 0;
    do {
        total = 0;
        for (std::size_t i = 0; i < atom_count; ++i) {
            raw[i] = rng() >> 48;
            total += raw[i];
        }
    } while (total == 0);

    std::vector<Rational> weights;
    weights.reserve(atom_count);
    for (std::size_t i = 0; i < atom_count; ++i) {
        weights.emplace_back(BigInt(raw[i]), BigInt(total));
    }

    auto draw_variable = [&rng, atom_count]() {
        std::vector<int> values(atom_count);
        for (std::size_t i = 0; i < atom_count; ++i) {
            values[i] = (rng() >> 63) ? -1 : +1;
        }
        return DichotomicVariable(std::move(values));
    };

    DichotomicVariable a = draw_variable();
    DichotomicVariable b = draw_variable();
    DichotomicVariable c = draw_variable();
    return SpaceSample{FiniteProbabilitySpace(std::move(weights)),
                       {std::move(a), std::move(b), std::move(c)}};
}

}  // namespace belllab

#endif  // BELLLAB_PROB_SPACE_HPP
