#ifndef BELLLAB_INEQUALITY_HPP
#define BELLLAB_INEQUALITY_HPP

#include <cmath>
#include <cstddef>
#include <limits>
#include <string>
#include <type_traits>
#include <vector>

#include "belllab/errors.hpp"
#include "belllab/prob_space.hpp"
#include "belllab/qubit.hpp"
#include "belllab/rational.hpp"

namespace belllab {

enum class InequalityKind { BellCovariation, WignerJoint, WignerConditional, TrigSpecial };

inline const char* to_string(InequalityKind kind) {
    switch (kind) {
        case InequalityKind::BellCovariation: return "BellCovariation";
        case InequalityKind::WignerJoint: return "WignerJoint";
        case InequalityKind::WignerConditional: return "WignerConditional";
        case InequalityKind::TrigSpecial: return "TrigSpecial";
    }
    return "?";
}

/// Strict float threshold below which slack counts as a violation. Equality
/// cases must never flip to "violated" on rounding noise.
inline constexpr double kViolationTol = 1e-12;

/**
 * Outcome of evaluating one inequality instance. `slack` is oriented so that
 * slack ≥ 0 always means "the inequality holds": rhs - lhs for ≤ forms and
 * lhs - rhs for ≥ forms. Exact (Rational) reports use zero tolerance; float
 * reports use kViolationTol.
 */
template <typename Value>
struct InequalityReport {
    InequalityKind kind;
    Value lhs;
    Value rhs;
    Value slack;
    bool violated;
    std::string inputs;
};

using ExactReport = InequalityReport<Rational>;
using FloatReport = InequalityReport<double>;

namespace detail {

inline bool slack_violates(const Rational& slack) { return slack < 0; }
inline bool slack_violates(double slack) { return slack < -kViolationTol; }

inline std::string format_angle(double theta) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", theta);
    return buf;
}

}  // namespace detail

/**
 * |⟨a,b⟩ - ⟨c,b⟩| ≤ 1 - ⟨a,c⟩ for any three ±1 variables on one space.
 * Evaluated exactly; a genuine Kolmogorov space can never violate it.
 */
inline ExactReport bell_covariation_check(const FiniteProbabilitySpace& space,
                                          const DichotomicVariable& a,
                                          const DichotomicVariable& b,
                                          const DichotomicVariable& c) {
    const Rational ab = covariation(space, a, b);
    const Rational cb = covariation(space, c, b);
    const Rational ac = covariation(space, a, c);
    Rational lhs = ab - cb;
    if (lhs < 0) lhs = -lhs;
    const Rational rhs = 1 - ac;
    const Rational slack = rhs - lhs;  // ≤ form
    return ExactReport{InequalityKind::BellCovariation, lhs, rhs, slack,
                       detail::slack_violates(slack),
                       "a=" + a.signs() + " b=" + b.signs() + " c=" + c.signs()};
}

/**
 * P(a=+1, b=+1) + P(b=-1, c=+1) ≥ P(a=+1, c=+1), evaluated exactly on joint
 * probabilities only — no conditioning is involved anywhere in this check.
 */
inline ExactReport wigner_joint_check(const FiniteProbabilitySpace& space,
                                      const DichotomicVariable& a, const DichotomicVariable& b,
                                      const DichotomicVariable& c) {
    const Rational lhs = joint_prob(space, a, +1, b, +1) + joint_prob(space, b, -1, c, +1);
    const Rational rhs = joint_prob(space, a, +1, c, +1);
    const Rational slack = lhs - rhs;  // ≥ form
    return ExactReport{InequalityKind::WignerJoint, lhs, rhs, slack,
                       detail::slack_violates(slack),
                       "a=" + a.signs() + " b=" + b.signs() + " c=" + c.signs()};
}

/**
 * P(a=+1|b=+1) + P(c=+1|b=-1) ≥ P(a=+1|c=+1) on three conditional
 * probabilities from any source — classical Bayes quotients (exact) or
 * quantum closed forms (float). The verdict is source-agnostic.
 */
template <typename Value>
inline InequalityReport<Value> wigner_conditional_check(const Value& p_a_given_b,
                                                        const Value& p_c_given_not_b,
                                                        const Value& p_a_given_c) {
    const auto in_range = [](const Value& p) {
        if constexpr (std::is_floating_point_v<Value>) {
            return std::isfinite(p) && p >= 0.0 && p <= 1.0;
        } else {
            return p >= 0 && p <= 1;
        }
    };
    if (!in_range(p_a_given_b) || !in_range(p_c_given_not_b) || !in_range(p_a_given_c)) {
        throw OutOfRange("conditional probabilities must lie in [0, 1]");
    }
    const Value lhs = p_a_given_b + p_c_given_not_b;
    const Value rhs = p_a_given_c;
    const Value slack = lhs - rhs;  // ≥ form
    return InequalityReport<Value>{InequalityKind::WignerConditional, lhs, rhs, slack,
                                   detail::slack_violates(slack), ""};
}

/**
 * The conditional inequality instantiated with quantum conditionals of three
 * spin projections:
 *
 *     cos²((θ1-θ2)/2) + sin²((θ3-θ2)/2) ≥ cos²((θ1-θ3)/2)
 *
 * The three entries come from the closed-form conditional matrices and are
 * cross-checked against the eigenvector inner-product route; disagreement
 * beyond kQuantumTol would mean the two computations diverged and is a
 * library defect, reported as std::logic_error.
 */
inline FloatReport quantum_wigner_conditional(double theta1, double theta2, double theta3) {
    if (!std::isfinite(theta1) || !std::isfinite(theta2) || !std::isfinite(theta3)) {
        throw NonFiniteAngle("angles must be finite");
    }
    const SpinObservable o1(theta1), o2(theta2), o3(theta3);

    const double p_ab = quantum_conditional(o1, o2).entry(+1, +1);
    const double p_cb = quantum_conditional(o3, o2).entry(+1, -1);
    const double p_ac = quantum_conditional(o1, o3).entry(+1, +1);

    // Independent route: |⟨e_i, e_j⟩|² on the analytic eigenvectors.
    const double q_ab = transition_probability(eigenvector(o1, +1), eigenvector(o2, +1));
    const double q_cb = transition_probability(eigenvector(o3, +1), eigenvector(o2, -1));
    const double q_ac = transition_probability(eigenvector(o1, +1), eigenvector(o3, +1));
    if (std::abs(p_ab - q_ab) > kQuantumTol || std::abs(p_cb - q_cb) > kQuantumTol ||
        std::abs(p_ac - q_ac) > kQuantumTol) {
        throw std::logic_error("closed-form and eigenvector conditionals disagree");
    }

    FloatReport report = wigner_conditional_check(p_ab, p_cb, p_ac);
    report.inputs = "theta1=" + detail::format_angle(theta1) +
                    " theta2=" + detail::format_angle(theta2) +
                    " theta3=" + detail::format_angle(theta3);
    return report;
}

/**
 * f(θ) = cos²3θ + sin²2θ - cos²θ: the one-parameter specialization obtained
 * from the quantum conditional inequality at angles (0, 6θ, 2θ). Negative
 * values mean violation; f equals the slack of
 * quantum_wigner_conditional(0, 6θ, 2θ) to within kQuantumTol.
 *
 * f has period π, is even, and in [0, π/2] is negative exactly on the open
 * interval (0, π/6), with equalities f(0) = f(π/6) = f(π/2) = 0.
 */
inline double trig_specialization(double theta) {
    if (!std::isfinite(theta)) {
        throw NonFiniteAngle("angle must be finite");
    }
    const double c3 = std::cos(3.0 * theta);
    const double s2 = std::sin(2.0 * theta);
    const double c1 = std::cos(theta);
    return c3 * c3 + s2 * s2 - c1 * c1;
}

inline FloatReport trig_specialization_report(double theta) {
    if (!std::isfinite(theta)) {
        throw NonFiniteAngle("angle must be finite");
    }
    const double c3 = std::cos(3.0 * theta);
    const double s2 = std::sin(2.0 * theta);
    const double c1 = std::cos(theta);
    const double lhs = c3 * c3 + s2 * s2;
    const double rhs = c1 * c1;
    const double slack = lhs - rhs;  // ≥ form
    return FloatReport{InequalityKind::TrigSpecial, lhs, rhs, slack,
                       detail::slack_violates(slack), "theta=" + detail::format_angle(theta)};
}

/**
 * Result of evaluating f over a uniform grid. `worst_index` is the argmin of
 * slack, lowest index winning ties, so the result is identical no matter how
 * the grid is evaluated.
 */
struct ViolationScanResult {
    std::vector<double> grid;
    std::vector<FloatReport> reports;
    std::size_t worst_index = 0;

    const FloatReport& worst() const { return reports.at(worst_index); }
};

/// Evaluate f on `steps` uniformly spaced angles covering [theta_min, theta_max].
inline ViolationScanResult scan_violations(double theta_min, double theta_max,
                                           std::size_t steps) {
    if (!std::isfinite(theta_min) || !std::isfinite(theta_max)) {
        throw NonFiniteAngle("scan bounds must be finite");
    }
    if (!(theta_min < theta_max)) {
        throw BadRange("scan requires theta_min < theta_max");
    }
    if (steps < 2) {
        throw BadRange("scan requires at least 2 steps");
    }

    ViolationScanResult result;
    result.grid.reserve(steps);
    result.reports.reserve(steps);
    const double span = theta_max - theta_min;
    double worst_slack = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < steps; ++k) {
        const double theta = (k + 1 == steps)
                                 ? theta_max
                                 : theta_min + span * static_cast<double>(k) /
                                                   static_cast<double>(steps - 1);
        FloatReport report = trig_specialization_report(theta);
        if (report.slack < worst_slack) {
            worst_slack = report.slack;
            result.worst_index = k;
        }
        result.grid.push_back(theta);
        result.reports.push_back(std::move(report));
    }
    return result;
}

/// Location and value of the strongest violation found in an interval.
struct ViolationOptimum {
    double theta;
    double value;  // f(theta)
};

/**
 * Minimize f over [theta_lo, theta_hi]: coarse deterministic grid to bracket
 * the minimum, then golden-section refinement until the bracket width is at
 * most `tol`. Derivative-free; f is cheap and smooth.
 */
inline ViolationOptimum maximize_violation(double theta_lo, double theta_hi, double tol) {
    if (!std::isfinite(theta_lo) || !std::isfinite(theta_hi)) {
        throw NonFiniteAngle("interval bounds must be finite");
    }
    if (!(theta_lo < theta_hi)) {
        throw BadRange("maximize_violation requires theta_lo < theta_hi");
    }
    if (!(tol > 0.0)) {
        throw NonPositiveTolerance("tolerance must be positive");
    }

    ViolationOptimum best{theta_lo, trig_specialization(theta_lo)};
    const auto consider = [&best](double theta) {
        const double value = trig_specialization(theta);
        if (value < best.value) best = ViolationOptimum{theta, value};
        return value;
    };

    // Bracket: 513-point grid, argmin with lowest-index tie-break.
    constexpr std::size_t kGridPoints = 513;
    const double span = theta_hi - theta_lo;
    std::size_t best_k = 0;
    double best_f = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < kGridPoints; ++k) {
        const double theta =
            (k + 1 == kGridPoints)
                ? theta_hi
                : theta_lo + span * static_cast<double>(k) / static_cast<double>(kGridPoints - 1);
        const double value = consider(theta);
        if (value < best_f) {
            best_f = value;
            best_k = k;
        }
    }
    const double cell = span / static_cast<double>(kGridPoints - 1);
    double lo = theta_lo + cell * static_cast<double>(best_k == 0 ? 0 : best_k - 1);
    double hi = theta_lo + cell * static_cast<double>(best_k + 1);
    if (lo < theta_lo) lo = theta_lo;
    if (hi > theta_hi) hi = theta_hi;

    // Golden-section refinement.
    constexpr double kInvPhi = 0.6180339887498948482;
    double x1 = hi - kInvPhi * (hi - lo);
    double x2 = lo + kInvPhi * (hi - lo);
    double f1 = consider(x1);
    double f2 = consider(x2);
    // The width shrinks by 1/φ per iteration; the cap only matters when tol
    // is below the attainable float resolution of the interval.
    for (int iter = 0; iter < 512 && hi - lo > tol; ++iter) {
        if (f1 <= f2) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - kInvPhi * (hi - lo);
            f1 = consider(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + kInvPhi * (hi - lo);
            f2 = consider(x2);
        }
    }
    return best;
}

}  // namespace belllab

#endif  // BELLLAB_INEQUALITY_HPP
