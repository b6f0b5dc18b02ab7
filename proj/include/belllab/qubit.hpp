#ifndef BELLLAB_QUBIT_HPP
#define BELLLAB_QUBIT_HPP

#include <array>
#include <cmath>
#include <complex>
#include <string>
#include <utility>

#include "belllab/errors.hpp"

namespace belllab {

using Complex = std::complex<double>;

/// Numerical tolerance of the quantum half of the library. Trigonometric
/// values are irrational, so unlike the classical core this module works in
/// 64-bit floats; 1e-12 leaves three orders of margin over double trig error.
inline constexpr double kQuantumTol = 1e-12;

inline constexpr double kTwoPi = 6.283185307179586476925286766559;

namespace detail {

inline bool is_finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

}  // namespace detail

/**
 * Normalized pure state of a single qubit, components in the σz basis.
 * |amp0|² + |amp1|² = 1 within kQuantumTol; NaN/inf never get in.
 */
class QubitState {
  public:
    QubitState(Complex amp0, Complex amp1) : amp0_(amp0), amp1_(amp1) {
        if (!detail::is_finite(amp0_) || !detail::is_finite(amp1_)) {
            throw NotNormalized("state amplitudes must be finite");
        }
        const double norm2 = std::norm(amp0_) + std::norm(amp1_);
        if (std::abs(norm2 - 1.0) > kQuantumTol) {
            throw NotNormalized("state norm² = " + std::to_string(norm2) + ", expected 1");
        }
    }

    Complex amp0() const noexcept { return amp0_; }
    Complex amp1() const noexcept { return amp1_; }

  private:
    Complex amp0_;
    Complex amp1_;
};

/// ⟨e, f⟩, conjugate-linear in the first argument.
inline Complex inner_product(const QubitState& e, const QubitState& f) {
    return std::conj(e.amp0()) * f.amp0() + std::conj(e.amp1()) * f.amp1();
}

/// |⟨e, f⟩|², clamped into [0, 1].
inline double transition_probability(const QubitState& e, const QubitState& f) {
    const double p = std::norm(inner_product(e, f));
    return p < 0.0 ? 0.0 : (p > 1.0 ? 1.0 : p);
}

/**
 * Spin projection in the x–z plane: cosθ·σz + sinθ·σx. Real symmetric,
 * trace 0, determinant -1, eigenvalues ±1. θ is normalized into [0, 2π)
 * at construction.
 */
class SpinObservable {
  public:
    explicit SpinObservable(double theta) {
        if (!std::isfinite(theta)) {
            throw NonFiniteAngle("observable angle must be finite");
        }
        double t = std::fmod(theta, kTwoPi);
        if (t < 0.0) t += kTwoPi;
        if (t >= kTwoPi) t = 0.0;  // fmod/rounding edge
        theta_ = t;
    }

    double theta() const noexcept { return theta_; }

    /// The 2×2 matrix [[cosθ, sinθ], [sinθ, -cosθ]].
    std::array<std::array<double, 2>, 2> matrix() const {
        const double c = std::cos(theta_);
        const double s = std::sin(theta_);
        return {{{c, s}, {s, -c}}};
    }

  private:
    double theta_;
};

/// One eigenvalue of a spin observable with its canonical unit eigenvector.
struct EigenPair {
    int eigenvalue;  // +1 or -1
    QubitState eigenvector;
};

/**
 * Closed-form eigenpairs: the +1 eigenvector is (cos θ/2, sin θ/2) and the
 * -1 eigenvector is (-sin θ/2, cos θ/2). These exact representatives are
 * the canonical phase convention used throughout; no iterative solver.
 */
inline std::pair<EigenPair, EigenPair> eigenpairs(const SpinObservable& obs) {
    const double half = 0.5 * obs.theta();
    const double c = std::cos(half);
    const double s = std::sin(half);
    return {EigenPair{+1, QubitState(Complex(c, 0.0), Complex(s, 0.0))},
            EigenPair{-1, QubitState(Complex(-s, 0.0), Complex(c, 0.0))}};
}

inline QubitState eigenvector(const SpinObservable& obs, int outcome) {
    const auto [plus, minus] = eigenpairs(obs);
    if (outcome == +1) return plus.eigenvector;
    if (outcome == -1) return minus.eigenvector;
    throw OutOfRange("outcome must be +1 or -1, got " + std::to_string(outcome));
}

/**
 * The 2×2 matrix of conditional probabilities P(a = α | b = β) between the
 * outcomes of two spin observables, computed in closed form:
 *
 *     P(a=+1 | b=+1) = cos²((θa-θb)/2)      P(a=+1 | b=-1) = sin²((θa-θb)/2)
 *
 * and complementarily for a = -1. Rows and columns each sum to 1 within
 * kQuantumTol (doubly stochastic), and every entry equals the transition
 * probability between the corresponding eigenvectors.
 */
class ConditionalMatrix {
  public:
    ConditionalMatrix(double p_pp, double p_pm, double p_mp, double p_mm)
        : entries_{{{p_pp, p_pm}, {p_mp, p_mm}}} {}

    /// P(a = a_outcome | b = b_outcome); outcomes are ±1.
    double entry(int a_outcome, int b_outcome) const {
        detail_require_outcome(a_outcome);
        detail_require_outcome(b_outcome);
        return entries_[a_outcome > 0 ? 0 : 1][b_outcome > 0 ? 0 : 1];
    }

    double row_sum(int a_outcome) const {
        detail_require_outcome(a_outcome);
        const auto& row = entries_[a_outcome > 0 ? 0 : 1];
        return row[0] + row[1];
    }

    double column_sum(int b_outcome) const {
        detail_require_outcome(b_outcome);
        const int j = b_outcome > 0 ? 0 : 1;
        return entries_[0][j] + entries_[1][j];
    }

  private:
    static void detail_require_outcome(int v) {
        if (v != 1 && v != -1) {
            throw OutOfRange("outcome must be +1 or -1, got " + std::to_string(v));
        }
    }

    std::array<std::array<double, 2>, 2> entries_;
};

inline ConditionalMatrix quantum_conditional(const SpinObservable& a, const SpinObservable& b) {
    const double half = 0.5 * (a.theta() - b.theta());
    const double c = std::cos(half);
    const double s = std::sin(half);
    const double c2 = c * c;
    const double s2 = s * s;
    return ConditionalMatrix(c2, s2, s2, c2);
}

/// Born weight |⟨φ_outcome(θ), state⟩|² of observing `outcome`.
inline double born_probability(const QubitState& state, const SpinObservable& obs, int outcome) {
    return transition_probability(eigenvector(obs, outcome), state);
}

/**
 * Projection-postulate collapse: after observing `outcome` the state becomes
 * the corresponding renormalized eigenvector — for this nondegenerate family
 * exactly the canonical eigenvector of eigenpairs(). Collapsing onto an
 * outcome of (numerically) zero probability is undefined.
 */
inline QubitState collapse(const QubitState& state, const SpinObservable& obs, int outcome) {
    if (born_probability(state, obs, outcome) <= kQuantumTol) {
        throw ZeroAmplitudeOutcome("collapse onto outcome " + std::to_string(outcome) +
                                   " with zero amplitude");
    }
    return eigenvector(obs, outcome);
}

}  // namespace belllab

#endif  // BELLLAB_QUBIT_HPP
