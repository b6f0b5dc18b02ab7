#ifndef BELLLAB_FEASIBILITY_HPP
#define BELLLAB_FEASIBILITY_HPP

#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "belllab/errors.hpp"
#include "belllab/prob_space.hpp"
#include "belllab/qubit.hpp"
#include "belllab/rational.hpp"

namespace belllab {

/**
 * Pairwise (+1,+1) joint-probability targets for three ±1 observables a, b, c
 * whose marginals are all pinned at 1/2. Unbiased marginals force every
 * target into [0, 1/2]. `rounding_bound` is 0 for exact sources and
 * 1/(2·denom) when the targets were rationalized from float values.
 */
struct PairwiseTargets {
    Rational p_ab;
    Rational p_bc;
    Rational p_ac;
    Rational rounding_bound = 0;
};

/**
 * Joint distribution of three ±1 variables as exact masses on the 8 sign
 * patterns, in lexicographic order with + before -:
 *
 *     index = 4·[a=-1] + 2·[b=-1] + [c=-1]
 *
 * so index 0 is (+,+,+) and index 7 is (-,-,-).
 */
class JointDistribution8 {
  public:
    explicit JointDistribution8(std::array<Rational, 8> masses) : masses_(std::move(masses)) {
        Rational total = 0;
        for (const Rational& m : masses_) {
            if (m < 0) {
                throw NegativeWeight("mass " + belllab::to_string(m) + " is negative");
            }
            total += m;
        }
        if (total != 1) {
            throw NotNormalized("masses sum to " + belllab::to_string(total) + ", expected 1/1");
        }
    }

    static std::size_t index_of(int sign_a, int sign_b, int sign_c) {
        return (sign_a < 0 ? 4u : 0u) + (sign_b < 0 ? 2u : 0u) + (sign_c < 0 ? 1u : 0u);
    }

    /// Sign of variable `var` (0=a, 1=b, 2=c) at atom `index`.
    static int sign_at(std::size_t index, int var) {
        return (index >> (2 - var)) & 1 ? -1 : +1;
    }

    const Rational& mass(std::size_t index) const { return masses_.at(index); }
    const std::array<Rational, 8>& masses() const noexcept { return masses_; }

    /// P(var = +1).
    Rational marginal_plus(int var) const {
        Rational sum = 0;
        for (std::size_t i = 0; i < 8; ++i) {
            if (sign_at(i, var) > 0) sum += masses_[i];
        }
        return sum;
    }

    /// P(var1 = +1, var2 = +1).
    Rational pair_plus_plus(int var1, int var2) const {
        Rational sum = 0;
        for (std::size_t i = 0; i < 8; ++i) {
            if (sign_at(i, var1) > 0 && sign_at(i, var2) > 0) sum += masses_[i];
        }
        return sum;
    }

    /// The canonical 8-atom space carrying this distribution.
    FiniteProbabilitySpace as_space() const {
        return FiniteProbabilitySpace(std::vector<Rational>(masses_.begin(), masses_.end()));
    }

    /// Coordinate variable `var` on the canonical 8-atom space.
    static DichotomicVariable coordinate(int var) {
        std::vector<int> values(8);
        for (std::size_t i = 0; i < 8; ++i) values[i] = sign_at(i, var);
        return DichotomicVariable(std::move(values));
    }

  private:
    std::array<Rational, 8> masses_;
};

/**
 * One facet of the correlation polytope of three symmetric ±1 observables:
 * an image of P(x=ξ,y=υ) + P(y=-υ,z=ζ) - P(x=ξ,z=ζ) ≥ 0 under relabeling of
 * the observables and sign flips of the outcomes.
 *
 * Two equivalent representations are kept: a functional over the 8 joint
 * masses (coefficients in atom order; nonnegative on every point mass, which
 * is exactly why the inequality can never fail on an actual distribution),
 * and an affine form over the pairwise targets valid under 1/2 marginals:
 * constant + Σ target_coeffs·(p_ab, p_bc, p_ac).
 */
struct WignerFacet {
    std::string name;
    std::array<int, 8> atom_coeffs;
    Rational constant;
    std::array<int, 3> target_coeffs;
};

/// Value of the facet's affine form at the given targets; negative = violated.
inline Rational facet_value(const WignerFacet& facet, const PairwiseTargets& targets) {
    Rational value = facet.constant;
    value += facet.target_coeffs[0] * targets.p_ab;
    value += facet.target_coeffs[1] * targets.p_bc;
    value += facet.target_coeffs[2] * targets.p_ac;
    return value;
}

/// Functional over the masses; nonnegative for every distribution.
inline Rational facet_mass_value(const WignerFacet& facet, const JointDistribution8& joint) {
    Rational value = 0;
    for (std::size_t i = 0; i < 8; ++i) {
        value += facet.atom_coeffs[i] * joint.mass(i);
    }
    return value;
}

namespace detail {

// Unordered pair of variables -> target slot (0: ab, 1: bc, 2: ac).
inline int pair_slot(int u, int v) {
    const int lo = u < v ? u : v;
    const int hi = u < v ? v : u;
    if (lo == 0 && hi == 1) return 0;
    if (lo == 1 && hi == 2) return 1;
    return 2;
}

inline std::string outcome_token(int var, int sign) {
    static const char* names[3] = {"a", "b", "c"};
    return std::string(names[var]) + "=" + (sign > 0 ? "+1" : "-1");
}

}  // namespace detail

/**
 * The full facet family: the generator inequality closed under all 6
 * permutations of (a, b, c) and all 8 outcome sign flips, deduplicated by
 * the mass functional. Deterministic order, generator first. The closure
 * collapses to 4 distinct facets.
 */
inline std::vector<WignerFacet> enumerate_wigner_facets() {
    static const std::array<std::array<int, 3>, 6> kPermutations = {
        {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
    static const std::array<int, 2> kSigns = {+1, -1};

    std::vector<WignerFacet> facets;
    std::vector<std::array<int, 8>> seen;
    for (const auto& perm : kPermutations) {
        const int x = perm[0], y = perm[1], z = perm[2];
        for (int xi : kSigns) {
            for (int upsilon : kSigns) {
                for (int zeta : kSigns) {
                    WignerFacet facet;
                    for (std::size_t i = 0; i < 8; ++i) {
                        const int sx = JointDistribution8::sign_at(i, x);
                        const int sy = JointDistribution8::sign_at(i, y);
                        const int sz = JointDistribution8::sign_at(i, z);
                        facet.atom_coeffs[i] = (sx == xi && sy == upsilon) +
                                               (sy == -upsilon && sz == zeta) -
                                               (sx == xi && sz == zeta);
                    }
                    bool duplicate = false;
                    for (const auto& coeffs : seen) {
                        if (coeffs == facet.atom_coeffs) {
                            duplicate = true;
                            break;
                        }
                    }
                    if (duplicate) continue;
                    seen.push_back(facet.atom_coeffs);

                    // Affine form on targets under 1/2 marginals:
                    // equal outcome signs give p_xy, opposite give 1/2 - p_xy.
                    facet.constant = 0;
                    facet.target_coeffs = {0, 0, 0};
                    const auto add_pair = [&facet](int u, int su, int v, int sv, int weight) {
                        const int slot = detail::pair_slot(u, v);
                        if (su == sv) {
                            facet.target_coeffs[slot] += weight;
                        } else {
                            facet.target_coeffs[slot] -= weight;
                            facet.constant += Rational(weight, 2);
                        }
                    };
                    add_pair(x, xi, y, upsilon, +1);
                    add_pair(y, -upsilon, z, zeta, +1);
                    add_pair(x, xi, z, zeta, -1);

                    facet.name = "P(" + detail::outcome_token(x, xi) + "," +
                                 detail::outcome_token(y, upsilon) + ") + P(" +
                                 detail::outcome_token(y, -upsilon) + "," +
                                 detail::outcome_token(z, zeta) + ") - P(" +
                                 detail::outcome_token(x, xi) + "," +
                                 detail::outcome_token(z, zeta) + ") >= 0";
                    facets.push_back(std::move(facet));
                }
            }
        }
    }
    return facets;
}

enum class FeasibilityStatus { Feasible, Infeasible };

struct InfeasibilityCertificate {
    WignerFacet facet;
    Rational deficit;  // facet value at the targets; strictly negative
};

/**
 * Either a witness distribution reproducing the targets or a certificate
 * naming a violated facet; exactly one of the two is populated.
 */
struct FeasibilityResult {
    FeasibilityStatus status;
    std::optional<JointDistribution8> witness;
    std::optional<InfeasibilityCertificate> certificate;
};

namespace detail {

// Phase-1 simplex over exact rationals with Bland's rule: decides whether
// the system  A·m = rhs, m ≥ 0  (8 masses, 7 equality rows) has a solution
// and returns a vertex when it does. Bland's rule (lowest eligible index
// entering, lowest basic index on ratio ties) excludes cycling, and every
// tableau entry stays an exact rational, so the verdict carries no rounding
// ambiguity at all.
struct MassSystemSolution {
    bool feasible;
    std::array<Rational, 8> masses;
};

inline MassSystemSolution solve_mass_system(const std::array<std::array<int, 8>, 7>& matrix,
                                            const std::array<Rational, 7>& rhs) {
    constexpr std::size_t kRows = 7;
    constexpr std::size_t kVars = 8;
    constexpr std::size_t kCols = kVars + kRows + 1;  // masses | artificials | rhs
    constexpr std::size_t kRhs = kCols - 1;

    std::array<std::array<Rational, kCols>, kRows> tab{};
    std::array<std::size_t, kRows> basis{};
    for (std::size_t i = 0; i < kRows; ++i) {
        for (std::size_t j = 0; j < kVars; ++j) tab[i][j] = matrix[i][j];
        tab[i][kVars + i] = 1;
        tab[i][kRhs] = rhs[i];
        basis[i] = kVars + i;
    }

    // Reduced costs for minimizing the sum of artificials; obj[kRhs] holds
    // the negated objective value.
    std::array<Rational, kCols> obj{};
    for (std::size_t j = 0; j < kCols; ++j) {
        if (j >= kVars && j < kRhs) continue;
        Rational column_sum = 0;
        for (std::size_t i = 0; i < kRows; ++i) column_sum += tab[i][j];
        obj[j] = -column_sum;
    }

    while (true) {
        std::size_t entering = kCols;
        for (std::size_t j = 0; j < kRhs; ++j) {
            if (obj[j] < 0) {
                entering = j;
                break;
            }
        }
        if (entering == kCols) break;  // optimal

        std::size_t leaving = kRows;
        Rational best_ratio;
        for (std::size_t i = 0; i < kRows; ++i) {
            if (tab[i][entering] <= 0) continue;
            const Rational ratio = tab[i][kRhs] / tab[i][entering];
            if (leaving == kRows || ratio < best_ratio ||
                (ratio == best_ratio && basis[i] < basis[leaving])) {
                leaving = i;
                best_ratio = ratio;
            }
        }
        if (leaving == kRows) {
            // The phase-1 objective is bounded below by zero; an unbounded
            // column cannot occur.
            throw std::logic_error("phase-1 simplex: unbounded pivot column");
        }

        const Rational pivot = tab[leaving][entering];
        for (std::size_t j = 0; j < kCols; ++j) tab[leaving][j] /= pivot;
        for (std::size_t i = 0; i < kRows; ++i) {
            if (i == leaving || tab[i][entering] == 0) continue;
            const Rational factor = tab[i][entering];
            for (std::size_t j = 0; j < kCols; ++j) {
                tab[i][j] -= factor * tab[leaving][j];
            }
        }
        if (obj[entering] != 0) {
            const Rational factor = obj[entering];
            for (std::size_t j = 0; j < kCols; ++j) {
                obj[j] -= factor * tab[leaving][j];
            }
        }
        basis[leaving] = entering;
    }

    MassSystemSolution solution;
    solution.feasible = obj[kRhs] == 0;
    solution.masses.fill(0);
    if (solution.feasible) {
        for (std::size_t i = 0; i < kRows; ++i) {
            if (basis[i] < kVars) solution.masses[basis[i]] = tab[i][kRhs];
        }
    }
    return solution;
}

}  // namespace detail

/**
 * Decide by exact linear feasibility whether any joint distribution of three
 * symmetric ±1 observables reproduces the pairwise targets. The constraint
 * system is: masses nonnegative, total mass 1, the three marginals 1/2 and
 * the three pairwise (+1,+1) masses equal to the targets. Infeasibility is
 * certified by a violated facet from enumerate_wigner_facets(); feasibility
 * by a vertex witness.
 */
inline FeasibilityResult decide_feasibility(const PairwiseTargets& targets) {
    const Rational half(1, 2);
    for (const Rational* p : {&targets.p_ab, &targets.p_bc, &targets.p_ac}) {
        if (*p < 0 || *p > half) {
            throw OutOfRangeTarget("pairwise target " + belllab::to_string(*p) +
                                   " outside [0, 1/2]");
        }
    }

    std::array<std::array<int, 8>, 7> matrix{};
    for (std::size_t i = 0; i < 8; ++i) {
        const int sa = JointDistribution8::sign_at(i, 0);
        const int sb = JointDistribution8::sign_at(i, 1);
        const int sc = JointDistribution8::sign_at(i, 2);
        matrix[0][i] = 1;
        matrix[1][i] = sa > 0;
        matrix[2][i] = sb > 0;
        matrix[3][i] = sc > 0;
        matrix[4][i] = sa > 0 && sb > 0;
        matrix[5][i] = sb > 0 && sc > 0;
        matrix[6][i] = sa > 0 && sc > 0;
    }
    const std::array<Rational, 7> rhs = {1,    half,          half,         half,
                                         targets.p_ab, targets.p_bc, targets.p_ac};

    const auto solution = detail::solve_mass_system(matrix, rhs);

    if (solution.feasible) {
        // Exact recheck of every constraint before handing out a witness.
        for (std::size_t row = 0; row < 7; ++row) {
            Rational lhs = 0;
            for (std::size_t j = 0; j < 8; ++j) {
                if (matrix[row][j]) lhs += solution.masses[j];
            }
            if (lhs != rhs[row]) {
                throw std::logic_error("simplex witness fails an equality constraint");
            }
        }
        return FeasibilityResult{FeasibilityStatus::Feasible,
                                 JointDistribution8(solution.masses), std::nullopt};
    }

    static const std::vector<WignerFacet> facets = enumerate_wigner_facets();
    for (const WignerFacet& facet : facets) {
        const Rational value = facet_value(facet, targets);
        if (value < 0) {
            return FeasibilityResult{FeasibilityStatus::Infeasible, std::nullopt,
                                     InfeasibilityCertificate{facet, value}};
        }
    }
    // Infeasible targets always violate a facet of this family; reaching
    // this point means the solver and the facet family disagree.
    throw std::logic_error("infeasible targets violate no enumerated facet");
}

/**
 * Exact recheck of a claimed witness: total mass, 1/2 marginals, pairwise
 * targets, and — through the canonical space — that its Bayes conditionals
 * satisfy the conditional inequality.
 */
inline bool verify_witness(const JointDistribution8& witness, const PairwiseTargets& targets) {
    const Rational half(1, 2);
    if (witness.marginal_plus(0) != half || witness.marginal_plus(1) != half ||
        witness.marginal_plus(2) != half) {
        return false;
    }
    if (witness.pair_plus_plus(0, 1) != targets.p_ab ||
        witness.pair_plus_plus(1, 2) != targets.p_bc ||
        witness.pair_plus_plus(0, 2) != targets.p_ac) {
        return false;
    }

    const FiniteProbabilitySpace space = witness.as_space();
    const DichotomicVariable a = JointDistribution8::coordinate(0);
    const DichotomicVariable b = JointDistribution8::coordinate(1);
    const DichotomicVariable c = JointDistribution8::coordinate(2);
    const Rational p_a_given_b = bayes_conditional(space, a, +1, b, +1);
    const Rational p_c_given_not_b = bayes_conditional(space, c, +1, b, -1);
    const Rational p_a_given_c = bayes_conditional(space, a, +1, c, +1);
    return p_a_given_b + p_c_given_not_b >= p_a_given_c;
}

/**
 * Pairwise (+1,+1) targets of three spin projections σ(θ1), σ(θ2), σ(θ3):
 * each pair's joint is half the conditional, p_xy = cos²((θx-θy)/2) / 2,
 * rounded to the nearest multiple of 1/denom so that the downstream
 * feasibility decision is exact. The per-target rounding error is at most
 * 1/(2·denom), recorded in the result.
 */
inline PairwiseTargets targets_from_quantum(double theta1, double theta2, double theta3,
                                            std::int64_t denom) {
    if (!std::isfinite(theta1) || !std::isfinite(theta2) || !std::isfinite(theta3)) {
        throw NonFiniteAngle("angles must be finite");
    }
    if (denom < 2) {
        throw BadRange("rationalization denominator must be at least 2");
    }

    const auto pair_target = [denom](double tx, double ty) {
        const double c = std::cos(0.5 * (tx - ty));
        const double p = 0.5 * c * c;
        std::int64_t k = std::llround(p * static_cast<double>(denom));
        if (k < 0) k = 0;
        if (k > denom / 2) k = denom / 2;  // keep the nearest in-range multiple
        return Rational(BigInt(k), BigInt(denom));
    };

    PairwiseTargets targets;
    targets.p_ab = pair_target(theta1, theta2);
    targets.p_bc = pair_target(theta2, theta3);
    targets.p_ac = pair_target(theta1, theta3);
    targets.rounding_bound = Rational(BigInt(1), BigInt(2) * denom);
    return targets;
}

}  // namespace belllab

#endif  // BELLLAB_FEASIBILITY_HPP
