#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <random>

#include "belllab/feasibility.hpp"
#include "belllab/inequality.hpp"
#include "support.hpp"

using namespace belllab;
using Catch::Matchers::WithinAbs;

namespace {

constexpr double kPi = 3.14159265358979323846;

PairwiseTargets make_targets(Rational ab, Rational bc, Rational ac) {
    return PairwiseTargets{std::move(ab), std::move(bc), std::move(ac), 0};
}

/// Facet check used as the second route in the equivalence tests.
bool all_facets_nonnegative(const PairwiseTargets& targets) {
    static const auto facets = enumerate_wigner_facets();
    return std::all_of(facets.begin(), facets.end(), [&targets](const WignerFacet& facet) {
        return facet_value(facet, targets) >= 0;
    });
}

}  // namespace

TEST_CASE("joint distribution indexing and validation") {
    CHECK(JointDistribution8::index_of(+1, +1, +1) == 0);
    CHECK(JointDistribution8::index_of(+1, +1, -1) == 1);
    CHECK(JointDistribution8::index_of(-1, -1, +1) == 6);
    CHECK(JointDistribution8::index_of(-1, -1, -1) == 7);
    CHECK(JointDistribution8::sign_at(2, 1) == -1);  // (+,-,+)
    CHECK(JointDistribution8::sign_at(2, 0) == +1);

    std::array<Rational, 8> masses{};
    masses[0] = Rational(1, 2);
    masses[7] = Rational(1, 2);
    const JointDistribution8 joint(masses);
    CHECK(joint.marginal_plus(0) == Rational(1, 2));
    CHECK(joint.pair_plus_plus(0, 1) == Rational(1, 2));
    CHECK(joint.pair_plus_plus(1, 2) == Rational(1, 2));

    masses[0] = Rational(1, 3);
    CHECK_THROWS_AS(JointDistribution8(masses), NotNormalized);
    masses[0] = Rational(3, 2);
    masses[7] = Rational(-1, 2);
    CHECK_THROWS_AS(JointDistribution8(masses), NegativeWeight);
}

TEST_CASE("facet family") {
    const auto facets = enumerate_wigner_facets();

    SECTION("the 48 symmetry images collapse to 4 distinct functionals") {
        CHECK(facets.size() == 4);
    }
    SECTION("the generator inequality comes first") {
        // P(a=+1,b=+1) + P(b=-1,c=+1) - P(a=+1,c=+1) reduces to m(++-) + m(--+).
        CHECK(facets[0].atom_coeffs == std::array<int, 8>{0, 1, 0, 0, 0, 0, 1, 0});
        CHECK(facets[0].constant == Rational(1, 2));
        CHECK(facets[0].target_coeffs == std::array<int, 3>{1, -1, -1});
        CHECK(facets[0].name ==
              "P(a=+1,b=+1) + P(b=-1,c=+1) - P(a=+1,c=+1) >= 0");
    }
    SECTION("every functional is nonnegative on all eight point masses") {
        for (const auto& facet : facets) {
            for (std::size_t atom = 0; atom < 8; ++atom) {
                std::array<Rational, 8> masses{};
                masses[atom] = 1;
                CHECK(facet_mass_value(facet, JointDistribution8(masses)) >= 0);
            }
        }
    }
    SECTION("closed under swapping a and c") {
        for (const auto& facet : facets) {
            std::array<int, 8> swapped{};
            for (std::size_t i = 0; i < 8; ++i) {
                const std::size_t j = ((i & 1) << 2) | (i & 2) | (i >> 2);  // swap a and c bits
                swapped[j] = facet.atom_coeffs[i];
            }
            CHECK(std::any_of(facets.begin(), facets.end(), [&swapped](const WignerFacet& g) {
                return g.atom_coeffs == swapped;
            }));
        }
    }
    SECTION("mass functionals are nonnegative on random distributions") {
        std::mt19937_64 rng(31);
        for (int trial = 0; trial < 300; ++trial) {
            std::array<std::uint64_t, 8> raw{};
            std::uint64_t total = 0;
            for (auto& k : raw) {
                k = (rng() >> 48) + 1;
                total += k;
            }
            std::array<Rational, 8> masses;
            for (std::size_t i = 0; i < 8; ++i) masses[i] = Rational(raw[i], total);
            const JointDistribution8 joint(masses);
            for (const auto& facet : facets) {
                CHECK(facet_mass_value(facet, joint) >= 0);
            }
        }
    }
}

TEST_CASE("feasible target triples") {
    SECTION("perfect correlation forces the two-point witness") {
        const auto result =
            decide_feasibility(make_targets(Rational(1, 2), Rational(1, 2), Rational(1, 2)));
        REQUIRE(result.status == FeasibilityStatus::Feasible);
        REQUIRE(result.witness.has_value());
        CHECK(result.witness->mass(0) == Rational(1, 2));
        CHECK(result.witness->mass(7) == Rational(1, 2));
        for (std::size_t i = 1; i < 7; ++i) CHECK(result.witness->mass(i) == 0);
        CHECK(verify_witness(*result.witness,
                             make_targets(Rational(1, 2), Rational(1, 2), Rational(1, 2))));
        CHECK_FALSE(result.certificate.has_value());
    }
    SECTION("independent fair variables") {
        const auto targets = make_targets(Rational(1, 4), Rational(1, 4), Rational(1, 4));
        const auto result = decide_feasibility(targets);
        REQUIRE(result.status == FeasibilityStatus::Feasible);
        CHECK(verify_witness(*result.witness, targets));
    }
    SECTION("targets out of range are rejected") {
        CHECK_THROWS_AS(decide_feasibility(make_targets(Rational(3, 4), 0, 0)),
                        OutOfRangeTarget);
        CHECK_THROWS_AS(decide_feasibility(make_targets(Rational(-1, 10), 0, 0)),
                        OutOfRangeTarget);
    }
}

TEST_CASE("quantum targets") {
    SECTION("identical angles saturate every pair") {
        const auto targets = targets_from_quantum(0.7, 0.7, 0.7, 1000000);
        CHECK(targets.p_ab == Rational(1, 2));
        CHECK(targets.p_bc == Rational(1, 2));
        CHECK(targets.p_ac == Rational(1, 2));
        CHECK(targets.rounding_bound == Rational(1, 2000000));
    }
    SECTION("anti-aligned pair has zero joint mass") {
        const auto targets = targets_from_quantum(0.0, kPi, 1.0, 1000000);
        CHECK(targets.p_ab == 0);
    }
    SECTION("the pi/9 family, rationalized at denom 10^6") {
        // Halves of cos²60°, cos²40°, cos²20°: 0.125, 0.29341204..., 0.44151111...
        const auto targets = targets_from_quantum(0.0, 6 * kPi / 9, 2 * kPi / 9, 1000000);
        CHECK(targets.p_ab == Rational(125000, 1000000));
        CHECK(targets.p_bc == Rational(293412, 1000000));
        CHECK(targets.p_ac == Rational(441511, 1000000));
    }
    SECTION("argument validation") {
        CHECK_THROWS_AS(targets_from_quantum(std::nan(""), 0.0, 0.0, 100), NonFiniteAngle);
        CHECK_THROWS_AS(targets_from_quantum(0.0, 0.0, 0.0, 1), BadRange);
    }
}

TEST_CASE("the pi/9 family is infeasible with the generator facet as certificate") {
    const auto targets = targets_from_quantum(0.0, 6 * kPi / 9, 2 * kPi / 9, 1000000);
    const auto result = decide_feasibility(targets);

    REQUIRE(result.status == FeasibilityStatus::Infeasible);
    REQUIRE(result.certificate.has_value());
    CHECK_FALSE(result.witness.has_value());

    // 1/8 + 1/2 - 293412/10^6 - 441511/10^6
    CHECK(result.certificate->deficit == Rational(-109923, 1000000));
    CHECK(result.certificate->facet.name ==
          "P(a=+1,b=+1) + P(b=-1,c=+1) - P(a=+1,c=+1) >= 0");

    // The verdict is robust: the deficit dwarfs the rationalization error.
    Rational magnitude = -result.certificate->deficit;
    CHECK(magnitude > targets.rounding_bound);
    CHECK(magnitude > 3 * targets.rounding_bound);
}

TEST_CASE("the pi/2 family is feasible") {
    const auto targets =
        targets_from_quantum(0.0, 6 * kPi / 2, 2 * kPi / 2, 1000000);
    CHECK(targets.p_ab == 0);
    CHECK(targets.p_bc == Rational(1, 2));
    CHECK(targets.p_ac == 0);
    const auto result = decide_feasibility(targets);
    REQUIRE(result.status == FeasibilityStatus::Feasible);
    CHECK(verify_witness(*result.witness, targets));
}

TEST_CASE("feasibility decision matches the quantum inequality verdict") {
    // On the (0, 6t, 2t) family, infeasibility of the rationalized targets
    // must track the sign of f(t) wherever |f| safely exceeds the
    // rationalization error.
    for (double theta : {0.05, 0.15, 0.25, 0.30, 0.34, 0.60, 0.70, 0.80, 1.0, 1.3}) {
        const double f = trig_specialization(theta);
        REQUIRE(std::abs(f) > 1e-3);
        const auto targets =
            targets_from_quantum(0.0, 6.0 * theta, 2.0 * theta, 1000000);
        const auto result = decide_feasibility(targets);
        CHECK((result.status == FeasibilityStatus::Infeasible) == (f < 0.0));
    }
}

TEST_CASE("verify_witness rejects mismatches") {
    SECTION("uniform masses do not reproduce perfect correlation") {
        std::array<Rational, 8> masses;
        masses.fill(Rational(1, 8));
        CHECK_FALSE(verify_witness(JointDistribution8(masses),
                                   make_targets(Rational(1, 2), Rational(1, 2), Rational(1, 2))));
    }
    SECTION("tampered witness fails the exact recheck") {
        const auto targets = make_targets(Rational(1, 4), Rational(1, 4), Rational(1, 4));
        const auto result = decide_feasibility(targets);
        REQUIRE(result.status == FeasibilityStatus::Feasible);
        auto masses = result.witness->masses();
        // Move mass between antipodal atoms; totals stay 1 but pairs shift.
        REQUIRE(masses[0] >= Rational(1, 16));
        masses[0] -= Rational(1, 16);
        masses[7] += Rational(1, 16);
        CHECK_FALSE(verify_witness(JointDistribution8(masses), targets));
    }
}

TEST_CASE("decision is invariant under relabeling the observables") {
    // Permuting (a,b,c) permutes the pairwise targets; the verdict must not move.
    static const std::array<std::array<int, 3>, 6> perms = {
        {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
    const auto slot = [](int u, int v) {
        const int lo = std::min(u, v), hi = std::max(u, v);
        if (lo == 0 && hi == 1) return 0;
        if (lo == 1 && hi == 2) return 1;
        return 2;
    };

    std::mt19937_64 rng(37);
    for (int trial = 0; trial < 60; ++trial) {
        const std::array<Rational, 3> base = {Rational(rng() % 51, 100), Rational(rng() % 51, 100),
                                              Rational(rng() % 51, 100)};
        const auto verdict =
            decide_feasibility(make_targets(base[0], base[1], base[2])).status;
        for (const auto& perm : perms) {
            const std::array<Rational, 3> permuted = {base[slot(perm[0], perm[1])],
                                                      base[slot(perm[1], perm[2])],
                                                      base[slot(perm[0], perm[2])]};
            CHECK(decide_feasibility(make_targets(permuted[0], permuted[1], permuted[2])).status ==
                  verdict);
        }
    }
}

TEST_CASE("feasibility verdict equals facet nonnegativity on a coarse exact grid") {
    // Both routes, all 21^3 target triples at denominator 40 (step 1/40 on
    // the conditional scale, so joints step 1/80 over [0, 1/2]).
    for (int i = 0; i <= 20; ++i) {
        for (int j = 0; j <= 20; ++j) {
            for (int k = 0; k <= 20; ++k) {
                const auto targets =
                    make_targets(Rational(i, 40), Rational(j, 40), Rational(k, 40));
                const bool lp_feasible =
                    decide_feasibility(targets).status == FeasibilityStatus::Feasible;
                CHECK(lp_feasible == all_facets_nonnegative(targets));
            }
        }
    }
}

TEST_CASE("feasible results always carry verifying witnesses") {
    std::mt19937_64 rng(41);
    int feasible_seen = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const auto targets = make_targets(Rational(rng() % 51, 100), Rational(rng() % 51, 100),
                                          Rational(rng() % 51, 100));
        const auto result = decide_feasibility(targets);
        if (result.status == FeasibilityStatus::Feasible) {
            ++feasible_seen;
            CHECK(verify_witness(*result.witness, targets));
        } else {
            CHECK(result.certificate->deficit < 0);
            CHECK(facet_value(result.certificate->facet, targets) ==
                  result.certificate->deficit);
        }
    }
    CHECK(feasible_seen > 0);
}
