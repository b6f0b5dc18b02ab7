#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <vector>

#include "belllab/prob_space.hpp"
#include "belllab/rational.hpp"
#include "support.hpp"

using namespace belllab;
using belllab::testing::uniform_space;
using belllab::testing::var_from_signs;

TEST_CASE("rational text form is canonical p/q") {
    CHECK(to_string(Rational(1, 2)) == "1/2");
    CHECK(to_string(Rational(0)) == "0/1");
    CHECK(to_string(Rational(-3, 4)) == "-3/4");
    CHECK(to_string(Rational(2, 4)) == "1/2");   // canonicalized
    CHECK(to_string(Rational(3, -4)) == "-3/4");  // sign moves to numerator
}

TEST_CASE("rational parsing") {
    CHECK(parse_rational("1/2") == Rational(1, 2));
    CHECK(parse_rational("-3/4") == Rational(-3, 4));
    CHECK(parse_rational("0/1") == 0);
    CHECK(parse_rational("6/8") == Rational(3, 4));
    CHECK(parse_rational("7") == 7);

    CHECK_THROWS_AS(parse_rational(""), OutOfRange);
    CHECK_THROWS_AS(parse_rational("1/0"), OutOfRange);
    CHECK_THROWS_AS(parse_rational("a/b"), OutOfRange);
    CHECK_THROWS_AS(parse_rational("1.5"), OutOfRange);
    CHECK_THROWS_AS(parse_rational("1/2/3"), OutOfRange);
}

TEST_CASE("rational serialization round-trips losslessly") {
    std::mt19937_64 rng(2024);
    for (int i = 0; i < 500; ++i) {
        const auto num = static_cast<std::int64_t>(rng()) >> 16;
        const auto den = (rng() >> 32) + 1;  // positive
        const Rational r{BigInt(num), BigInt(den)};
        CHECK(parse_rational(to_string(r)) == r);
    }
}

TEST_CASE("space construction validates weights") {
    CHECK(FiniteProbabilitySpace({Rational(1)}).atom_count() == 1);
    CHECK(FiniteProbabilitySpace({Rational(1, 2), Rational(1, 2)}).atom_count() == 2);

    CHECK_THROWS_AS(FiniteProbabilitySpace({Rational(1, 2), Rational(2, 3)}), NotNormalized);
    CHECK_THROWS_AS(FiniteProbabilitySpace({Rational(-1, 4), Rational(5, 4)}), NegativeWeight);
    CHECK_THROWS_AS(FiniteProbabilitySpace({}), NotNormalized);
}

TEST_CASE("dichotomic variables only hold plus or minus one") {
    CHECK(var_from_signs("++-").size() == 3);
    CHECK(var_from_signs("+-")[1] == -1);
    CHECK(var_from_signs("+-").signs() == "+-");
    CHECK_THROWS_AS(DichotomicVariable({1, 0, -1}), OutOfRange);
}

TEST_CASE("expectation") {
    const auto two = uniform_space(2);
    CHECK(expectation(two, var_from_signs("+-")) == 0);
    CHECK(expectation(two, var_from_signs("++")) == 1);

    const FiniteProbabilitySpace skew({Rational(1, 4), Rational(3, 4)});
    CHECK(expectation(skew, var_from_signs("+-")) == Rational(-1, 2));

    CHECK_THROWS_AS(expectation(two, var_from_signs("+-+")), DimensionMismatch);
}

TEST_CASE("covariation") {
    const auto four = uniform_space(4);
    const auto x = var_from_signs("++--");
    const auto y = var_from_signs("+-+-");
    CHECK(covariation(four, x, x) == 1);
    CHECK(covariation(four, x, x.negated()) == -1);
    CHECK(covariation(four, x, y) == 0);
}

TEST_CASE("covariation stays in [-1, 1] and is 1 on the diagonal") {
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        const auto sample = random_space_and_variables(seed, 2 + seed % 15);
        const auto& [space, vars] = sample;
        for (const auto& x : vars) {
            CHECK(covariation(space, x, x) == 1);
            for (const auto& y : vars) {
                const Rational c = covariation(space, x, y);
                CHECK(c >= -1);
                CHECK(c <= 1);
            }
        }
    }
}

TEST_CASE("joint probabilities") {
    const auto four = uniform_space(4);
    const auto x = var_from_signs("++--");
    const auto y = var_from_signs("+-+-");

    CHECK(joint_prob(four, x, +1, x, -1) == 0);  // contradictory event
    CHECK(joint_prob(four, x, +1, y, +1) == Rational(1, 4));

    const auto sure = var_from_signs("++++");
    CHECK(joint_prob(four, sure, +1, sure, +1) == 1);
}

TEST_CASE("law of total probability holds exactly") {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const auto [space, vars] = random_space_and_variables(seed, 2 + seed % 12);
        const auto& x = vars[0];
        const auto& y = vars[1];
        for (int alpha : {+1, -1}) {
            CHECK(joint_prob(space, x, alpha, y, +1) + joint_prob(space, x, alpha, y, -1) ==
                  event_probability(space, x, alpha));
        }
    }
}

TEST_CASE("bayes conditionals") {
    const auto four = uniform_space(4);
    const auto x = var_from_signs("++--");
    const auto y = var_from_signs("+-+-");

    CHECK(bayes_conditional(four, x, +1, x, +1) == 1);
    CHECK(bayes_conditional(four, x, +1, y, +1) == Rational(1, 2));

    const auto sure = var_from_signs("++++");
    CHECK_THROWS_AS(bayes_conditional(four, x, +1, sure, -1), ZeroConditioningEvent);
}

TEST_CASE("bayes consistency: conditional times marginal equals joint") {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const auto [space, vars] = random_space_and_variables(seed, 2 + seed % 12);
        const auto& x = vars[0];
        const auto& y = vars[1];
        for (int beta : {+1, -1}) {
            const Rational p_y = event_probability(space, y, beta);
            if (p_y == 0) continue;
            CHECK(bayes_conditional(space, x, +1, y, beta) * p_y ==
                  joint_prob(space, x, +1, y, beta));
        }
    }
}

TEST_CASE("symmetry predicate") {
    CHECK(is_symmetric(uniform_space(2), var_from_signs("+-")));
    CHECK(is_symmetric(uniform_space(4), var_from_signs("++--")));
    CHECK_FALSE(is_symmetric(FiniteProbabilitySpace({Rational(1, 3), Rational(2, 3)}),
                             var_from_signs("+-")));
}

TEST_CASE("seeded generator is deterministic") {
    const auto first = random_space_and_variables(0, 8);
    const auto second = random_space_and_variables(0, 8);
    CHECK(first.space.weights() == second.space.weights());
    for (int k = 0; k < 3; ++k) {
        CHECK(first.variables[k].signs() == second.variables[k].signs());
    }

    const auto other = random_space_and_variables(1, 8);
    CHECK(first.space.weights() != other.space.weights());
}

TEST_CASE("seeded generator degenerate size") {
    const auto [space, vars] = random_space_and_variables(1, 1);
    CHECK(space.atom_count() == 1);
    CHECK(space.weight(0) == 1);
    for (const auto& v : vars) CHECK(v.size() == 1);

    CHECK_THROWS_AS(random_space_and_variables(0, 0), OutOfRange);
}

TEST_CASE("seeded generator produces valid spaces") {
    for (std::uint64_t seed = 100; seed < 200; ++seed) {
        const auto [space, vars] = random_space_and_variables(seed, 1 + seed % 16);
        Rational total = 0;
        for (const auto& w : space.weights()) {
            CHECK(w >= 0);
            total += w;
        }
        CHECK(total == 1);
        for (const auto& v : vars) CHECK(v.size() == space.atom_count());
    }
}

TEST_CASE("symmetric triple generator pins all marginals at one half") {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const auto [space, vars] = belllab::testing::symmetric_triple(seed);
        for (const auto& v : vars) {
            CHECK(is_symmetric(space, v));
        }
    }
}
