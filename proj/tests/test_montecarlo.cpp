#include <gtest/gtest.h>

#include <array>
#include <cmath>
#include <stdexcept>

#include "whtrunc/montecarlo.hpp"

using namespace whtrunc;

TEST(SamplePattern, ExtremeWeights) {
    Rng rng = trial_rng(1, 0);
    EXPECT_EQ(sample_pattern(16, 16, rng), PatternMask::full(16));
    EXPECT_EQ(sample_pattern(16, 0, rng), PatternMask(16));
    EXPECT_EQ(sample_pattern(16, 5, rng).weight(), 5u);
    EXPECT_THROW(sample_pattern(16, 17, rng), std::invalid_argument);
}

TEST(SamplePattern, DeterministicPerSeed) {
    Rng a = trial_rng(42, 7);
    Rng b = trial_rng(42, 7);
    Rng c = trial_rng(42, 8);
    const PatternMask pa = sample_pattern(64, 12, a);
    EXPECT_EQ(pa, sample_pattern(64, 12, b));
    EXPECT_NE(pa, sample_pattern(64, 12, c));
}

// mt19937_64 output is fixed by the standard: the 10000th draw of a
// default-constructed engine is 9981545732273789042.
TEST(Rng, StandardEngineSequence) {
    Rng rng;
    rng.discard(9999);
    EXPECT_EQ(rng(), 9981545732273789042ULL);
}

TEST(UniformBelow, StaysInRange) {
    Rng rng = trial_rng(3, 3);
    for (std::uint64_t bound : {1ull, 2ull, 3ull, 7ull, 1000ull, (1ull << 63) + 5}) {
        for (int i = 0; i < 1000; ++i) EXPECT_LT(uniform_below(rng, bound), bound);
    }
    EXPECT_THROW(uniform_below(rng, 0), std::invalid_argument);
}

// Per-position inclusion counts over 1e5 draws, q = 16, q' = 4, tested against
// the uniform law with a chi-square statistic (15 dof, critical value at
// p = 0.001 is 37.697).
TEST(SamplePattern, UniformInclusionChiSquare) {
    constexpr std::size_t q = 16;
    constexpr std::size_t k = 4;
    constexpr std::size_t draws = 100000;
    std::array<double, q> hits{};
    for (std::size_t d = 0; d < draws; ++d) {
        Rng rng = trial_rng(2024, d);
        const PatternMask m = sample_pattern(q, k, rng);
        for (std::size_t i = 0; i < q; ++i) hits[i] += m.test(i) ? 1.0 : 0.0;
    }
    const double expected = static_cast<double>(draws * k) / q;
    double chi2 = 0.0;
    for (double h : hits) {
        EXPECT_NEAR(h / draws, 0.25, 0.01);
        chi2 += (h - expected) * (h - expected) / expected;
    }
    EXPECT_LT(chi2, 37.697);
}

TEST(RunTrials, DeterministicAcrossRunsAndThreadCounts) {
    const TrialStats one = run_trials(64, 12, 5000, 99, 1);
    const TrialStats many = run_trials(64, 12, 5000, 99, 7);
    const TrialStats again = run_trials(64, 12, 5000, 99, 0);
    EXPECT_EQ(one, many);
    EXPECT_EQ(one, again);
    EXPECT_NE(one.mean_additions, run_trials(64, 12, 5000, 100, 1).mean_additions);
}

TEST(RunTrials, FullWeightIsDeterministic) {
    for (std::size_t q : {2u, 16u, 256u}) {
        const TrialStats s = run_trials(q, q, 10, 5);
        const OpCount full = dense_count(q);
        EXPECT_EQ(s.mean_additions, static_cast<double>(full.additions));
        EXPECT_EQ(s.mean_negations, static_cast<double>(full.negations));
        EXPECT_EQ(s.stderr_additions, 0.0);
        EXPECT_EQ(s.stderr_negations, 0.0);
    }
}

TEST(RunTrials, LengthFourConvergesToExact) {
    const TrialStats s = run_trials(4, 2, 10000, 17);
    EXPECT_LE(std::abs(s.mean_additions - 10.0 / 3.0), 3.0 * s.stderr_additions);
    EXPECT_LE(std::abs(s.mean_negations - 8.0 / 3.0), 3.0 * s.stderr_negations);
    EXPECT_GT(s.stderr_additions, 0.0);
    EXPECT_GE(s.mean_additions, 0.0);
    EXPECT_LE(s.mean_additions, 8.0);
}

TEST(RunTrials, RejectsBadArguments) {
    EXPECT_THROW(run_trials(64, 12, 0, 1), std::invalid_argument);
    EXPECT_THROW(run_trials(64, 65, 10, 1), std::invalid_argument);
    EXPECT_THROW(run_trials(48, 2, 10, 1), std::invalid_argument);
}

TEST(PatternCount, Binomials) {
    EXPECT_EQ(pattern_count(4, 2), 6u);
    EXPECT_EQ(pattern_count(64, 12), 3284214703056ull);
    EXPECT_EQ(pattern_count(16, 0), 1u);
    EXPECT_EQ(pattern_count(16, 17), 0u);
    EXPECT_EQ(pattern_count(256, 128), UINT64_MAX);
}

TEST(ExhaustiveMean, MatchesExactCounts) {
    for (std::size_t q : {2u, 4u, 8u, 16u}) {
        for (std::size_t k = 0; k <= q; ++k) {
            const ExpectedCounts m = exhaustive_mean(q, k);
            const ExpectedCounts e = exact_expected_counts(q, k);
            EXPECT_EQ(m.additions, e.additions) << q << " " << k;
            EXPECT_EQ(m.negations, e.negations) << q << " " << k;
        }
    }
    EXPECT_EQ(exhaustive_mean(64, 2).additions, exact_expected_counts(64, 2).additions);
}
