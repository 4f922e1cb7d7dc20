#include <gtest/gtest.h>

#include <stdexcept>

#include "whtrunc/approx_counts.hpp"
#include "whtrunc/exact_counts.hpp"

using namespace whtrunc;

TEST(LayerProbabilities, FixedPoints) {
    for (double p : layer_probabilities(64, 64).layer_probs) EXPECT_EQ(p, 1.0);
    for (double p : layer_probabilities(64, 0).layer_probs) EXPECT_EQ(p, 0.0);
    EXPECT_EQ(layer_probabilities(64, 5).layer_probs.size(), 6u);
}

TEST(LayerProbabilities, Recursion) {
    const LayerProfile prof = layer_probabilities(64, 1);
    EXPECT_EQ(prof.layer_probs[0], 1.0 / 64.0);
    EXPECT_DOUBLE_EQ(prof.layer_probs[1], 127.0 / 4096.0);
    for (std::size_t i = 1; i < prof.layer_probs.size(); ++i) {
        const double prev = prof.layer_probs[i - 1];
        EXPECT_DOUBLE_EQ(prof.layer_probs[i], 1.0 - (1.0 - prev) * (1.0 - prev));
        EXPECT_GE(prof.layer_probs[i], prev);
        EXPECT_LE(prof.layer_probs[i], 1.0);
    }
}

TEST(LayerProbabilities, RejectsBadArguments) {
    EXPECT_THROW(layer_probabilities(48, 2), std::invalid_argument);
    EXPECT_THROW(layer_probabilities(64, 65), std::invalid_argument);
}

// Frozen from an independent evaluation of the layer sums.
TEST(ApproxCounts, SixtyFourFrozen) {
    const ApproxCounts one = approx_expected_counts(64, 1);
    EXPECT_NEAR(one.additions, 14.41663917557672, 1e-12);
    EXPECT_NEAR(one.negations, 27.028750811983322, 1e-12);
    const ApproxCounts twelve = approx_expected_counts(64, 12);
    EXPECT_NEAR(twelve.additions, 195.31126668453413, 1e-12);
    EXPECT_NEAR(twelve.negations, 123.65557916143929, 1e-12);
    const ApproxCounts full = approx_expected_counts(64, 64);
    EXPECT_EQ(full.additions, 384.0);
    EXPECT_EQ(full.negations, 192.0);
}

TEST(ApproxCounts, AgreesWithExactAtTheEnds) {
    for (std::size_t q = 2; q <= 256; q <<= 1) {
        const ApproxCounts empty = approx_expected_counts(q, 0);
        const ApproxCounts full = approx_expected_counts(q, q);
        EXPECT_EQ(empty.additions, to_double(exact_expected_counts(q, 0).additions));
        EXPECT_EQ(empty.negations, to_double(exact_expected_counts(q, 0).negations));
        EXPECT_EQ(full.additions, to_double(exact_expected_counts(q, q).additions));
        EXPECT_EQ(full.negations, to_double(exact_expected_counts(q, q).negations));
    }
}

TEST(ApproxCounts, MonotoneInWeight) {
    for (std::size_t q : {16u, 64u, 1024u}) {
        ApproxCounts prev = approx_expected_counts(q, 0);
        for (std::size_t k = 1; k <= q; ++k) {
            const ApproxCounts cur = approx_expected_counts(q, k);
            EXPECT_GE(cur.additions, prev.additions);
            EXPECT_GE(cur.negations, prev.negations);
            prev = cur;
        }
    }
}

TEST(ApproxCounts, BelowExactForSixtyFour) {
    for (std::size_t k = 2; k <= 64; ++k) {
        const ApproxCounts a = approx_expected_counts(64, k);
        const ExpectedCounts e = exact_expected_counts(64, k);
        EXPECT_LE(a.additions, to_double(e.additions) + 1e-9) << k;
        EXPECT_LE(a.negations, to_double(e.negations) + 1e-9) << k;
    }
}

TEST(RelativeSweep, DecreasingFrom16To65536) {
    const auto sweep = relative_additions_sweep(16, 65536, 12);
    ASSERT_EQ(sweep.size(), 13u);
    EXPECT_EQ(sweep.front().q, 16u);
    EXPECT_EQ(sweep.front().log2_q, 4u);
    EXPECT_EQ(sweep.back().q, 65536u);
    EXPECT_EQ(sweep.back().log2_q, 16u);
    for (std::size_t i = 1; i < sweep.size(); ++i) EXPECT_LT(sweep[i].ratio, sweep[i - 1].ratio);
    EXPECT_NEAR(sweep.front().ratio, 0.858394622860942, 1e-12);
    EXPECT_NEAR(sweep[2].ratio, 0.5086230903243076, 1e-12);
    EXPECT_NEAR(sweep.back().ratio, 0.18236571764653792, 1e-12);
}

TEST(RelativeSweep, FullWeightIsOne) {
    const auto sweep = relative_additions_sweep(16, 16, 16);
    ASSERT_EQ(sweep.size(), 1u);
    EXPECT_DOUBLE_EQ(sweep[0].ratio, 1.0);
}

TEST(RelativeSweep, RejectsWeightAboveSmallestLength) {
    EXPECT_THROW(relative_additions_sweep(16, 64, 17), std::invalid_argument);
    EXPECT_THROW(relative_additions_sweep(64, 16, 4), std::invalid_argument);
    EXPECT_THROW(relative_additions_sweep(12, 64, 4), std::invalid_argument);
}
