#pragma once

// Empirical check of the expected operation counts: average count_only over
// uniformly random weight-q' patterns, or over all of them when that is cheap.
//
// Sampling uses std::mt19937_64 (its output sequence is fixed by the C++
// standard) with trial seeds derived through std::seed_seq, and draws bounded
// integers by rejection, so results do not depend on the standard library.

#include <cstddef>
#include <cstdint>
#include <random>

#include "whtrunc/exact_counts.hpp"
#include "whtrunc/wht.hpp"

namespace whtrunc {

using Rng = std::mt19937_64;

/// Uniform integer in [0, bound) by rejection from the raw 64-bit output.
std::uint64_t uniform_below(Rng& rng, std::uint64_t bound);

/// Generator for one trial, a function of (seed, trial) only.
Rng trial_rng(std::uint64_t seed, std::uint64_t trial);

/// Uniformly random weight-q' mask by partial Fisher-Yates shuffle.
PatternMask sample_pattern(std::size_t q, std::size_t q_prime, Rng& rng);

struct TrialStats {
    std::size_t q = 0;
    std::size_t q_prime = 0;
    std::size_t trials = 0;
    double mean_additions = 0.0;
    double mean_negations = 0.0;
    double stderr_additions = 0.0;
    double stderr_negations = 0.0;
    std::uint64_t seed = 0;

    friend bool operator==(const TrialStats&, const TrialStats&) = default;
};

/// Sample means and standard errors of count_only over random masks. Trials
/// run on up to `threads` workers (0 = hardware concurrency); the result does
/// not depend on the worker count.
TrialStats run_trials(std::size_t q, std::size_t q_prime, std::size_t trials, std::uint64_t seed,
                      unsigned threads = 0);

/// Number of weight-q' masks of length q, saturating at UINT64_MAX.
std::uint64_t pattern_count(std::size_t q, std::size_t q_prime);

/// Pattern counts up to this size are enumerated instead of sampled.
inline constexpr std::uint64_t kExhaustiveLimit = 1'000'000;

/// Exact mean of count_only over every weight-q' mask.
ExpectedCounts exhaustive_mean(std::size_t q, std::size_t q_prime);

}  // namespace whtrunc
