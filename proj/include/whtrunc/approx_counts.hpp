#pragma once

// Approximate expected operation counts: inputs are modelled as a Bernoulli
// process with p = q'/q and each layer is assumed to see Bernoulli inputs.

#include <cstddef>
#include <vector>

namespace whtrunc {

struct LayerProfile {
    std::size_t q = 0;
    /// Probability that an input of layer i (1-based in the recursion) is non-zero.
    std::vector<double> layer_probs;
};

LayerProfile layer_probabilities(std::size_t q, std::size_t q_prime);

struct ApproxCounts {
    double additions = 0.0;
    double negations = 0.0;
};

/// Sum over layers of q p_i^2 additions and q p_i / 2 negations.
ApproxCounts approx_expected_counts(std::size_t q, std::size_t q_prime);

struct SweepPoint {
    std::size_t q = 0;
    unsigned log2_q = 0;
    double ratio = 0.0;  // approximate additions / (q log2 q)
};

std::vector<SweepPoint> relative_additions_sweep(std::size_t q_min, std::size_t q_max,
                                                 std::size_t q_prime);

}  // namespace whtrunc
