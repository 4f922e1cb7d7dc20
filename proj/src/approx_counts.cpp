#include "whtrunc/approx_counts.hpp"

#include <stdexcept>

#include "whtrunc/message.hpp"

namespace whtrunc {

LayerProfile layer_probabilities(std::size_t q, std::size_t q_prime) {
    require_power_of_two(q, "layer_probabilities");
    if (q < 2) throw std::invalid_argument("layer_probabilities: length must be at least 2");
    if (q_prime > q) throw std::invalid_argument("layer_probabilities: q' exceeds q");

    LayerProfile profile{q, {}};
    const unsigned layers = log2_exact(q);
    profile.layer_probs.reserve(layers);
    double p = static_cast<double>(q_prime) / static_cast<double>(q);
    for (unsigned i = 0; i < layers; ++i) {
        profile.layer_probs.push_back(p);
        const double miss = 1.0 - p;
        p = 1.0 - miss * miss;
    }
    return profile;
}

ApproxCounts approx_expected_counts(std::size_t q, std::size_t q_prime) {
    const LayerProfile profile = layer_probabilities(q, q_prime);
    const double len = static_cast<double>(q);
    ApproxCounts out;
    for (double p : profile.layer_probs) {
        out.additions += len * p * p;
        out.negations += len * p / 2.0;
    }
    return out;
}

std::vector<SweepPoint> relative_additions_sweep(std::size_t q_min, std::size_t q_max,
                                                 std::size_t q_prime) {
    require_power_of_two(q_min, "relative_additions_sweep");
    require_power_of_two(q_max, "relative_additions_sweep");
    if (q_min < 2) throw std::invalid_argument("relative_additions_sweep: q_min must be at least 2");
    if (q_max < q_min) throw std::invalid_argument("relative_additions_sweep: q_max below q_min");
    if (q_prime > q_min) throw std::invalid_argument("relative_additions_sweep: q' exceeds q_min");

    std::vector<SweepPoint> out;
    for (std::size_t q = q_min; q <= q_max; q <<= 1) {
        const unsigned stages = log2_exact(q);
        const double full = static_cast<double>(q) * stages;
        out.push_back({q, stages, approx_expected_counts(q, q_prime).additions / full});
    }
    return out;
}

}  // namespace whtrunc
