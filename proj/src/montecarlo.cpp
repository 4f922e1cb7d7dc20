#include "whtrunc/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <thread>
#include <vector>

namespace whtrunc {

__extension__ using u128 = unsigned __int128;

std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("uniform_below: empty range");
    // 2^64 mod bound; draws below it would bias the low residues
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
        const std::uint64_t r = rng();
        if (r >= threshold) return r % bound;
    }
}

Rng trial_rng(std::uint64_t seed, std::uint64_t trial) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)};
    return Rng(seq);
}

PatternMask sample_pattern(std::size_t q, std::size_t q_prime, Rng& rng) {
    require_power_of_two(q, "sample_pattern");
    if (q_prime > q) throw std::invalid_argument("sample_pattern: q' exceeds q");

    std::vector<Symbol> pool(q);
    std::iota(pool.begin(), pool.end(), Symbol{0});
    for (std::size_t i = 0; i < q_prime; ++i) {
        const std::size_t j = i + uniform_below(rng, q - i);
        std::swap(pool[i], pool[j]);
    }
    return PatternMask(q, std::span<const Symbol>(pool.data(), q_prime));
}

namespace {

struct Moments {
    std::uint64_t n = 0;
    std::uint64_t sum_add = 0;
    std::uint64_t sum_neg = 0;
    u128 sumsq_add = 0;
    u128 sumsq_neg = 0;

    void add(const OpCount& c) {
        ++n;
        sum_add += c.additions;
        sum_neg += c.negations;
        sumsq_add += static_cast<u128>(c.additions) * c.additions;
        sumsq_neg += static_cast<u128>(c.negations) * c.negations;
    }

    void merge(const Moments& o) {
        n += o.n;
        sum_add += o.sum_add;
        sum_neg += o.sum_neg;
        sumsq_add += o.sumsq_add;
        sumsq_neg += o.sumsq_neg;
    }
};

// Standard error of the mean from exact integer moments.
double standard_error(std::uint64_t n, std::uint64_t sum, u128 sumsq) {
    if (n < 2) return 0.0;
    const u128 s = sum;
    const u128 scaled = static_cast<u128>(n) * sumsq - s * s;
    const double variance = static_cast<double>(scaled) /
                            (static_cast<double>(n) * static_cast<double>(n - 1));
    return std::sqrt(variance / static_cast<double>(n));
}

}  // namespace

TrialStats run_trials(std::size_t q, std::size_t q_prime, std::size_t trials, std::uint64_t seed,
                      unsigned threads) {
    require_power_of_two(q, "run_trials");
    if (q_prime > q) throw std::invalid_argument("run_trials: q' exceeds q");
    if (trials < 1) throw std::invalid_argument("run_trials: need at least one trial");

    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, trials));

    // Integer moments make the reduction independent of how trials are split.
    std::vector<Moments> partial(threads);
    auto work = [&](unsigned w) {
        const std::size_t begin = trials * w / threads;
        const std::size_t end = trials * (w + 1) / threads;
        for (std::size_t t = begin; t < end; ++t) {
            Rng rng = trial_rng(seed, t);
            partial[w].add(count_only(sample_pattern(q, q_prime, rng)));
        }
    };
    {
        std::vector<std::jthread> pool;
        for (unsigned w = 1; w < threads; ++w) pool.emplace_back(work, w);
        work(0);
    }

    Moments total;
    for (const Moments& m : partial) total.merge(m);

    TrialStats stats;
    stats.q = q;
    stats.q_prime = q_prime;
    stats.trials = trials;
    stats.seed = seed;
    stats.mean_additions = static_cast<double>(total.sum_add) / static_cast<double>(total.n);
    stats.mean_negations = static_cast<double>(total.sum_neg) / static_cast<double>(total.n);
    stats.stderr_additions = standard_error(total.n, total.sum_add, total.sumsq_add);
    stats.stderr_negations = standard_error(total.n, total.sum_neg, total.sumsq_neg);
    return stats;
}

std::uint64_t pattern_count(std::size_t q, std::size_t q_prime) {
    if (q_prime > q) return 0;
    const std::size_t k = std::min(q_prime, q - q_prime);
    u128 c = 1;
    constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
    for (std::size_t i = 1; i <= k; ++i) {
        // c * (q - k + i) / i stays integral at every step
        c = c * (q - k + i) / i;
        if (c > kMax) return kMax;
    }
    return static_cast<std::uint64_t>(c);
}

ExpectedCounts exhaustive_mean(std::size_t q, std::size_t q_prime) {
    require_power_of_two(q, "exhaustive_mean");
    if (q_prime > q) throw std::invalid_argument("exhaustive_mean: q' exceeds q");

    // Lexicographic walk over index combinations.
    std::vector<Symbol> idx(q_prime);
    std::iota(idx.begin(), idx.end(), Symbol{0});
    std::uint64_t n = 0;
    std::uint64_t sum_add = 0;
    std::uint64_t sum_neg = 0;
    for (;;) {
        const OpCount c = count_only(PatternMask(q, idx));
        ++n;
        sum_add += c.additions;
        sum_neg += c.negations;

        std::size_t i = q_prime;
        while (i > 0 && idx[i - 1] == q - q_prime + i - 1) --i;
        if (i == 0) break;
        ++idx[i - 1];
        for (std::size_t j = i; j < q_prime; ++j) idx[j] = idx[j - 1] + 1;
    }

    ExpectedCounts out{Rational(mpz_class(sum_add), mpz_class(n)),
                       Rational(mpz_class(sum_neg), mpz_class(n))};
    out.additions.canonicalize();
    out.negations.canonicalize();
    return out;
}

}  // namespace whtrunc
