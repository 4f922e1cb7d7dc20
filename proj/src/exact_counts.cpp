#include "whtrunc/exact_counts.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

#include "whtrunc/message.hpp"

namespace whtrunc {

std::string to_string(const Rational& r) { return r.get_str(); }

double to_double(const Rational& r) { return r.get_d(); }

namespace {

mpz_class binomial(std::size_t n, std::size_t k) {
    mpz_class out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

void check_range(std::size_t q, std::size_t q_prime, const char* what) {
    require_power_of_two(q, what);
    if (q < 2) throw std::invalid_argument(std::string(what) + ": length must be at least 2");
    if (q_prime > q) throw std::invalid_argument(std::string(what) + ": q' exceeds q");
}

}  // namespace

Rational split_weight(std::size_t q, std::size_t q_left, std::size_t q_right) {
    const std::size_t half = q / 2;
    if (q_left > half || q_right > half) return Rational(0);
    Rational w(binomial(half, q_left) * binomial(half, q_right), binomial(q, q_left + q_right));
    w.canonicalize();
    return w;
}

std::vector<SplitTerm> split_terms(const ExpectationTable& table, std::size_t q,
                                   std::size_t q_prime) {
    check_range(q, q_prime, "split_terms");
    const std::size_t half = q / 2;
    const std::size_t lo = q_prime > half ? q_prime - half : 0;
    const std::size_t hi = std::min(q_prime, half);

    std::vector<SplitTerm> terms;
    terms.reserve(hi - lo + 1);
    // q_L descending to match the printed expansion tables
    for (std::size_t q_left = hi + 1; q_left-- > lo;) {
        const std::size_t q_right = q_prime - q_left;
        SplitTerm t;
        t.q_left = q_left;
        t.q_right = q_right;
        t.weight = split_weight(q, q_left, q_right);
        if (half == 1) {
            // length-1 transforms cost nothing
            t.left = {Rational(0), Rational(0)};
            t.right = {Rational(0), Rational(0)};
        } else {
            t.left = table.at(half, q_left);
            t.right = table.at(half, q_right);
        }
        t.extra_additions = (q_left > 0 && q_right > 0) ? q : 0;
        const bool trigger = table.trigger() == NegationTrigger::right_half ? q_right > 0
                                                                            : q_left > 0;
        t.extra_negations = trigger ? half : 0;
        terms.push_back(std::move(t));
    }
    return terms;
}

ExpectationTable ExpectationTable::build(std::size_t q, NegationTrigger trigger) {
    check_range(q, 0, "ExpectationTable");
    ExpectationTable table;
    table.max_length_ = q;
    table.trigger_ = trigger;

    table.levels_[2] = {
        {Rational(0), Rational(0)},
        {Rational(0), Rational(1, 2)},
        {Rational(2), Rational(1)},
    };

    // The recursion runs on integer totals over all patterns of a weight,
    // S(len, k) = C(len, k) E(len, k), so no rational is normalized until the end:
    // S(len, k) = sum C(h, q_R) S(h, q_L) + C(h, q_L) S(h, q_R) + C(h, q_L) C(h, q_R) extra.
    std::vector<mpz_class> half_binom{1, 2, 1};
    std::vector<mpz_class> sum_adds{0, 0, 2};
    std::vector<mpz_class> sum_negs{0, 1, 1};
    for (std::size_t len = 4; len <= q; len <<= 1) {
        const std::size_t half = len / 2;
        std::vector<mpz_class> adds(len + 1);
        std::vector<mpz_class> negs(len + 1);
        for (std::size_t k = 0; k <= len; ++k) {
            const std::size_t lo = k > half ? k - half : 0;
            const std::size_t hi = std::min(k, half);
            for (std::size_t l = lo; l <= hi; ++l) {
                const std::size_t r = k - l;
                const mpz_class pairs = half_binom[l] * half_binom[r];
                adds[k] += half_binom[r] * sum_adds[l] + half_binom[l] * sum_adds[r];
                negs[k] += half_binom[r] * sum_negs[l] + half_binom[l] * sum_negs[r];
                if (l > 0 && r > 0) adds[k] += pairs * static_cast<unsigned long>(len);
                const bool fires = trigger == NegationTrigger::right_half ? r > 0 : l > 0;
                if (fires) negs[k] += pairs * static_cast<unsigned long>(half);
            }
        }

        std::vector<mpz_class> binom(len + 1);
        std::vector<ExpectedCounts> level(len + 1);
        for (std::size_t k = 0; k <= len; ++k) {
            binom[k] = binomial(len, k);
            level[k].additions = Rational(adds[k], binom[k]);
            level[k].negations = Rational(negs[k], binom[k]);
            level[k].additions.canonicalize();
            level[k].negations.canonicalize();
        }
        table.levels_[len] = std::move(level);
        half_binom = std::move(binom);
        sum_adds = std::move(adds);
        sum_negs = std::move(negs);
    }
    return table;
}

const std::vector<ExpectedCounts>& ExpectationTable::level(std::size_t q) const {
    auto it = levels_.find(q);
    if (it == levels_.end()) {
        throw std::out_of_range("ExpectationTable: length " + std::to_string(q) + " not in table");
    }
    return it->second;
}

const ExpectedCounts& ExpectationTable::at(std::size_t q, std::size_t q_prime) const {
    const auto& lvl = level(q);
    if (q_prime >= lvl.size()) {
        throw std::out_of_range("ExpectationTable: q' " + std::to_string(q_prime) +
                                " exceeds length " + std::to_string(q));
    }
    return lvl[q_prime];
}

std::shared_ptr<const ExpectationTable> exact_table(std::size_t q) {
    check_range(q, 0, "exact_table");
    static std::mutex mu;
    static std::shared_ptr<const ExpectationTable> cached;

    std::lock_guard lock(mu);
    if (!cached || cached->max_length() < q) {
        cached = std::make_shared<const ExpectationTable>(ExpectationTable::build(q));
    }
    return cached;
}

ExpectedCounts exact_expected_counts(std::size_t q, std::size_t q_prime) {
    check_range(q, q_prime, "exact_expected_counts");
    return exact_table(q)->at(q, q_prime);
}

}  // namespace whtrunc
