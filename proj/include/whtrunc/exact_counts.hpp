#pragma once

// Exact expected operation counts of the sparse fast Walsh-Hadamard transform
// when the q' non-zero inputs form a uniformly random pattern of fixed weight.
//
// A length-q transform merges two half transforms. With q_L and q_R non-zero
// inputs in the halves (hypergeometric given q'), the merge costs q additions
// when both halves are non-zero and q/2 negations when the right half is.

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace whtrunc {

using Rational = mpq_class;

std::string to_string(const Rational& r);
double to_double(const Rational& r);

struct ExpectedCounts {
    Rational additions;
    Rational negations;
};

/// Which half must be non-zero for the merge to need q/2 negations. The right
/// half is what the butterfly network actually does; the left-half variant is
/// kept for comparison since both give the same expectations.
enum class NegationTrigger { right_half, left_half };

/// C(q/2, q_L) C(q/2, q_R) / C(q, q_L + q_R).
Rational split_weight(std::size_t q, std::size_t q_left, std::size_t q_right);

/// Expectations for every power-of-two length 2..q and every weight 0..length.
class ExpectationTable {
public:
    static ExpectationTable build(std::size_t q,
                                  NegationTrigger trigger = NegationTrigger::right_half);

    std::size_t max_length() const noexcept { return max_length_; }
    NegationTrigger trigger() const noexcept { return trigger_; }

    /// Throws std::out_of_range for lengths or weights not in the table.
    const ExpectedCounts& at(std::size_t q, std::size_t q_prime) const;
    const std::vector<ExpectedCounts>& level(std::size_t q) const;

private:
    std::size_t max_length_ = 0;
    NegationTrigger trigger_ = NegationTrigger::right_half;
    std::map<std::size_t, std::vector<ExpectedCounts>> levels_;
};

/// One (q_L, q_R) term of the expansion of E[.|q, q'].
struct SplitTerm {
    std::size_t q_left = 0;
    std::size_t q_right = 0;
    Rational weight;
    ExpectedCounts left;
    ExpectedCounts right;
    std::uint64_t extra_additions = 0;
    std::uint64_t extra_negations = 0;
};

/// The terms whose weighted sum gives E[.|q, q']; the table must contain q/2.
std::vector<SplitTerm> split_terms(const ExpectationTable& table, std::size_t q,
                                   std::size_t q_prime);

/// Memoized table shared across callers; safe to call from several threads.
std::shared_ptr<const ExpectationTable> exact_table(std::size_t q);

ExpectedCounts exact_expected_counts(std::size_t q, std::size_t q_prime);

}  // namespace whtrunc
