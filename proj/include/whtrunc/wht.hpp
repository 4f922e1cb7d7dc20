#pragma once

// Fast Walsh-Hadamard transform with structural operation counting.
//
// Counting convention, per butterfly (a, b) -> (a + b, a - b):
//   both inputs non-zero : 2 additions, 1 negation
//   only b non-zero      : 0 additions, 1 negation   (outputs b, -b)
//   only a non-zero      : nothing                   (outputs a, a)
//   both zero            : nothing
// "Non-zero" is structural: it follows the input pattern and ignores
// accidental cancellation.

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "whtrunc/message.hpp"

namespace whtrunc {

struct OpCount {
    std::uint64_t additions = 0;
    std::uint64_t negations = 0;

    OpCount& operator+=(const OpCount& o) noexcept {
        additions += o.additions;
        negations += o.negations;
        return *this;
    }
    friend OpCount operator+(OpCount a, const OpCount& b) noexcept { return a += b; }
    friend bool operator==(const OpCount&, const OpCount&) = default;
};

/// Counts for the full transform of length q: q log2 q additions, (q/2) log2 q negations.
OpCount dense_count(std::size_t q);

/// Indicator vector of the structurally non-zero inputs of a transform.
class PatternMask {
public:
    explicit PatternMask(std::size_t q);
    PatternMask(std::size_t q, std::span<const Symbol> nonzero);

    static PatternMask full(std::size_t q);
    /// Non-zero wherever v[i] != 0.
    static PatternMask of(const DenseVector& v);
    /// Hexadecimal string, least-significant bit = symbol 0. An optional 0x prefix is accepted.
    static PatternMask from_hex(std::size_t q, std::string_view hex);

    std::size_t size() const noexcept { return bits_.size(); }
    std::size_t weight() const noexcept { return weight_; }
    bool test(std::size_t i) const { return bits_[i] != 0; }
    void set(std::size_t i, bool on = true);

    std::string to_hex() const;
    std::vector<Symbol> positions() const;

    friend bool operator==(const PatternMask&, const PatternMask&) = default;

private:
    std::vector<std::uint8_t> bits_;
    std::size_t weight_ = 0;
};

/// Unnormalized H_q * v via the half-split recursion.
DenseVector wht_dense(const DenseVector& v);

/// wht_dense(v) / q.
DenseVector wht_inverse(const DenseVector& v);

struct CountedTransform {
    DenseVector spectrum;
    OpCount count;
};

/// Same result as wht_dense, bit for bit, but butterflies fed by structural
/// zeros are skipped and the remaining work is tallied.
CountedTransform wht_sparse_counted(const DenseVector& sparse, const PatternMask& mask);

/// The tally wht_sparse_counted would report for any input consistent with mask.
OpCount count_only(const PatternMask& mask);

}  // namespace whtrunc
