#pragma once

// XOR-group convolution of messages over GF(2^m), (a * b)[k] = sum_i a[i] b[i ^ k],
// computed directly and through the Walsh-Hadamard domain, plus the check-node
// and variable-node updates built from it.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "whtrunc/message.hpp"
#include "whtrunc/wht.hpp"

namespace whtrunc {

/// Operation tally of one node update or one convolution strategy. Values are
/// expectations where the strategy depends on a random input pattern.
struct CostModel {
    std::string label;
    double multiplications = 0.0;
    double additions = 0.0;
    double negations = 0.0;
};

/// Brute-force O(q^2) reference.
DenseVector xor_convolve_direct(const DenseVector& a, const DenseVector& b);

struct ConvolutionCost {
    std::vector<OpCount> forward;  // one per input
    std::uint64_t multiplications = 0;
    OpCount inverse;

    /// Additions and negations over all stages.
    OpCount total() const;
};

struct WhtConvolution {
    DenseVector result;
    ConvolutionCost cost;
};

/// Forward transforms counted as dense transforms.
WhtConvolution xor_convolve_wht(const DenseVector& a, const DenseVector& b);

/// Forward transforms counted sparsity-aware; each input must be zero off its mask.
WhtConvolution xor_convolve_wht(const DenseVector& a, const DenseVector& b,
                                const PatternMask& mask_a, const PatternMask& mask_b);

struct CheckNodeResult {
    TruncatedMessage message;
    ConvolutionCost cost;
};

/// Tail-completes every input, convolves them all in the WH domain and keeps
/// the q_keep most likely symbols of the result.
CheckNodeResult check_node(std::span<const TruncatedMessage> messages, std::size_t q_keep);

struct VariableNodeResult {
    /// One extrinsic message per incoming edge.
    std::vector<DenseVector> extrinsic;
    CostModel cost;
};

/// Log domain: sum of channel and incoming messages, then subtract each incoming one.
VariableNodeResult variable_node_log(const TruncatedMessage& channel,
                                     std::span<const TruncatedMessage> incoming);

/// Probability domain counterpart: product followed by division.
VariableNodeResult variable_node_prob(const TruncatedMessage& channel,
                                      std::span<const TruncatedMessage> incoming);

/// Cost of the check-node convolutions for degree d_c by three strategies:
/// dense direct convolution, truncated (EMS-style) direct convolution on q'
/// entries, and the WH route with sparse forward transforms. d_c = 1 stands
/// for a single convolution of two vectors.
std::vector<CostModel> cost_compare(std::size_t q, std::size_t q_prime, std::size_t d_c);

}  // namespace whtrunc
