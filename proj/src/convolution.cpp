#include "whtrunc/convolution.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "whtrunc/exact_counts.hpp"

namespace whtrunc {

namespace {

void require_same_length(const DenseVector& a, const DenseVector& b, const char* what) {
    require_power_of_two(a.size(), what);
    if (a.size() != b.size()) {
        throw std::invalid_argument(std::string(what) + ": length mismatch");
    }
}

DenseVector pointwise_product(const DenseVector& a, const DenseVector& b) {
    DenseVector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] * b[i];
    return out;
}

std::vector<double> full_support_values(const TruncatedMessage& m, Domain domain,
                                        std::size_t q, const char* what) {
    if (m.domain() != domain) {
        throw std::invalid_argument(std::string(what) + ": message in the wrong domain");
    }
    if (m.alphabet_size() != q) {
        throw std::invalid_argument(std::string(what) + ": alphabet size mismatch");
    }
    if (m.kept() != q) {
        throw std::invalid_argument(std::string(what) + ": message must have full support");
    }
    // full support sorted ascending is exactly 0..q-1
    return {m.values().begin(), m.values().end()};
}

}  // namespace

OpCount ConvolutionCost::total() const {
    OpCount sum = inverse;
    for (const OpCount& f : forward) sum += f;
    return sum;
}

DenseVector xor_convolve_direct(const DenseVector& a, const DenseVector& b) {
    require_same_length(a, b, "xor_convolve_direct");
    const std::size_t q = a.size();
    DenseVector out(q);
    for (std::size_t k = 0; k < q; ++k) {
        double acc = 0.0;
        for (std::size_t i = 0; i < q; ++i) acc += a[i] * b[i ^ k];
        out[k] = acc;
    }
    return out;
}

WhtConvolution xor_convolve_wht(const DenseVector& a, const DenseVector& b) {
    require_same_length(a, b, "xor_convolve_wht");
    const std::size_t q = a.size();
    return xor_convolve_wht(a, b, PatternMask::full(q), PatternMask::full(q));
}

WhtConvolution xor_convolve_wht(const DenseVector& a, const DenseVector& b,
                                const PatternMask& mask_a, const PatternMask& mask_b) {
    require_same_length(a, b, "xor_convolve_wht");
    const std::size_t q = a.size();
    CountedTransform fa = wht_sparse_counted(a, mask_a);
    CountedTransform fb = wht_sparse_counted(b, mask_b);

    WhtConvolution out{wht_inverse(pointwise_product(fa.spectrum, fb.spectrum)), {}};
    out.cost.forward = {fa.count, fb.count};
    out.cost.multiplications = q;
    out.cost.inverse = dense_count(q);
    return out;
}

CheckNodeResult check_node(std::span<const TruncatedMessage> messages, std::size_t q_keep) {
    if (messages.size() < 2) throw std::invalid_argument("check_node: need at least two messages");
    const std::size_t q = messages.front().alphabet_size();
    for (const TruncatedMessage& m : messages) {
        if (m.alphabet_size() != q) throw std::invalid_argument("check_node: alphabet size mismatch");
    }
    if (q_keep < 1 || q_keep > q) throw std::invalid_argument("check_node: q_keep must be in [1, q]");

    ConvolutionCost cost;
    DenseVector product;
    for (std::size_t n = 0; n < messages.size(); ++n) {
        const TruncatedMessage& m = messages[n];
        const UniformSplit split = split_uniform(complete_with_tail(m), m.support());
        const PatternMask mask(q, m.support());
        CountedTransform f = wht_sparse_counted(split.sparse, mask);
        // The uniform part transforms to q * p0 at index 0 only.
        if (split.tail != 0.0) {
            f.spectrum[0] += static_cast<double>(q) * split.tail;
            ++cost.multiplications;
            if (mask.weight() > 0) ++f.count.additions;
        }
        cost.forward.push_back(f.count);

        if (n == 0) {
            product = std::move(f.spectrum);
        } else {
            product = pointwise_product(product, f.spectrum);
            cost.multiplications += q;
        }
    }

    // The 1/q scaling is left out of the tally; it folds into normalization.
    DenseVector full = wht_inverse(product);
    cost.inverse = dense_count(q);
    for (double& v : full.values()) {
        if (v < 0.0) {
            if (v < -kMassEpsilon) throw std::runtime_error("check_node: negative output probability");
            v = 0.0;
        }
    }
    return {truncate(full, q_keep), std::move(cost)};
}

VariableNodeResult variable_node_log(const TruncatedMessage& channel,
                                     std::span<const TruncatedMessage> incoming) {
    const std::size_t q = channel.alphabet_size();
    std::vector<double> total = full_support_values(channel, Domain::log, q, "variable_node_log");
    std::vector<std::vector<double>> inputs;
    inputs.reserve(incoming.size());
    for (const TruncatedMessage& m : incoming) {
        inputs.push_back(full_support_values(m, Domain::log, q, "variable_node_log"));
        for (std::size_t i = 0; i < q; ++i) total[i] += inputs.back()[i];
    }

    VariableNodeResult out;
    out.extrinsic.reserve(inputs.size());
    for (const auto& in : inputs) {
        DenseVector e(q);
        for (std::size_t i = 0; i < q; ++i) e[i] = total[i] - in[i];
        out.extrinsic.push_back(std::move(e));
    }
    const double d_v = static_cast<double>(incoming.size());
    const double len = static_cast<double>(q);
    // d_v additions per symbol for the total, then one subtraction per symbol
    // and edge, each a negation plus an addition.
    out.cost = {"variable_node_log", 0.0, d_v * len + d_v * len, d_v * len};
    return out;
}

VariableNodeResult variable_node_prob(const TruncatedMessage& channel,
                                      std::span<const TruncatedMessage> incoming) {
    const std::size_t q = channel.alphabet_size();
    std::vector<double> total =
        full_support_values(channel, Domain::probability, q, "variable_node_prob");
    std::vector<std::vector<double>> inputs;
    inputs.reserve(incoming.size());
    for (const TruncatedMessage& m : incoming) {
        inputs.push_back(full_support_values(m, Domain::probability, q, "variable_node_prob"));
        for (std::size_t i = 0; i < q; ++i) {
            if (inputs.back()[i] == 0.0) {
                throw std::invalid_argument("variable_node_prob: zero probability cannot be divided out");
            }
            total[i] *= inputs.back()[i];
        }
    }

    VariableNodeResult out;
    out.extrinsic.reserve(inputs.size());
    for (const auto& in : inputs) {
        DenseVector e(q);
        for (std::size_t i = 0; i < q; ++i) e[i] = total[i] / in[i];
        out.extrinsic.push_back(std::move(e));
    }
    const double d_v = static_cast<double>(incoming.size());
    const double len = static_cast<double>(q);
    // divisions are tallied as multiplications
    out.cost = {"variable_node_prob", d_v * len + d_v * len, 0.0, 0.0};
    return out;
}

std::vector<CostModel> cost_compare(std::size_t q, std::size_t q_prime, std::size_t d_c) {
    require_power_of_two(q, "cost_compare");
    if (q < 2) throw std::invalid_argument("cost_compare: length must be at least 2");
    if (q_prime > q) throw std::invalid_argument("cost_compare: q' exceeds q");
    if (d_c == 0) throw std::invalid_argument("cost_compare: d_c must be positive");

    const double len = static_cast<double>(q);
    const double kept = static_cast<double>(q_prime);
    // Each of the d_c outputs convolves d_c - 1 inputs, i.e. d_c - 2 pairwise steps.
    const double pairwise = d_c == 1 ? 1.0 : static_cast<double>(d_c) * (static_cast<double>(d_c) - 2.0);
    const double transforms = d_c == 1 ? 2.0 : (d_c >= 3 ? static_cast<double>(d_c) : 0.0);
    const double inverses = d_c == 1 ? 1.0 : (d_c >= 3 ? static_cast<double>(d_c) : 0.0);

    const ExpectedCounts sparse = exact_expected_counts(q, q_prime);
    const OpCount dense = dense_count(q);
    const double fwd_add = to_double(sparse.additions);
    const double fwd_neg = to_double(sparse.negations);
    const double inv_add = static_cast<double>(dense.additions);
    const double inv_neg = static_cast<double>(dense.negations);

    return {
        {"direct", pairwise * len * len, pairwise * len * (len - 1.0), 0.0},
        {"ems_truncated", pairwise * kept * kept, pairwise * kept * std::max(kept - 1.0, 0.0), 0.0},
        {"wh_forward_sparse", 0.0, fwd_add, fwd_neg},
        {"wh_inverse_dense", 0.0, inv_add, inv_neg},
        {"wh_route", pairwise * len, transforms * fwd_add + inverses * inv_add,
         transforms * fwd_neg + inverses * inv_neg},
    };
}

}  // namespace whtrunc
