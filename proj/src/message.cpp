#include "whtrunc/message.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

namespace whtrunc {

void require_power_of_two(std::size_t q, const char* what) {
    if (!is_power_of_two(q)) {
        throw std::invalid_argument(std::string(what) + ": length " + std::to_string(q) +
                                    " is not a power of two");
    }
}

DenseVector::DenseVector(std::size_t q, double fill) : values_(q, fill) {
    require_power_of_two(q, "DenseVector");
}

DenseVector::DenseVector(std::vector<double> values) : values_(std::move(values)) {
    require_power_of_two(values_.size(), "DenseVector");
}

double DenseVector::sum() const noexcept {
    return std::accumulate(values_.begin(), values_.end(), 0.0);
}

TruncatedMessage::TruncatedMessage(Domain d, std::size_t q, std::vector<Symbol> support,
                                   std::vector<double> values, std::optional<double> lambda0)
    : domain_(d), q_(q), lambda0_(lambda0) {
    require_power_of_two(q, "TruncatedMessage");
    if (support.size() != values.size()) {
        throw std::invalid_argument("TruncatedMessage: support and values differ in length");
    }
    if (support.empty() || support.size() > q) {
        throw std::invalid_argument("TruncatedMessage: support size must be in [1, q]");
    }

    std::vector<std::size_t> order(support.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return support[a] < support[b]; });
    support_.reserve(order.size());
    values_.reserve(order.size());
    for (std::size_t k : order) {
        if (support[k] >= q) {
            throw std::invalid_argument("TruncatedMessage: symbol " + std::to_string(support[k]) +
                                        " outside [0, q)");
        }
        if (!support_.empty() && support_.back() == support[k]) {
            throw std::invalid_argument("TruncatedMessage: duplicate symbol " +
                                        std::to_string(support[k]));
        }
        support_.push_back(support[k]);
        values_.push_back(values[k]);
    }

    if (d == Domain::probability) {
        double total = 0.0;
        for (double v : values_) {
            if (!(v >= 0.0 && v <= 1.0)) {
                throw std::invalid_argument("TruncatedMessage: probability outside [0, 1]");
            }
            total += v;
        }
        if (total > 1.0 + kMassEpsilon) {
            throw std::invalid_argument("TruncatedMessage: probabilities sum above 1");
        }
    } else {
        for (double v : values_) {
            if (!std::isfinite(v)) {
                throw std::invalid_argument("TruncatedMessage: non-finite log value");
            }
        }
    }
}

TruncatedMessage TruncatedMessage::probability(std::size_t q, std::vector<Symbol> support,
                                               std::vector<double> values) {
    return TruncatedMessage(Domain::probability, q, std::move(support), std::move(values),
                            std::nullopt);
}

TruncatedMessage TruncatedMessage::log(std::size_t q, std::vector<Symbol> support,
                                       std::vector<double> values, std::optional<double> lambda0) {
    return TruncatedMessage(Domain::log, q, std::move(support), std::move(values), lambda0);
}

std::optional<double> TruncatedMessage::value_of(Symbol s) const {
    auto it = std::lower_bound(support_.begin(), support_.end(), s);
    if (it == support_.end() || *it != s) return std::nullopt;
    return values_[static_cast<std::size_t>(it - support_.begin())];
}

double TruncatedMessage::tail_mass() const {
    if (domain_ != Domain::probability) {
        throw std::logic_error("tail_mass: log-domain message has no defined tail mass");
    }
    return 1.0 - std::accumulate(values_.begin(), values_.end(), 0.0);
}

DenseVector complete_with_tail(const TruncatedMessage& t) {
    if (t.domain() != Domain::probability) {
        throw std::invalid_argument("complete_with_tail: message must be in the probability domain");
    }
    const std::size_t q = t.alphabet_size();
    const double tail = t.tail_mass();
    if (tail < -kMassEpsilon) {
        throw std::invalid_argument("complete_with_tail: negative tail mass");
    }

    DenseVector out(q);
    if (t.kept() == q) {
        if (std::abs(tail) > kMassEpsilon) {
            throw std::invalid_argument("complete_with_tail: full-support message does not sum to 1");
        }
        for (std::size_t k = 0; k < q; ++k) out[t.support()[k]] = t.values()[k];
        return out;
    }

    const double p0 = std::max(tail, 0.0) / static_cast<double>(q - t.kept());
    for (std::size_t i = 0; i < q; ++i) out[i] = p0;
    for (std::size_t k = 0; k < t.kept(); ++k) out[t.support()[k]] = t.values()[k];
    return out;
}

UniformSplit split_uniform(const DenseVector& m, std::span<const Symbol> support) {
    const std::size_t q = m.size();
    std::vector<bool> on_support(q, false);
    for (Symbol s : support) {
        if (s >= q) throw std::invalid_argument("split_uniform: symbol outside [0, q)");
        on_support[s] = true;
    }

    std::optional<double> tail;
    for (std::size_t j = 0; j < q; ++j) {
        if (on_support[j]) continue;
        if (!tail) {
            tail = m[j];
        } else if (std::abs(m[j] - *tail) > kMassEpsilon) {
            throw std::invalid_argument("split_uniform: off-support entries are not uniform");
        }
    }

    UniformSplit out{DenseVector(q, tail.value_or(0.0)), DenseVector(q), tail.value_or(0.0)};
    for (std::size_t i = 0; i < q; ++i) {
        if (on_support[i]) out.sparse[i] = m[i] - out.tail;
    }
    return out;
}

TruncatedMessage to_log(const TruncatedMessage& t, std::optional<double> lambda0) {
    if (t.domain() != Domain::probability) {
        throw std::invalid_argument("to_log: message must be in the probability domain");
    }
    std::vector<double> logs;
    logs.reserve(t.kept());
    for (double p : t.values()) {
        if (!(p > 0.0)) throw std::invalid_argument("to_log: probability must be strictly positive");
        logs.push_back(std::log(p));
    }
    const double offset = lambda0.value_or(-*std::max_element(logs.begin(), logs.end()));
    for (double& l : logs) l += offset;
    return TruncatedMessage::log(t.alphabet_size(),
                                 std::vector<Symbol>(t.support().begin(), t.support().end()),
                                 std::move(logs), offset);
}

TruncatedMessage to_prob(const TruncatedMessage& t) {
    if (t.domain() != Domain::log) {
        throw std::invalid_argument("to_prob: message must be in the log domain");
    }
    const double peak = *std::max_element(t.values().begin(), t.values().end());
    std::vector<double> probs;
    probs.reserve(t.kept());
    double total = 0.0;
    for (double l : t.values()) {
        probs.push_back(std::exp(l - peak));
        total += probs.back();
    }
    for (double& p : probs) p /= total;
    return TruncatedMessage::probability(
        t.alphabet_size(), std::vector<Symbol>(t.support().begin(), t.support().end()),
        std::move(probs));
}

TruncatedMessage truncate(const DenseVector& m, std::size_t q_keep) {
    const std::size_t q = m.size();
    if (q_keep < 1 || q_keep > q) {
        throw std::invalid_argument("truncate: q_keep must be in [1, q]");
    }
    for (double v : m.values()) {
        if (!(v >= 0.0)) throw std::invalid_argument("truncate: negative entry");
    }

    std::vector<Symbol> order(q);
    std::iota(order.begin(), order.end(), Symbol{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](Symbol a, Symbol b) { return m[a] > m[b]; });
    order.resize(q_keep);
    std::sort(order.begin(), order.end());

    std::vector<double> kept;
    kept.reserve(q_keep);
    for (Symbol s : order) kept.push_back(m[s]);
    return TruncatedMessage::probability(q, std::move(order), std::move(kept));
}

}  // namespace whtrunc
