#pragma once

// Truncated and full-length belief-propagation messages over an alphabet of
// q = 2^m symbols, in the probability and log domains.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace whtrunc {

using Symbol = std::uint32_t;

/// Tolerance for probability-mass checks.
inline constexpr double kMassEpsilon = 1e-12;

/// True when n is a non-zero power of two.
constexpr bool is_power_of_two(std::size_t n) noexcept {
    return n != 0 && (n & (n - 1)) == 0;
}

/// log2 of a power of two.
constexpr unsigned log2_exact(std::size_t n) noexcept {
    unsigned k = 0;
    while ((std::size_t{1} << k) < n) ++k;
    return k;
}

/// Throws std::invalid_argument unless q is a power of two.
void require_power_of_two(std::size_t q, const char* what);

enum class Domain { probability, log };

/// A length-q real vector: a full probability message or a WH-domain spectrum.
class DenseVector {
public:
    DenseVector() = default;
    explicit DenseVector(std::size_t q, double fill = 0.0);
    explicit DenseVector(std::vector<double> values);

    std::size_t alphabet_size() const noexcept { return values_.size(); }
    std::size_t size() const noexcept { return values_.size(); }

    double operator[](std::size_t i) const { return values_[i]; }
    double& operator[](std::size_t i) { return values_[i]; }

    std::span<const double> values() const noexcept { return values_; }
    std::span<double> values() noexcept { return values_; }

    double sum() const noexcept;

    friend bool operator==(const DenseVector&, const DenseVector&) = default;

private:
    std::vector<double> values_;
};

/// A message storing values only for a support set T of symbols. In the
/// probability domain the missing symbols share the leftover mass uniformly.
class TruncatedMessage {
public:
    /// Entries are sorted by symbol; duplicates, out-of-range symbols and
    /// values violating the domain invariants are rejected.
    static TruncatedMessage probability(std::size_t q, std::vector<Symbol> support,
                                        std::vector<double> values);
    static TruncatedMessage log(std::size_t q, std::vector<Symbol> support,
                                std::vector<double> values,
                                std::optional<double> lambda0 = std::nullopt);

    Domain domain() const noexcept { return domain_; }
    std::size_t alphabet_size() const noexcept { return q_; }
    /// Number of retained entries (q').
    std::size_t kept() const noexcept { return support_.size(); }
    std::span<const Symbol> support() const noexcept { return support_; }
    std::span<const double> values() const noexcept { return values_; }
    /// The additive constant used when the message was moved to the log domain, if known.
    std::optional<double> lambda0() const noexcept { return lambda0_; }

    /// Value stored for a symbol, or nullopt when the symbol is in the tail.
    std::optional<double> value_of(Symbol s) const;

    /// 1 - sum of kept values (probability domain only).
    double tail_mass() const;

private:
    TruncatedMessage(Domain d, std::size_t q, std::vector<Symbol> support,
                     std::vector<double> values, std::optional<double> lambda0);

    Domain domain_ = Domain::probability;
    std::size_t q_ = 0;
    std::vector<Symbol> support_;
    std::vector<double> values_;
    std::optional<double> lambda0_;
};

/// Full-length message with every missing symbol set to the uniform tail value
/// p0 = (1 - sum kept) / (q - |T|).
DenseVector complete_with_tail(const TruncatedMessage& t);

struct UniformSplit {
    DenseVector uniform;  // every entry equals the tail value
    DenseVector sparse;   // m - tail on the support, 0 elsewhere
    double tail = 0.0;
};

/// Decomposes m into a constant vector plus a vector that is zero off the support.
UniformSplit split_uniform(const DenseVector& m, std::span<const Symbol> support);

/// ln(p) + lambda0 per entry. Without lambda0 the constant -max ln(p) is used,
/// so every log value is <= 0.
TruncatedMessage to_log(const TruncatedMessage& t, std::optional<double> lambda0 = std::nullopt);

/// Normalized exp over the support.
TruncatedMessage to_prob(const TruncatedMessage& t);

/// Keeps the q_keep largest entries; ties go to the lower symbol index.
TruncatedMessage truncate(const DenseVector& m, std::size_t q_keep);

}  // namespace whtrunc
