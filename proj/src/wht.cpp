#include "whtrunc/wht.hpp"

#include <stdexcept>

namespace whtrunc {

OpCount dense_count(std::size_t q) {
    require_power_of_two(q, "dense_count");
    const std::uint64_t stages = log2_exact(q);
    return {q * stages, q / 2 * stages};
}

PatternMask::PatternMask(std::size_t q) : bits_(q, 0) {
    require_power_of_two(q, "PatternMask");
}

PatternMask::PatternMask(std::size_t q, std::span<const Symbol> nonzero) : PatternMask(q) {
    for (Symbol s : nonzero) {
        if (s >= q) throw std::invalid_argument("PatternMask: position outside [0, q)");
        set(s);
    }
}

PatternMask PatternMask::full(std::size_t q) {
    PatternMask m(q);
    for (std::size_t i = 0; i < q; ++i) m.set(i);
    return m;
}

PatternMask PatternMask::of(const DenseVector& v) {
    PatternMask m(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] != 0.0) m.set(i);
    }
    return m;
}

void PatternMask::set(std::size_t i, bool on) {
    const std::uint8_t bit = on ? 1 : 0;
    if (bits_.at(i) == bit) return;
    bits_[i] = bit;
    if (on) {
        ++weight_;
    } else {
        --weight_;
    }
}

PatternMask PatternMask::from_hex(std::size_t q, std::string_view hex) {
    if (hex.starts_with("0x") || hex.starts_with("0X")) hex.remove_prefix(2);
    if (hex.empty()) throw std::invalid_argument("mask: empty hex string");

    PatternMask m(q);
    std::size_t nibble = 0;
    for (auto it = hex.rbegin(); it != hex.rend(); ++it, ++nibble) {
        const char c = *it;
        unsigned digit = 0;
        if (c >= '0' && c <= '9') {
            digit = static_cast<unsigned>(c - '0');
        } else if (c >= 'a' && c <= 'f') {
            digit = static_cast<unsigned>(c - 'a' + 10);
        } else if (c >= 'A' && c <= 'F') {
            digit = static_cast<unsigned>(c - 'A' + 10);
        } else {
            throw std::invalid_argument(std::string("mask: invalid hex digit '") + c + "'");
        }
        for (unsigned b = 0; b < 4; ++b) {
            if (!(digit & (1u << b))) continue;
            const std::size_t pos = 4 * nibble + b;
            if (pos >= q) throw std::invalid_argument("mask: bit set beyond the alphabet size");
            m.set(pos);
        }
    }
    return m;
}

std::string PatternMask::to_hex() const {
    static constexpr char kDigits[] = "0123456789abcdef";
    const std::size_t nibbles = (bits_.size() + 3) / 4;
    std::string out(nibbles, '0');
    for (std::size_t n = 0; n < nibbles; ++n) {
        unsigned digit = 0;
        for (unsigned b = 0; b < 4 && 4 * n + b < bits_.size(); ++b) {
            if (bits_[4 * n + b]) digit |= 1u << b;
        }
        out[nibbles - 1 - n] = kDigits[digit];
    }
    return out;
}

std::vector<Symbol> PatternMask::positions() const {
    std::vector<Symbol> out;
    out.reserve(weight_);
    for (std::size_t i = 0; i < bits_.size(); ++i) {
        if (bits_[i]) out.push_back(static_cast<Symbol>(i));
    }
    return out;
}

DenseVector wht_dense(const DenseVector& v) {
    require_power_of_two(v.size(), "wht_dense");
    DenseVector x = v;
    const std::size_t q = x.size();
    // Merging half-transforms of length h into blocks of length 2h; the last
    // pass (h = q/2) is the top level of the recursion.
    for (std::size_t h = 1; h < q; h <<= 1) {
        for (std::size_t base = 0; base < q; base += 2 * h) {
            for (std::size_t j = base; j < base + h; ++j) {
                const double a = x[j];
                const double b = x[j + h];
                x[j] = a + b;
                x[j + h] = a - b;
            }
        }
    }
    return x;
}

DenseVector wht_inverse(const DenseVector& v) {
    DenseVector x = wht_dense(v);
    const double scale = static_cast<double>(x.size());
    for (double& e : x.values()) e /= scale;
    return x;
}

CountedTransform wht_sparse_counted(const DenseVector& sparse, const PatternMask& mask) {
    require_power_of_two(sparse.size(), "wht_sparse_counted");
    const std::size_t q = sparse.size();
    if (mask.size() != q) throw std::invalid_argument("wht_sparse_counted: mask length mismatch");
    for (std::size_t i = 0; i < q; ++i) {
        if (!mask.test(i) && sparse[i] != 0.0) {
            throw std::invalid_argument("wht_sparse_counted: non-zero value outside the mask");
        }
    }

    CountedTransform out{sparse, {}};
    DenseVector& x = out.spectrum;
    // active[k]: block k of the current length holds a structurally non-zero value
    std::vector<std::uint8_t> active(q);
    for (std::size_t i = 0; i < q; ++i) active[i] = mask.test(i) ? 1 : 0;

    for (std::size_t h = 1; h < q; h <<= 1) {
        std::vector<std::uint8_t> merged(active.size() / 2);
        for (std::size_t k = 0; k < merged.size(); ++k) {
            const bool left = active[2 * k] != 0;
            const bool right = active[2 * k + 1] != 0;
            const std::size_t base = 2 * k * h;
            if (left && right) {
                for (std::size_t j = base; j < base + h; ++j) {
                    const double a = x[j];
                    const double b = x[j + h];
                    x[j] = a + b;
                    x[j + h] = a - b;
                }
                out.count.additions += 2 * h;
                out.count.negations += h;
            } else if (right) {
                for (std::size_t j = base; j < base + h; ++j) {
                    x[j] = x[j + h];
                    x[j + h] = -x[j + h];
                }
                out.count.negations += h;
            } else if (left) {
                for (std::size_t j = base; j < base + h; ++j) x[j + h] = x[j];
            }
            merged[k] = (left || right) ? 1 : 0;
        }
        active = std::move(merged);
    }
    return out;
}

namespace {

struct BlockCount {
    OpCount count;
    bool active = false;
};

BlockCount count_block(const PatternMask& mask, std::size_t lo, std::size_t len) {
    if (len == 1) return {{}, mask.test(lo)};
    const std::size_t half = len / 2;
    const BlockCount left = count_block(mask, lo, half);
    const BlockCount right = count_block(mask, lo + half, half);
    BlockCount out{left.count + right.count, left.active || right.active};
    if (left.active && right.active) out.count.additions += len;
    if (right.active) out.count.negations += half;
    return out;
}

}  // namespace

OpCount count_only(const PatternMask& mask) {
    return count_block(mask, 0, mask.size()).count;
}

}  // namespace whtrunc
