#pragma once

// Rendering of the operation-count tables, figure data and validation reports
// used by the command-line tool.

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

namespace whtrunc::report {

enum class Format { csv, text };

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

struct Report {
    std::string body;
    int exit_code = kExitPass;
};

/// Length-2 base table and the length-4 expansions, as exact fractions.
Report table1(Format format);

/// Approximate and exact expectations for q = 64.
Report table2(Format format);

/// Approximate additions relative to q log2 q over q = q_min..q_max.
Report fig3(std::size_t q_prime, std::size_t q_min, std::size_t q_max, Format format);

/// Operation count of a single hex-encoded pattern.
Report count(std::size_t q, std::string_view mask_hex, Format format);

/// Compares the exhaustive or sampled mean of per-pattern counts with the exact expectation.
Report validate(std::size_t q, std::size_t q_prime, std::size_t trials, std::uint64_t seed,
                Format format);

/// WH-domain convolution against the direct sum on random probability vectors.
Report conv_check(std::size_t q, std::size_t trials, std::uint64_t seed, Format format);

/// Cost models for a check node of degree d_c.
Report cost(std::size_t q, std::size_t q_prime, std::size_t d_c, Format format);

/// Largest length accepted where exact expectations are needed.
inline constexpr std::size_t kMaxExactLength = 1024;

}  // namespace whtrunc::report
