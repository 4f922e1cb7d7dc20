#include "whtrunc/report.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "whtrunc/approx_counts.hpp"
#include "whtrunc/convolution.hpp"
#include "whtrunc/exact_counts.hpp"
#include "whtrunc/montecarlo.hpp"
#include "whtrunc/wht.hpp"

namespace whtrunc::report {

namespace {

class Table {
public:
    explicit Table(std::vector<std::string> header) : header_(std::move(header)) {}

    void row(std::vector<std::string> cells) { rows_.push_back(std::move(cells)); }

    std::string render(Format format) const {
        std::string out;
        if (format == Format::csv) {
            append_csv(out, header_);
            for (const auto& r : rows_) append_csv(out, r);
            return out;
        }
        std::vector<std::size_t> width(header_.size());
        for (std::size_t c = 0; c < header_.size(); ++c) width[c] = header_[c].size();
        for (const auto& r : rows_) {
            for (std::size_t c = 0; c < r.size(); ++c) width[c] = std::max(width[c], r[c].size());
        }
        append_text(out, header_, width);
        for (const auto& r : rows_) append_text(out, r, width);
        return out;
    }

private:
    static void append_csv(std::string& out, const std::vector<std::string>& cells) {
        for (std::size_t c = 0; c < cells.size(); ++c) {
            if (c) out += ',';
            out += cells[c];
        }
        out += '\n';
    }

    static void append_text(std::string& out, const std::vector<std::string>& cells,
                            const std::vector<std::size_t>& width) {
        std::string line;
        for (std::size_t c = 0; c < cells.size(); ++c) {
            if (c) line += "  ";
            line += fmt::format("{:>{}}", cells[c], width[c]);
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        out += line;
        out += '\n';
    }

    std::vector<std::string> header_;
    std::vector<std::vector<std::string>> rows_;
};

// CSV keeps 15 significant digits; text mirrors the one-decimal printed tables.
std::string number(double v, Format format) {
    if (format == Format::csv) return fmt::format("{:.15g}", v);
    return fmt::format("{:.1f}", v);
}

void require_exact_length(std::size_t q) {
    require_power_of_two(q, "q");
    if (q < 2 || q > kMaxExactLength) {
        throw std::invalid_argument(
            fmt::format("q must be a power of two in [2, {}]", kMaxExactLength));
    }
}

void require_weight(std::size_t q, std::size_t q_prime) {
    if (q_prime > q) throw std::invalid_argument("q' must not exceed q");
}

// Rows of one expansion block; the total goes on the last row of a q' group
// in text mode and on every row in CSV.
void expansion_rows(Table& table, const ExpectationTable& exact, std::size_t q, bool additions,
                    Format format) {
    const std::string block = fmt::format("q{}_{}", q, additions ? "additions" : "negations");
    for (std::size_t k = 0; k <= q; ++k) {
        const auto terms = split_terms(exact, q, k);
        const ExpectedCounts& total = exact.at(q, k);
        const Rational& expected = additions ? total.additions : total.negations;
        for (std::size_t n = 0; n < terms.size(); ++n) {
            const SplitTerm& t = terms[n];
            const bool last = n + 1 == terms.size();
            std::vector<std::string> cells;
            if (format == Format::csv) cells.push_back(block);
            cells.push_back(n == 0 || format == Format::csv ? std::to_string(k) : "");
            cells.push_back(std::to_string(t.q_left));
            cells.push_back(std::to_string(t.q_right));
            cells.push_back(to_string(t.weight));
            cells.push_back(to_string(additions ? t.left.additions : t.left.negations));
            cells.push_back(to_string(additions ? t.right.additions : t.right.negations));
            cells.push_back(std::to_string(additions ? t.extra_additions : t.extra_negations));
            cells.push_back(last || format == Format::csv ? to_string(expected) : "");
            table.row(std::move(cells));
        }
    }
}

}  // namespace

Report table1(Format format) {
    const auto exact = ExpectationTable::build(4);

    if (format == Format::csv) {
        Table t({"block", "q_prime", "q_left", "q_right", "weight", "left", "right", "extra",
                 "expected"});
        for (std::size_t k = 0; k <= 2; ++k) {
            t.row({"q2_additions", std::to_string(k), "", "", "", "", "", "",
                   to_string(exact.at(2, k).additions)});
        }
        for (std::size_t k = 0; k <= 2; ++k) {
            t.row({"q2_negations", std::to_string(k), "", "", "", "", "", "",
                   to_string(exact.at(2, k).negations)});
        }
        expansion_rows(t, exact, 4, true, format);
        expansion_rows(t, exact, 4, false, format);
        return {t.render(format)};
    }

    std::string out = "Length-2 transform\n";
    Table base({"q'", "E[A]", "E[M]"});
    for (std::size_t k = 0; k <= 2; ++k) {
        base.row({std::to_string(k), to_string(exact.at(2, k).additions),
                  to_string(exact.at(2, k).negations)});
    }
    out += base.render(format);

    out += "\nLength-4 transform, additions\n";
    Table adds({"q'", "q_L", "q_R", "weight", "E[A_L]", "E[A_R]", "+q", "E[A]"});
    expansion_rows(adds, exact, 4, true, format);
    out += adds.render(format);

    out += "\nLength-4 transform, negations\n";
    Table negs({"q'", "q_L", "q_R", "weight", "E[M_L]", "E[M_R]", "+q/2", "E[M]"});
    expansion_rows(negs, exact, 4, false, format);
    out += negs.render(format);
    return {out};
}

Report table2(Format format) {
    constexpr std::size_t q = 64;
    Table t({"q_prime", "approx_additions", "approx_negations", "exact_additions",
             "exact_negations"});
    std::vector<std::size_t> weights;
    for (std::size_t k = 1; k <= 24; ++k) weights.push_back(k);
    weights.push_back(32);
    weights.push_back(64);
    for (std::size_t k : weights) {
        const ApproxCounts approx = approx_expected_counts(q, k);
        const ExpectedCounts exact = exact_expected_counts(q, k);
        t.row({std::to_string(k), number(approx.additions, format),
               number(approx.negations, format), number(to_double(exact.additions), format),
               number(to_double(exact.negations), format)});
    }
    return {t.render(format)};
}

Report fig3(std::size_t q_prime, std::size_t q_min, std::size_t q_max, Format format) {
    Table t({"q", "log2_q", format == Format::csv ? "ratio" : "ratio_percent"});
    for (const SweepPoint& p : relative_additions_sweep(q_min, q_max, q_prime)) {
        t.row({std::to_string(p.q), std::to_string(p.log2_q),
               format == Format::csv ? number(p.ratio, format) : number(100.0 * p.ratio, format)});
    }
    return {t.render(format)};
}

Report count(std::size_t q, std::string_view mask_hex, Format format) {
    require_power_of_two(q, "q");
    const PatternMask mask = PatternMask::from_hex(q, mask_hex);
    const OpCount c = count_only(mask);
    if (format == Format::text) {
        return {fmt::format("additions={} negations={}\n", c.additions, c.negations)};
    }
    Table t({"q", "mask", "weight", "additions", "negations"});
    t.row({std::to_string(q), mask.to_hex(), std::to_string(mask.weight()),
           std::to_string(c.additions), std::to_string(c.negations)});
    return {t.render(format)};
}

Report validate(std::size_t q, std::size_t q_prime, std::size_t trials, std::uint64_t seed,
                Format format) {
    require_exact_length(q);
    require_weight(q, q_prime);
    if (trials < 1) throw std::invalid_argument("trials must be at least 1");

    const ExpectedCounts expected = exact_expected_counts(q, q_prime);
    const std::uint64_t patterns = pattern_count(q, q_prime);
    const bool exhaustive = patterns <= kExhaustiveLimit;

    Table t({"quantity", "mode", "samples", "mean", "stderr", "expected", "status"});
    bool pass = true;
    if (exhaustive) {
        const ExpectedCounts mean = exhaustive_mean(q, q_prime);
        const std::array<std::pair<const char*, bool>, 2> rows{
            std::pair{"additions", mean.additions == expected.additions},
            std::pair{"negations", mean.negations == expected.negations}};
        for (const auto& [name, ok] : rows) {
            const bool adds = std::string_view(name) == "additions";
            t.row({name, "exhaustive", std::to_string(patterns),
                   to_string(adds ? mean.additions : mean.negations), "0",
                   to_string(adds ? expected.additions : expected.negations),
                   ok ? "PASS" : "FAIL"});
            pass = pass && ok;
        }
    } else {
        const TrialStats s = run_trials(q, q_prime, trials, seed);
        auto check = [&](const char* name, double mean, double se, const Rational& exact) {
            const double target = to_double(exact);
            const double diff = std::abs(mean - target);
            const bool ok = se > 0.0 ? diff <= 3.0 * se : diff <= 1e-9 * std::max(1.0, target);
            t.row({name, "sampled", std::to_string(trials), fmt::format("{:.15g}", mean),
                   fmt::format("{:.15g}", se), fmt::format("{:.15g}", target),
                   ok ? "PASS" : "FAIL"});
            pass = pass && ok;
        };
        check("additions", s.mean_additions, s.stderr_additions, expected.additions);
        check("negations", s.mean_negations, s.stderr_negations, expected.negations);
    }

    std::string body = t.render(format);
    if (format == Format::text) body += pass ? "result: PASS\n" : "result: FAIL\n";
    return {body, pass ? kExitPass : kExitFail};
}

Report conv_check(std::size_t q, std::size_t trials, std::uint64_t seed, Format format) {
    require_power_of_two(q, "q");
    if (trials < 1) throw std::invalid_argument("trials must be at least 1");
    constexpr double kTolerance = 1e-10;

    double worst_rel = 0.0;
    double worst_mass = 0.0;
    std::size_t failures = 0;
    for (std::size_t trial = 0; trial < trials; ++trial) {
        Rng rng = trial_rng(seed, trial);
        auto random_message = [&] {
            DenseVector v(q);
            for (double& x : v.values()) x = static_cast<double>(rng() >> 11) * 0x1.0p-53;
            const double total = v.sum();
            for (double& x : v.values()) x /= total;
            return v;
        };
        const DenseVector a = random_message();
        const DenseVector b = random_message();
        const DenseVector direct = xor_convolve_direct(a, b);
        const DenseVector viawht = xor_convolve_wht(a, b).result;

        double max_diff = 0.0;
        double max_ref = 0.0;
        for (std::size_t i = 0; i < q; ++i) {
            max_diff = std::max(max_diff, std::abs(direct[i] - viawht[i]));
            max_ref = std::max(max_ref, std::abs(direct[i]));
        }
        const double rel = max_ref > 0.0 ? max_diff / max_ref : max_diff;
        const double mass = std::abs(viawht.sum() - 1.0);
        worst_rel = std::max(worst_rel, rel);
        worst_mass = std::max(worst_mass, mass);
        if (rel > kTolerance || mass > kTolerance) ++failures;
    }

    const bool pass = failures == 0;
    Table t({"q", "trials", "seed", "max_relative_error", "max_mass_error", "tolerance",
             "failures", "status"});
    t.row({std::to_string(q), std::to_string(trials), std::to_string(seed),
           fmt::format("{:.3e}", worst_rel), fmt::format("{:.3e}", worst_mass),
           fmt::format("{:.0e}", kTolerance), std::to_string(failures), pass ? "PASS" : "FAIL"});
    return {t.render(format), pass ? kExitPass : kExitFail};
}

Report cost(std::size_t q, std::size_t q_prime, std::size_t d_c, Format format) {
    require_exact_length(q);
    require_weight(q, q_prime);
    if (d_c < 1) throw std::invalid_argument("dc must be at least 1");

    Table t({"model", "multiplications", "additions", "negations"});
    for (const CostModel& m : cost_compare(q, q_prime, d_c)) {
        t.row({m.label, number(m.multiplications, format), number(m.additions, format),
               number(m.negations, format)});
    }
    return {t.render(format)};
}

}  // namespace whtrunc::report
