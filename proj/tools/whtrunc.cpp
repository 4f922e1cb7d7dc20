// Command-line front end: operation-count tables, figure data, validation.

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>

#include "whtrunc/report.hpp"

namespace {

using whtrunc::report::Format;
using whtrunc::report::Report;

struct RunConfig {
    std::optional<std::size_t> q;
    std::optional<std::size_t> q_prime;
    std::size_t trials = 100000;
    std::uint64_t seed = 1;
    std::size_t d_c = 1;
    Format format = Format::text;
    std::string out_path;
    std::string mask;
};

std::size_t required(const std::optional<std::size_t>& v, const char* flag) {
    if (!v) throw std::invalid_argument(std::string("missing required option ") + flag);
    return *v;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Operation counts of sparse Walsh-Hadamard transforms for truncated messages"};
    app.require_subcommand(1);
    app.fallthrough();

    RunConfig cfg;
    const std::map<std::string, Format> formats{{"csv", Format::csv}, {"text", Format::text}};
    app.add_option("--q", cfg.q, "Alphabet size (power of two)");
    app.add_option("--q-prime", cfg.q_prime, "Number of non-zero / retained entries");
    app.add_option("--trials", cfg.trials, "Number of random trials")->capture_default_str();
    app.add_option("--seed", cfg.seed, "Random seed")->capture_default_str();
    app.add_option("--dc", cfg.d_c, "Check-node degree (1 = a single convolution)")
        ->capture_default_str();
    app.add_option("--format", cfg.format, "Output format")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    app.add_option("--out", cfg.out_path, "Write output to this file instead of stdout");
    app.add_option("--mask", cfg.mask, "Hex pattern, least-significant bit = symbol 0");

    auto* table1 = app.add_subcommand("table1", "Exact counts for lengths 2 and 4 with expansions");
    auto* table2 = app.add_subcommand("table2", "Approximate and exact counts for q = 64");
    auto* fig3 = app.add_subcommand("fig3", "Relative approximate additions for q = 16..65536");
    auto* count = app.add_subcommand("count", "Operation count of one pattern (--q, --mask)");
    auto* validate =
        app.add_subcommand("validate", "Check exact expectations by enumeration or sampling");
    auto* conv = app.add_subcommand("conv-check", "Check WH-domain convolution against the direct sum");
    auto* cost = app.add_subcommand("cost", "Cost models for a check node (--q, --q-prime, --dc)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return whtrunc::report::kExitUsage;
    }

    Report report;
    try {
        if (*table1) {
            report = whtrunc::report::table1(cfg.format);
        } else if (*table2) {
            report = whtrunc::report::table2(cfg.format);
        } else if (*fig3) {
            report = whtrunc::report::fig3(cfg.q_prime.value_or(12), 16, 65536, cfg.format);
        } else if (*count) {
            if (cfg.mask.empty()) throw std::invalid_argument("missing required option --mask");
            report = whtrunc::report::count(required(cfg.q, "--q"), cfg.mask, cfg.format);
        } else if (*validate) {
            report = whtrunc::report::validate(required(cfg.q, "--q"),
                                               required(cfg.q_prime, "--q-prime"), cfg.trials,
                                               cfg.seed, cfg.format);
        } else if (*conv) {
            report = whtrunc::report::conv_check(required(cfg.q, "--q"), cfg.trials, cfg.seed,
                                                 cfg.format);
        } else if (*cost) {
            report = whtrunc::report::cost(required(cfg.q, "--q"),
                                           required(cfg.q_prime, "--q-prime"), cfg.d_c,
                                           cfg.format);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return whtrunc::report::kExitUsage;
    }

    if (cfg.out_path.empty()) {
        std::cout << report.body;
    } else {
        std::ofstream out(cfg.out_path, std::ios::binary);
        if (!out) {
            std::cerr << "error: cannot open " << cfg.out_path << "\n";
            return whtrunc::report::kExitUsage;
        }
        out << report.body;
    }
    return report.exit_code;
}
