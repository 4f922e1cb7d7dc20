#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "whtrunc/report.hpp"

using namespace whtrunc::report;

namespace {

std::vector<std::string> lines_of(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    for (std::string line; std::getline(in, line);) out.push_back(line);
    return out;
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream in(line);
    for (std::string cell; std::getline(in, cell, ',');) out.push_back(cell);
    if (!line.empty() && line.back() == ',') out.emplace_back();
    return out;
}

const std::vector<std::string>* row_starting(const std::vector<std::vector<std::string>>& rows,
                                             const std::string& key) {
    for (const auto& r : rows) {
        if (!r.empty() && r[0] == key) return &r;
    }
    return nullptr;
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), {}};
}

int run_cli(const std::string& args) {
    const std::string cmd = std::string(WHTRUNC_CLI_PATH) + " " + args + " >/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST(SmallLengthReport, CsvRows) {
    const Report r = table1(Format::csv);
    const auto lines = lines_of(r.body);
    ASSERT_FALSE(lines.empty());
    EXPECT_EQ(lines[0], "block,q_prime,q_left,q_right,weight,left,right,extra,expected");

    std::vector<std::vector<std::string>> rows;
    for (std::size_t i = 1; i < lines.size(); ++i) rows.push_back(split_csv(lines[i]));
    auto find = [&](const std::string& block, const std::string& qp, const std::string& ql) {
        for (const auto& row : rows) {
            if (row[0] == block && row[1] == qp && row[2] == ql) return row;
        }
        return std::vector<std::string>{};
    };
    const auto mid = find("q4_additions", "2", "1");
    ASSERT_EQ(mid.size(), 9u);
    EXPECT_EQ(mid[4], "2/3");
    EXPECT_EQ(mid[7], "4");
    EXPECT_EQ(mid[8], "10/3");
    EXPECT_EQ(find("q4_additions", "4", "2")[8], "8");
    EXPECT_EQ(find("q4_negations", "4", "2")[8], "4");
    const auto zero = find("q4_negations", "0", "0");
    EXPECT_EQ(zero[8], "0");
    EXPECT_EQ(zero[7], "0");
    EXPECT_EQ(find("q2_negations", "1", "")[8], "1/2");
}

TEST(SmallLengthReport, TextHasThreeBlocks) {
    const std::string body = table1(Format::text).body;
    EXPECT_NE(body.find("Length-2 transform"), std::string::npos);
    EXPECT_NE(body.find("Length-4 transform, additions"), std::string::npos);
    EXPECT_NE(body.find("Length-4 transform, negations"), std::string::npos);
    EXPECT_NE(body.find("10/3"), std::string::npos);
    EXPECT_NE(body.find("7/2"), std::string::npos);
}

TEST(Length64Report, CsvAndTextRows) {
    const auto lines = lines_of(table2(Format::csv).body);
    ASSERT_EQ(lines.size(), 27u);
    EXPECT_EQ(lines[0], "q_prime,approx_additions,approx_negations,exact_additions,exact_negations");
    std::vector<std::vector<std::string>> rows;
    for (std::size_t i = 1; i < lines.size(); ++i) rows.push_back(split_csv(lines[i]));
    EXPECT_EQ((*row_starting(rows, "12"))[1], "195.311266684534");
    EXPECT_EQ((*row_starting(rows, "64"))[3], "384");

    const std::string text = table2(Format::text).body;
    EXPECT_NE(text.find("      8             155.1             105.5            160.0            108.0"),
              std::string::npos);
    EXPECT_NE(text.find("     64             384.0             192.0            384.0            192.0"),
              std::string::npos);
}

TEST(SweepReport, ThirteenDecreasingRows) {
    const auto lines = lines_of(fig3(12, 16, 65536, Format::csv).body);
    ASSERT_EQ(lines.size(), 14u);
    EXPECT_EQ(lines[0], "q,log2_q,ratio");
    double prev = 2.0;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto cells = split_csv(lines[i]);
        const double ratio = std::stod(cells[2]);
        EXPECT_LT(ratio, prev);
        prev = ratio;
    }
    EXPECT_EQ(lines[3], "64,6,0.508623090324308");
}

TEST(Count, ReferencePatterns) {
    EXPECT_EQ(count(8, "3", Format::text).body, "additions=2 negations=1\n");
    EXPECT_EQ(count(8, "22", Format::text).body, "additions=8 negations=6\n");
    EXPECT_EQ(count(8, "22", Format::csv).body, "q,mask,weight,additions,negations\n8,22,2,8,6\n");
    EXPECT_THROW(count(8, "xyz", Format::text), std::invalid_argument);
    EXPECT_THROW(count(12, "1", Format::text), std::invalid_argument);
}

TEST(Validate, ExhaustiveLengthFour) {
    const Report r = validate(4, 2, 10, 1, Format::csv);
    EXPECT_EQ(r.exit_code, kExitPass);
    const auto lines = lines_of(r.body);
    ASSERT_EQ(lines.size(), 3u);
    EXPECT_EQ(lines[1], "additions,exhaustive,6,10/3,0,10/3,PASS");
    EXPECT_EQ(lines[2], "negations,exhaustive,6,8/3,0,8/3,PASS");
}

TEST(Validate, SampledLengthSixtyFour) {
    const Report r = validate(64, 12, 20000, 3, Format::text);
    EXPECT_EQ(r.exit_code, kExitPass);
    EXPECT_NE(r.body.find("sampled"), std::string::npos);
    EXPECT_NE(r.body.find("result: PASS"), std::string::npos);
    EXPECT_THROW(validate(64, 65, 10, 1, Format::text), std::invalid_argument);
    EXPECT_THROW(validate(2048, 2, 10, 1, Format::text), std::invalid_argument);
}

TEST(ConvCheck, PassesAtTolerance) {
    const Report r = conv_check(16, 100, 11, Format::csv);
    EXPECT_EQ(r.exit_code, kExitPass);
    EXPECT_NE(r.body.find(",PASS"), std::string::npos);
    EXPECT_EQ(r.body, conv_check(16, 100, 11, Format::csv).body);
}

TEST(Cost, ListsAllModels) {
    const auto lines = lines_of(cost(64, 11, 1, Format::csv).body);
    ASSERT_EQ(lines.size(), 6u);
    EXPECT_EQ(lines[0], "model,multiplications,additions,negations");
    EXPECT_EQ(split_csv(lines[3])[0], "wh_forward_sparse");
    EXPECT_NEAR(std::stod(split_csv(lines[3])[2]), 190.0, 0.05);
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(run_cli("table1"), kExitPass);
    EXPECT_EQ(run_cli("count --q 8 --mask 3"), kExitPass);
    EXPECT_EQ(run_cli("validate --q 4 --q-prime 2"), kExitPass);
    EXPECT_EQ(run_cli("count --q 8 --mask zz"), kExitUsage);
    EXPECT_EQ(run_cli("count --q 8"), kExitUsage);
    EXPECT_EQ(run_cli("count --q 6 --mask 1"), kExitUsage);
    EXPECT_EQ(run_cli("validate --q 4 --q-prime 9"), kExitUsage);
    EXPECT_EQ(run_cli("no-such-command"), kExitUsage);
    EXPECT_EQ(run_cli("table2 --format xml"), kExitUsage);
}

TEST(Cli, RepeatedRunsAreByteIdentical) {
    const auto dir = std::filesystem::temp_directory_path() / "whtrunc_cli_test";
    std::filesystem::create_directories(dir);
    const std::vector<std::string> commands{
        "table1 --format csv", "table2", "fig3 --format csv",
        "validate --q 64 --q-prime 12 --trials 20000 --seed 5 --format csv",
        "conv-check --q 64 --trials 20 --seed 9", "cost --q 64 --q-prime 12 --dc 6"};
    for (std::size_t i = 0; i < commands.size(); ++i) {
        const auto a = dir / ("a" + std::to_string(i));
        const auto b = dir / ("b" + std::to_string(i));
        ASSERT_EQ(run_cli(commands[i] + " --out " + a.string()), kExitPass) << commands[i];
        ASSERT_EQ(run_cli(commands[i] + " --out " + b.string()), kExitPass) << commands[i];
        const std::string first = slurp(a);
        EXPECT_FALSE(first.empty());
        EXPECT_EQ(first, slurp(b)) << commands[i];
        EXPECT_EQ(first.find('\r'), std::string::npos);
    }
    std::filesystem::remove_all(dir);
}
