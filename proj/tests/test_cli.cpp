/*
   Copyright 2026 The maxarc Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/


#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"

namespace maxarc::cli {
namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome invoke(std::vector<std::string> args) {
    args.insert(args.begin(), "maxarc");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out;
    std::ostringstream err;
    const int code = main_with(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::size_t count_of(const std::string& text, const std::string& needle) {
    std::size_t n = 0;
    for (auto p = text.find(needle); p != std::string::npos; p = text.find(needle, p + 1)) ++n;
    return n;
}

std::string temp_path(const std::string& name) {
    return (std::filesystem::temp_directory_path() / ("maxarc_cli_test_" + name)).string();
}

class CliTest : public ::testing::Test {
protected:
    void SetUp() override { unsetenv("MAXARC_BUDGET"); }
    void TearDown() override { unsetenv("MAXARC_BUDGET"); }
};

TEST_F(CliTest, VerifyPaperSucceeds) {
    const auto r = invoke({"verify-paper"});
    EXPECT_EQ(r.code, kOk) << r.err;
    const Json j = Json::parse(r.out);
    EXPECT_TRUE(j["failures"].empty());
    EXPECT_EQ(j["notes"].size(), 2u);
}

TEST_F(CliTest, DennistonJsonIsByteIdentical) {
    const std::vector<std::string> args{"denniston", "--m", "5", "--s", "3", "--modulus", "37"};
    const auto a = invoke(args);
    const auto b = invoke(args);
    ASSERT_EQ(a.code, kOk) << a.err;
    EXPECT_EQ(a.out, b.out);
    const Json j = Json::parse(a.out);
    EXPECT_TRUE(j["all_pass"].get<bool>());
    EXPECT_EQ(j["stages"][0]["weight_distribution"]["counts"]["224"], "29667");
    EXPECT_FALSE(j.contains("timing_seconds"));
}

TEST_F(CliTest, DefaultsAreRecorded) {
    const auto r = invoke({"denniston", "--m", "4", "--s", "2"});
    ASSERT_EQ(r.code, kOk) << r.err;
    const Json j = Json::parse(r.out);
    EXPECT_EQ(j["parameters"]["modulus"], 19);
    const std::string diag = j["diagnostics"].dump();
    EXPECT_NE(diag.find("modulus defaulted to 19"), std::string::npos);
    EXPECT_NE(diag.find("beta defaulted to"), std::string::npos);
    EXPECT_NE(diag.find("subgroup basis defaulted"), std::string::npos);
}

TEST_F(CliTest, TimingIsOptIn) {
    const auto r = invoke({"pg3", "--m", "5", "--timing"});
    ASSERT_EQ(r.code, kOk) << r.err;
    EXPECT_TRUE(Json::parse(r.out).contains("timing_seconds"));
}

TEST_F(CliTest, MarkdownFormat) {
    const auto r = invoke({"pg3", "--m", "5", "--format", "markdown"});
    ASSERT_EQ(r.code, kOk) << r.err;
    EXPECT_NE(r.out.find("| C(A)^(2)perp-bar | GF(2) | 34 | 22 | 6 |"), std::string::npos) << r.out;
}

TEST_F(CliTest, RejectsNonCoprimeExponent) {
    const auto r = invoke({"pg3", "--m", "4", "--h", "2"});
    EXPECT_EQ(r.code, kInvalid);
    EXPECT_NE(r.err.find("gcd"), std::string::npos);
    EXPECT_TRUE(r.out.empty());
}

TEST_F(CliTest, ReportsEveryViolation) {
    const auto r = invoke({"denniston", "--m", "4", "--s", "4", "--beta", "0", "--format", "xml"});
    EXPECT_EQ(r.code, kInvalid);
    EXPECT_GE(count_of(r.err, "error:"), 3u) << r.err;
    EXPECT_NE(r.err.find("s = m"), std::string::npos);
}

TEST_F(CliTest, RejectsBadInputs) {
    EXPECT_EQ(invoke({"denniston", "--s", "2"}).code, kInvalid);
    EXPECT_EQ(invoke({"denniston", "--m", "40", "--s", "2"}).code, kInvalid);
    EXPECT_EQ(invoke({"denniston", "--m", "4", "--s", "2", "--modulus", "21"}).code, kInvalid);
    EXPECT_EQ(invoke({"denniston", "--m", "4", "--s", "2", "--basis", "1,1"}).code, kInvalid);
    EXPECT_EQ(invoke({"denniston", "--m", "4", "--s", "2", "--basis", "1,x"}).code, kInvalid);
    EXPECT_EQ(invoke({"pg3", "--m", "5", "--beta", "3"}).code, kInvalid);
    EXPECT_EQ(invoke({"charsum", "--m", "3", "--a", "0"}).code, kInvalid);
    EXPECT_EQ(invoke({"dump-arc", "--m", "3", "--family", "hermitian"}).code, kInvalid);
    EXPECT_EQ(invoke({"bogus"}).code, kInvalid);
    EXPECT_EQ(invoke({}).code, kInvalid);
    EXPECT_EQ(invoke({"pg3", "--m", "five"}).code, kInvalid);
}

TEST_F(CliTest, HyperovalRunsWithNote) {
    const auto r = invoke({"denniston", "--m", "4", "--s", "1"});
    ASSERT_EQ(r.code, kOk) << r.err;
    const Json j = Json::parse(r.out);
    EXPECT_FALSE(j["verdicts_enabled"].get<bool>());
    EXPECT_EQ(count_of(j["diagnostics"].dump(), "outside theorem hypothesis"), 1u);
}

TEST_F(CliTest, BudgetFromEnvironmentAndFlag) {
    setenv("MAXARC_BUDGET", "100", 1);
    const auto small = invoke({"denniston", "--m", "5", "--s", "3", "--modulus", "37"});
    ASSERT_EQ(small.code, kOk) << small.err;
    const Json js = Json::parse(small.out);
    EXPECT_EQ(js["stages"][0]["weight_distribution"], "not enumerated");
    EXPECT_EQ(js["stages"][4]["d"], 4);

    const auto flag = invoke({"denniston", "--m", "5", "--s", "3", "--modulus", "37", "--budget", "100000"});
    ASSERT_EQ(flag.code, kOk) << flag.err;
    EXPECT_TRUE(Json::parse(flag.out)["stages"][0]["weight_distribution"].is_object());

    setenv("MAXARC_BUDGET", "lots", 1);
    EXPECT_EQ(invoke({"verify-paper"}).code, kInvalid);
    unsetenv("MAXARC_BUDGET");
    EXPECT_EQ(invoke({"pg3", "--m", "5", "--budget", "0"}).code, kInvalid);
}

TEST_F(CliTest, OutputFile) {
    const std::string path = temp_path("report.json");
    const auto r = invoke({"pg3", "--m", "5", "--output", path});
    ASSERT_EQ(r.code, kOk) << r.err;
    EXPECT_TRUE(r.out.empty());
    std::ifstream in(path);
    std::stringstream text;
    text << in.rdbuf();
    EXPECT_EQ(text.str(), invoke({"pg3", "--m", "5"}).out);
    std::filesystem::remove(path);

    const auto bad = invoke({"pg3", "--m", "5", "--output", "/nonexistent-dir/x.json"});
    EXPECT_EQ(bad.code, kInvalid);
    EXPECT_NE(bad.err.find("cannot write"), std::string::npos);
}

TEST_F(CliTest, CharsumEmitsOneLinePerPair) {
    const auto r = invoke({"charsum", "--m", "3", "--h", "1"});
    ASSERT_EQ(r.code, kOk) << r.err;
    std::istringstream lines(r.out);
    std::string line;
    std::size_t n = 0;
    while (std::getline(lines, line)) {
        const Json j = Json::parse(line);
        EXPECT_TRUE(j["agrees"].get<bool>());
        EXPECT_TRUE(j["N_identity"].get<bool>());
        ++n;
    }
    EXPECT_EQ(n, 7u * 8u);
    const auto one = invoke({"charsum", "--m", "4", "--h", "2", "--a", "1", "--b", "0", "--format", "markdown"});
    ASSERT_EQ(one.code, kOk);
    EXPECT_NE(one.out.find("| 1 | 0 | 16 | [16] | no | yes |"), std::string::npos) << one.out;
}

TEST_F(CliTest, DumpArcWritesPointsAndMatrix) {
    const std::string path = temp_path("matrix.txt");
    const auto r = invoke({"dump-arc", "--family", "pg3", "--m", "3", "--matrix", path});
    ASSERT_EQ(r.code, kOk) << r.err;
    std::istringstream dump(r.out);
    const ArcDump arc = read_arc_dump(dump);
    EXPECT_EQ(arc.m, 3);
    EXPECT_EQ(arc.points.size(), 9u);
    std::ifstream in(path);
    std::stringstream text;
    text << in.rdbuf();
    const BitMatrix g = BitMatrix::from_text(text.str());
    EXPECT_EQ(g.cols(), 9u);
    EXPECT_EQ(rank(g), g.rows());
    std::filesystem::remove(path);

    const auto den = invoke({"dump-arc", "--m", "4", "--s", "2"});
    ASSERT_EQ(den.code, kOk) << den.err;
    std::istringstream dd(den.out);
    EXPECT_EQ(read_arc_dump(dd).points.size(), 52u);
}

}  // namespace
}  // namespace maxarc::cli
