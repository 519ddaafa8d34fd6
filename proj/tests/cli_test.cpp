// End-to-end runs of the command-line tool, including the documented exit
// codes: 0 pass, 1 verification failure, 2 usage error.
#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "ebitforge/code_io.hpp"
#include "ebitforge/fixtures.hpp"

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run_cli(const std::string& args) {
  const std::string out_path = testing::TempDir() + "/cli_out.txt";
  const std::string cmd = std::string(EBITFORGE_CLI_PATH) + " " + args + " > " + out_path + " 2>&1";
  const int status = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream in(out_path);
  std::stringstream ss;
  ss << in.rdbuf();
  r.output = ss.str();
  return r;
}

std::string fixture_path(const std::string& name) {
  return std::string(EBITFORGE_FIXTURE_DIR) + "/" + name;
}

}  // namespace

TEST(Cli, GensMatchesPublishedTable) {
  const auto r = run_cli("gens --graph " + fixture_path("ring5.txt") + " --ebits 1");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.output.find("g_1 = XZIIZ|I"), std::string::npos) << r.output;
  EXPECT_NE(r.output.find("g_5 = ZIIZX|Z"), std::string::npos);
  EXPECT_NE(r.output.find("h_1 = IIIIZ|X"), std::string::npos);
}

TEST(Cli, GensThreeRingTwoEbits) {
  const auto r = run_cli("gens --graph " + fixture_path("ring3.txt") + " --ebits 2");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.output.find("g_2 = ZXZ|ZI"), std::string::npos) << r.output;
  EXPECT_NE(r.output.find("h_2 = IIZ|IX"), std::string::npos);
}

TEST(Cli, InduceListsFifteenRows) {
  const auto r = run_cli("induce --graph " + fixture_path("ring5.txt") +
                         " --ebits 1 --weight 1");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.output.find("ZIIII|I -> 10000|0"), std::string::npos) << r.output;
  int lines = 0;
  for (char ch : r.output) {
    lines += ch == '\n';
  }
  EXPECT_EQ(lines, 15);
}

TEST(Cli, InduceWeightZeroIsUsageError) {
  const auto r = run_cli("induce --graph " + fixture_path("ring5.txt") +
                         " --ebits 1 --weight 0");
  EXPECT_EQ(r.exit_code, 2);
}

TEST(Cli, MissingSubcommandIsUsageError) {
  EXPECT_EQ(run_cli("").exit_code, 2);
  EXPECT_EQ(run_cli("frobnicate").exit_code, 2);
}

TEST(Cli, BadGraphFileIsUsageError) {
  EXPECT_EQ(run_cli("gens --graph /nonexistent.txt").exit_code, 2);
}

TEST(Cli, VerifyShippedFixturePasses) {
  const auto r = run_cli("verify " + fixture_path("code_5_16_2_1.json"));
  EXPECT_EQ(r.exit_code, 0) << r.output;
  EXPECT_NE(r.output.find("distance:          2"), std::string::npos) << r.output;
  EXPECT_NE(r.output.find("pass"), std::string::npos);
}

TEST(Cli, VerifySevenRingReferenceTableHonestlyFails) {
  // The bundled reference table claims d=5 but carries a weight-3 defect;
  // verification reports it rather than rubber-stamping the claim.
  const auto r = run_cli("verify " + fixture_path("code_7_4_5_4.json") + " --format json");
  EXPECT_EQ(r.exit_code, 1) << r.output;
  EXPECT_NE(r.output.find("\"distance\": 3"), std::string::npos) << r.output;
  EXPECT_NE(r.output.find("ZXZIIII|IIII"), std::string::npos) << r.output;
}

TEST(Cli, VerifyRepairedSevenRingCodePasses) {
  const auto r = run_cli("verify " + fixture_path("code_7_4_5_4_repaired.json") +
                         " --wmax 5 --format json");
  EXPECT_EQ(r.exit_code, 0) << r.output;
  EXPECT_NE(r.output.find("\"distance\": 5"), std::string::npos) << r.output;
  EXPECT_NE(r.output.find("\"pass\": true"), std::string::npos) << r.output;
}

TEST(Cli, VerifyCorruptedFixtureFailsWithWitness) {
  // Flip one Alice bit of one codeword; the sweep must surface a witness.
  auto code = ebitforge::fixtures::as_eacws(ebitforge::fixtures::code_5_16_2_1());
  code.codewords.codewords[1] ^= 1ULL << 3;
  const std::string path = testing::TempDir() + "/corrupted_code.json";
  ebitforge::save_code_file(code, path);
  const auto r = run_cli("verify " + path + " --format json");
  EXPECT_EQ(r.exit_code, 1) << r.output;
  EXPECT_NE(r.output.find("witness"), std::string::npos) << r.output;
  EXPECT_NE(r.output.find("\"pass\": false"), std::string::npos) << r.output;
  std::remove(path.c_str());
}

TEST(Cli, SearchFiveRingWritesVerifiedCode) {
  const std::string out = testing::TempDir() + "/search5.json";
  const auto r = run_cli("search --graph " + fixture_path("ring5.txt") +
                         " --ebits 1 --weight 1 --mode detect --out " + out);
  ASSERT_EQ(r.exit_code, 0) << r.output;
  const auto code = ebitforge::load_code_file(out);
  EXPECT_GE(code.params.K, 16u);
  EXPECT_EQ(code.params.d, 2);

  // The spec invariant: search output always passes verify at claimed d.
  const auto v = run_cli("verify " + out);
  EXPECT_EQ(v.exit_code, 0) << v.output;
  std::remove(out.c_str());
}

TEST(Cli, ReproduceSummaryRuns) {
  // The full reproduction (including both searches) is exercised by the
  // acceptance suite; here just check the flag surface stays intact.
  const auto r = run_cli("reproduce --help");
  EXPECT_EQ(r.exit_code, 0);
}
