#include "ebitforge/code_io.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>

#include "ebitforge/fixtures.hpp"

using namespace ebitforge;

namespace {

void expect_structurally_equal(const EacwsCode& a, const EacwsCode& b) {
  EXPECT_EQ(a.params, b.params);
  EXPECT_EQ(a.graph, b.graph);
  EXPECT_EQ(a.codewords.codewords, b.codewords.codewords);
  ASSERT_EQ(a.word_ops_encoded.size(), b.word_ops_encoded.size());
  for (size_t i = 0; i < a.word_ops_encoded.size(); ++i) {
    EXPECT_EQ(a.word_ops_encoded[i], b.word_ops_encoded[i]);
  }
  EXPECT_EQ(a.word_ops_initial.has_value(), b.word_ops_initial.has_value());
  if (a.word_ops_initial && b.word_ops_initial) {
    for (size_t i = 0; i < a.word_ops_initial->size(); ++i) {
      EXPECT_EQ((*a.word_ops_initial)[i], (*b.word_ops_initial)[i]);
    }
  }
  EXPECT_EQ(a.provenance, b.provenance);
}

}  // namespace

TEST(CodeIo, JsonRoundTripBothFixtures) {
  for (const auto* fixture : {&fixtures::code_5_16_2_1(), &fixtures::code_7_4_5_4()}) {
    const EacwsCode code = fixtures::as_eacws(*fixture);
    const EacwsCode back = code_from_json(code_to_json(code));
    expect_structurally_equal(code, back);
  }
}

TEST(CodeIo, FileRoundTrip) {
  const EacwsCode code = fixtures::as_eacws(fixtures::code_5_16_2_1());
  const std::string path = testing::TempDir() + "/roundtrip_code.json";
  save_code_file(code, path);
  const EacwsCode back = load_code_file(path);
  expect_structurally_equal(code, back);
  std::remove(path.c_str());
}

TEST(CodeIo, ShippedFixtureFilesMatchEmbeddedTables) {
  const std::string dir = EBITFORGE_FIXTURE_DIR;
  expect_structurally_equal(load_code_file(dir + "/code_5_16_2_1.json"),
                            fixtures::as_eacws(fixtures::code_5_16_2_1()));
  expect_structurally_equal(load_code_file(dir + "/code_7_4_5_4.json"),
                            fixtures::as_eacws(fixtures::code_7_4_5_4()));
}

TEST(CodeIo, RejectsBadFiles) {
  nlohmann::json j = code_to_json(fixtures::as_eacws(fixtures::code_5_16_2_1()));

  nlohmann::json wrong_format = j;
  wrong_format["format"] = "something-else";
  EXPECT_THROW(code_from_json(wrong_format), std::invalid_argument);

  nlohmann::json wrong_version = j;
  wrong_version["version"] = 99;
  EXPECT_THROW(code_from_json(wrong_version), std::invalid_argument);

  nlohmann::json bad_codeword = j;
  bad_codeword["codewords"][1] = "000|00";
  EXPECT_THROW(code_from_json(bad_codeword), std::invalid_argument);

  nlohmann::json bob_support = j;
  bob_support["word_ops_encoded"][1] = "IIIII|Z";
  EXPECT_THROW(code_from_json(bob_support), std::invalid_argument);

  EXPECT_THROW(load_code_file("/nonexistent/code.json"), std::invalid_argument);
}

TEST(CodeIo, ReportSerialization) {
  VerificationReport report;
  report.params = CodeParams{5, 16, 2, 1};
  report.word_ops_consistent = true;
  report.orthonormal = true;
  report.detected_errors = 15;
  report.distance.found = true;
  report.distance.value = 2;
  report.distance.wmax = 2;
  report.distance.witness = parse_pauli("XXIII|I");
  report.pass = true;
  const nlohmann::json j = report_to_json(report);
  EXPECT_EQ(j.at("distance").get<int>(), 2);
  EXPECT_EQ(j.at("witness").get<std::string>(), "XXIII|I");
  EXPECT_TRUE(j.at("pass").get<bool>());

  VerificationReport open;
  open.params = CodeParams{5, 1, 1, 0};
  open.distance.wmax = 3;
  const nlohmann::json j2 = report_to_json(open);
  EXPECT_EQ(j2.at("distance").get<std::string>(), "> 3");
}
