// Acceptance suite: one test per release criterion, each printing a
// [ACCEPT] line so the run reads as a checklist.
#include <gtest/gtest.h>

#include <cstdio>
#include <random>

#include "ebitforge/reproduce.hpp"
#include "oracles.hpp"

using namespace ebitforge;

namespace {

void report(const CriterionResult& r) {
  std::printf("[ACCEPT] criterion %d (%s): %s -- %s (%ld ms)\n", r.id, r.name.c_str(),
              r.pass ? "PASS" : "FAIL", r.detail.c_str(), static_cast<long>(r.ms));
  EXPECT_TRUE(r.pass) << r.detail;
}

void report_line(int id, const char* name, bool pass, const std::string& detail) {
  std::printf("[ACCEPT] criterion %d (%s): %s -- %s\n", id, name, pass ? "PASS" : "FAIL",
              detail.c_str());
  EXPECT_TRUE(pass) << detail;
}

}  // namespace

TEST(Acceptance, Criterion1ClMapWorkedExample) { report(criterion_cl_map_example()); }

TEST(Acceptance, Criterion2InducedErrorTable) { report(criterion_induced_table()); }

TEST(Acceptance, Criterion3ErrorCount210) { report(criterion_error_count()); }

TEST(Acceptance, Criterion4Fixture5_16_2_1) { report(criterion_fixture_5_16_2_1()); }

TEST(Acceptance, Criterion5Fixture7_4_5_4) { report(criterion_fixture_7_4_5_4()); }

TEST(Acceptance, Criterion6PullBackEquivalence) { report(criterion_pull_back_equivalence()); }

TEST(Acceptance, Criterion7SearchRediscovery) { report(criterion_search_rediscovery()); }

// Criterion 8: the property suites, each reported as its own line.

TEST(Acceptance, Criterion8aPauliMatrixOracle) {
  bool pass = true;
  size_t pairs = 0;
  for (const auto& [alice, bob] : std::vector<std::pair<int, int>>{{1, 0}, {2, 0}, {2, 1}, {3, 0}}) {
    const int total = alice + bob;
    std::vector<PauliOperator> ops;
    for (uint64_t z = 0; z < (1ULL << total); ++z) {
      for (uint64_t x = 0; x < (1ULL << total); ++x) {
        for (int m = 0; m < 4; ++m) {
          ops.push_back(PauliOperator::from_bits(z, x, m, alice, bob));
        }
      }
    }
    std::vector<oracles::GiMatrix> mats;
    mats.reserve(ops.size());
    for (const auto& op : ops) {
      mats.push_back(oracles::pauli_matrix(op));
    }
    for (size_t i = 0; i < ops.size() && pass; ++i) {
      for (size_t j = 0; j < ops.size(); ++j) {
        ++pairs;
        if (oracles::pauli_matrix(multiply(ops[i], ops[j])) != oracles::matmul(mats[i], mats[j])) {
          pass = false;
          break;
        }
      }
    }
  }
  report_line(8, "Pauli product vs dense-matrix oracle, exhaustive <= 3 qubits", pass,
              std::to_string(pairs) + " operator pairs");
}

TEST(Acceptance, Criterion8bClMapAdditivity) {
  bool pass = true;
  size_t checks = 0;
  for (int n = 1; n <= 4 && pass; ++n) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 1; u < n; ++u) {
      edges.emplace_back(u, u + 1);
    }
    if (n >= 3) {
      edges.emplace_back(n, 1);
    }
    const Graph g = make_graph(n, edges);
    for (int c = 0; c <= n && pass; ++c) {
      const StabilizerSet s = standard_generators(g, c);
      std::vector<PauliOperator> ops;
      for (uint64_t z = 0; z < (1ULL << n); ++z) {
        for (uint64_t x = 0; x < (1ULL << n); ++x) {
          ops.push_back(PauliOperator::from_bits(z, x, 0, n, c));
        }
      }
      for (const auto& a : ops) {
        for (const auto& b : ops) {
          ++checks;
          if (cl_map(multiply(a, b), s).packed(n) !=
              (cl_map(a, s).packed(n) ^ cl_map(b, s).packed(n))) {
            pass = false;
            break;
          }
        }
        if (!pass) {
          break;
        }
      }
    }
  }
  report_line(8, "Cl-map additivity, exhaustive n <= 4", pass,
              std::to_string(checks) + " pairs");
}

TEST(Acceptance, Criterion8cClMapClosedFormVsGeneratorOracle) {
  bool pass = true;
  size_t checks = 0;
  for (const auto* fixture : {&fixtures::code_5_16_2_1(), &fixtures::code_7_4_5_4()}) {
    const StabilizerSet s =
        standard_generators(ring_graph(fixture->ring), fixture->params.c);
    const int t = fixture->params.n == 5 ? 1 : 2;
    for (const auto& e : enumerate_errors(fixture->params.n, t, fixture->params.c)) {
      ++checks;
      PauliOperator residual = e;
      for (int l = 1; l <= s.n(); ++l) {
        if (e.x_bit(l - 1)) {
          residual = multiply(residual, s.g(l));
        }
      }
      const auto closed = cl_map(e, s);
      if (!residual.z_only() ||
          residual.z_bits() != closed.packed(s.n())) {
        pass = false;
        break;
      }
    }
  }
  report_line(8, "Cl-map closed form vs generator-multiplication oracle", pass,
              std::to_string(checks) + " enumerated errors");
}

TEST(Acceptance, Criterion8dEncoderIsometry) {
  bool pass = true;
  std::string detail;
  for (const auto* fixture : {&fixtures::code_5_16_2_1(), &fixtures::code_7_4_5_4()}) {
    const StabilizerSet s =
        standard_generators(ring_graph(fixture->ring), fixture->params.c);
    ClassicalCode code{fixture->params.n, fixture->params.c, {}};
    for (const auto& cw : fixture->codewords) {
      code.codewords.push_back(parse_bitvec(cw).bits);
    }
    const Isometry enc = build_encoder(s, stripped_word_ops(code, s));
    const double defect = enc.unitarity_defect();
    pass &= defect < 1e-9;
    detail += fixture->name + " defect " + std::to_string(defect) + "; ";
  }
  report_line(8, "encoder isometry V^dagger V = I within 1e-9", pass, detail);
}

TEST(Acceptance, Criterion8eForwardPullBackIdentity) {
  bool pass = true;
  size_t checks = 0;
  for (const auto* fixture : {&fixtures::code_5_16_2_1(), &fixtures::code_7_4_5_4()}) {
    const int n = fixture->params.n;
    const int c = fixture->params.c;
    const CliffordMap map = synthesize_clifford(
        initial_generators(n, c), standard_generators(ring_graph(fixture->ring), c));
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 1000; ++trial) {
      ++checks;
      const PauliOperator p = PauliOperator::from_bits(
          rng() & mask_bits(n + c), rng() & mask_bits(n + c), static_cast<int>(rng() % 4), n, c);
      if (map.forward(map.pull_back(p)) != p) {
        pass = false;
        break;
      }
    }
  }
  report_line(8, "forward of pull_back is the identity on random Paulis", pass,
              std::to_string(checks) + " operators");
}
