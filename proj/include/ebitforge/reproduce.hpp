#pragma once

#include <algorithm>
#include <chrono>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "ebitforge/fixtures.hpp"
#include "ebitforge/pipeline.hpp"

namespace ebitforge {

/// One published-value check: id, verdict, and a short outcome line.
struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double ms = 0;
};

namespace detail {

class CriterionTimer {
 public:
  CriterionTimer() : start_(std::chrono::steady_clock::now()) {}
  double ms() const { return ms_since(start_); }

 private:
  std::chrono::steady_clock::time_point start_;
};

inline CriterionResult finish(int id, std::string name, bool pass, std::string detail,
                              const CriterionTimer& timer, double budget_ms) {
  CriterionResult r{id, std::move(name), pass, std::move(detail), timer.ms()};
  if (budget_ms > 0 && r.ms >= budget_ms) {
    r.pass = false;
    r.detail += " [exceeded " + std::to_string(budget_ms) + " ms budget]";
  }
  return r;
}

}  // namespace detail

/// Worked Cl-map example: IXI|II on the 3-ring with c=2 maps to 101|10.
inline CriterionResult criterion_cl_map_example() {
  detail::CriterionTimer timer;
  const StabilizerSet stab = standard_generators(ring_graph(3), 2);
  const InducedError induced = cl_map(parse_pauli("IXI|II"), stab);
  const std::string got = induced_vector_string(induced, 3, 2);
  return detail::finish(1, "Cl map of IXI|II on the 3-ring, c=2", got == "101|10",
                        "Cl(IXI|II) = " + got, timer, 1.0);
}

/// The 15 single-qubit Alice errors on (5-ring, c=1) induce the tabulated
/// 15 vectors, as a set.
inline CriterionResult criterion_induced_table() {
  detail::CriterionTimer timer;
  const auto& fixture = fixtures::code_5_16_2_1();
  const StabilizerSet stab = standard_generators(ring_graph(5), 1);
  const auto induced = induce_set(enumerate_errors(5, 1, 1), stab);
  std::multiset<std::string> got;
  for (const auto& e : induced) {
    got.insert(induced_vector_string(e, 5, 1));
  }
  const std::multiset<std::string> want(fixture.induced_single_errors.begin(),
                                        fixture.induced_single_errors.end());
  const bool pass = induced.size() == 15 && got == want;
  return detail::finish(2, "induced-error table of ((5,16,2;1))", pass,
                        std::to_string(induced.size()) + " induced vectors", timer, 10.0);
}

/// All one- and two-qubit Alice errors on 7 qubits: exactly 210 operators.
inline CriterionResult criterion_error_count() {
  detail::CriterionTimer timer;
  const size_t count = enumerate_errors(7, 2, 4).size();
  return detail::finish(3, "error count for n=7, t=2", count == 210,
                        std::to_string(count) + " operators", timer, 0);
}

namespace detail {

/// Shared body of the two fixture checks: classical detection (when the
/// induced table is published), strip_bob against the w table, detection of
/// every error up to the claimed distance minus one, and the distance value.
inline CriterionResult check_fixture(int id, const fixtures::ReferenceCode& fixture,
                                     double budget_ms) {
  CriterionTimer timer;
  const int n = fixture.params.n;
  const int c = fixture.params.c;
  const int d = fixture.params.d;
  const StabilizerSet stab = standard_generators(ring_graph(fixture.ring), c);
  std::ostringstream detail_out;
  bool pass = true;

  ClassicalCode code{n, c, {}};
  for (const auto& cw : fixture.codewords) {
    code.codewords.push_back(parse_bitvec(cw).bits);
  }
  const auto word_ops = stripped_word_ops(code, stab);

  if (!fixture.induced_single_errors.empty()) {
    const auto induced = induce_set(enumerate_errors(n, 1, c), stab);
    const auto det = detects(code, induced, word_ops);
    pass &= det.ok;
    detail_out << "detects=" << (det.ok ? "ok" : det.violation->describe());
  }

  bool words_match = true;
  for (size_t i = 0; i < word_ops.size(); ++i) {
    words_match &= equal_up_to_phase(word_ops[i], parse_pauli(fixture.word_ops[i]));
  }
  pass &= words_match;
  detail_out << (detail_out.tellp() > 0 ? ", " : "") << "word ops "
             << (words_match ? "match" : "differ");

  const auto sweep = distance(stab, word_ops, d, 1e-9, 1);
  const bool distance_ok = sweep.found && sweep.value == d && sweep.witness &&
                           weight(*sweep.witness, Region::alice) == d;
  pass &= distance_ok;
  if (distance_ok) {
    // sweep.value == d means every error of weight < d was scanned and passed.
    detail_out << ", all " << enumerate_errors(n, d - 1, c).size()
               << " errors of weight < " << d << " detected, distance " << d;
  } else {
    detail_out << ", distance sweep returned " << sweep.to_string() << " instead of " << d;
  }
  if (sweep.witness) {
    detail_out << " (witness " << render_pauli(*sweep.witness) << ")";
  }
  return finish(id, fixture.name + " fixture", pass, detail_out.str(), timer, budget_ms);
}

}  // namespace detail

inline CriterionResult criterion_fixture_5_16_2_1() {
  return detail::check_fixture(4, fixtures::code_5_16_2_1(), 1000.0);
}

inline CriterionResult criterion_fixture_7_4_5_4() {
  return detail::check_fixture(5, fixtures::code_7_4_5_4(), 120'000.0);
}

/// Pulling each encoded word operator back through the synthesized encoder
/// lands in the published w' class modulo the initial stabilizer.
inline CriterionResult criterion_pull_back_equivalence() {
  detail::CriterionTimer timer;
  bool pass = true;
  std::ostringstream detail_out;
  for (const auto* fixture : {&fixtures::code_5_16_2_1(), &fixtures::code_7_4_5_4()}) {
    const int n = fixture->params.n;
    const int c = fixture->params.c;
    const StabilizerSet initial = initial_generators(n, c);
    const StabilizerSet target = standard_generators(ring_graph(fixture->ring), c);
    const CliffordMap map = synthesize_clifford(initial, target);
    ClassicalCode code{n, c, {}};
    for (const auto& cw : fixture->codewords) {
      code.codewords.push_back(parse_bitvec(cw).bits);
    }
    const auto word_ops = stripped_word_ops(code, target);
    bool all = true;
    for (size_t i = 0; i < word_ops.size(); ++i) {
      const PauliOperator back = map.pull_back(word_ops[i]);
      all &= equiv_mod_stabilizer(back, parse_pauli(fixture->word_ops_initial[i]), initial);
    }
    pass &= all;
    detail_out << fixture->name << (all ? " equivalent" : " NOT equivalent") << "; ";
  }
  return detail::finish(6, "pull-back equivalence with the w' tables", pass,
                        detail_out.str(), timer, 0);
}

/// Search rediscovers codes at least as large as the published ones, each
/// run within its own ten-minute budget.
inline CriterionResult criterion_search_rediscovery(uint64_t seed = 0, int threads = 1) {
  detail::CriterionTimer timer;
  std::ostringstream detail_out;
  bool pass = true;
  constexpr double kPerSearchBudgetMs = 600'000.0;

  auto run = [&](const char* label, const Graph& graph, int c, int weight, SearchMode mode,
                 uint64_t min_k, int min_d) {
    detail::CriterionTimer search_timer;
    try {
      SearchOptions opt;
      opt.weight = weight;
      opt.mode = mode;
      opt.seed = seed;
      opt.threads = threads;
      const SearchResult r = search_code(graph, c, opt);
      bool ok = r.verified && r.code.params.K >= min_k && r.code.params.d >= min_d;
      if (search_timer.ms() >= kPerSearchBudgetMs) {
        ok = false;
        detail_out << label << " exceeded its time budget; ";
      }
      pass &= ok;
      detail_out << label << ": K=" << r.code.params.K << ", d>=" << r.code.params.d
                 << " (" << r.optimality << "); ";
    } catch (const std::exception& ex) {
      pass = false;
      detail_out << label << " failed: " << ex.what() << "; ";
    }
  };
  run("5-ring detect t=1", ring_graph(5), 1, 1, SearchMode::detect, 16, 2);
  run("7-ring correct t=2", ring_graph(7), 4, 2, SearchMode::correct, 4, 5);
  return detail::finish(7, "search rediscovery of both codes", pass, detail_out.str(),
                        timer, 0);
}

inline std::vector<CriterionResult> run_paper_reproduction(uint64_t seed = 0, int threads = 1) {
  return {
      criterion_cl_map_example(),
      criterion_induced_table(),
      criterion_error_count(),
      criterion_fixture_5_16_2_1(),
      criterion_fixture_7_4_5_4(),
      criterion_pull_back_equivalence(),
      criterion_search_rediscovery(seed, threads),
  };
}

}  // namespace ebitforge
