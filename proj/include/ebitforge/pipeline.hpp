#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ebitforge/classical_search.hpp"
#include "ebitforge/eacws_code.hpp"
#include "ebitforge/error_induction.hpp"
#include "ebitforge/graph_code.hpp"
#include "ebitforge/verifier.hpp"
#include "ebitforge/word_synthesis.hpp"

namespace ebitforge {

namespace detail {

inline double ms_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace detail

/// Word operators for a codeword list: raw Z operators stripped of their Bob
/// support against the given stabilizer.
inline std::vector<PauliOperator> stripped_word_ops(const ClassicalCode& code,
                                                    const StabilizerSet& s) {
  std::vector<PauliOperator> out;
  out.reserve(code.codewords.size());
  for (uint64_t cw : code.codewords) {
    out.push_back(strip_bob(codeword_to_z_operator(cw, code.n, code.c), s));
  }
  return out;
}

/// Pre-encoding word operators w' = U^dagger w U for the standard encoding
/// map of the code's graph.
inline std::vector<PauliOperator> initial_word_ops(const Graph& graph, int c,
                                                   std::span<const PauliOperator> word_ops) {
  const CliffordMap map =
      synthesize_clifford(initial_generators(graph.n, c), standard_generators(graph, c));
  std::vector<PauliOperator> out;
  out.reserve(word_ops.size());
  for (const auto& w : word_ops) {
    out.push_back(map.pull_back(w));
  }
  return out;
}

struct VerifyOptions {
  int wmax = 0;  // 0: sweep up to the claimed distance
  double tol = 1e-9;
  int threads = 1;
};

/// Ground-truth verification of a code file.  The codewords are the source of
/// truth: word operators are re-derived by strip_bob and the stored ones must
/// agree modulo the stabilizer.  Then the basis must be orthonormal and an
/// exhaustive sweep must find no undetected error below the claimed distance.
inline VerificationReport verify_code(const EacwsCode& code, const VerifyOptions& opt = {}) {
  validate_eacws(code);
  VerificationReport report;
  report.params = code.params;
  report.distance.wmax = opt.wmax > 0 ? opt.wmax : code.params.d;

  const auto t0 = std::chrono::steady_clock::now();
  const StabilizerSet stab = standard_generators(code.graph, code.params.c);
  const auto word_ops = stripped_word_ops(code.codewords, stab);
  report.word_ops_consistent = true;
  for (size_t i = 0; i < word_ops.size(); ++i) {
    report.word_ops_consistent &=
        equiv_mod_stabilizer(word_ops[i], code.word_ops_encoded[i], stab);
  }
  std::vector<StateVector> basis;
  try {
    basis = basis_states(stab, word_ops, opt.tol);
    report.orthonormal = true;
  } catch (const std::runtime_error&) {
    report.orthonormal = false;
    report.pass = false;
    report.build_ms = detail::ms_since(t0);
    return report;
  }
  report.build_ms = detail::ms_since(t0);

  const auto t1 = std::chrono::steady_clock::now();
  const int wmax = report.distance.wmax;
  DistanceResult sweep;
  sweep.wmax = wmax;
  for (int w = 1; w <= wmax && !sweep.found; ++w) {
    const auto errors = enumerate_errors_of_weight(code.params.n, w, code.params.c);
    const auto kl = kl_check(basis, errors, opt.tol, opt.threads);
    if (kl.ok) {
      report.detected_errors += kl.checked;
    } else {
      report.detected_errors += kl.checked - 1;
      sweep.found = true;
      sweep.value = w;
      sweep.witness = kl.witness->error;
      report.first_failure = kl.witness;
    }
    sweep.errors_checked += kl.checked;
  }
  report.distance = sweep;
  report.sweep_ms = detail::ms_since(t1);
  report.pass = report.orthonormal && report.word_ops_consistent &&
                (!sweep.found || sweep.value >= code.params.d);
  return report;
}

enum class SearchMode { detect, correct };

struct SearchOptions {
  int weight = 1;                 // error weight t
  SearchMode mode = SearchMode::detect;
  size_t target_k = 0;            // 0: search to optimality
  uint64_t budget = kDefaultCliqueBudget;
  uint64_t seed = 0;
  int threads = 1;
  double tol = 1e-9;
};

struct SearchResult {
  EacwsCode code;
  std::string optimality;
  uint64_t nodes_explored = 0;
  size_t diff_set_size = 0;
  size_t degenerate_products = 0;
  size_t errors_verified = 0;  // detection checks run during verification
  bool verified = false;
};

/// Full construction pipeline: enumerate errors, induce the binary error
/// model, pick the difference set for the mode, search a maximum clique over
/// the candidate vectors, strip Bob support from the word operators, and
/// confirm the detection condition on dense state vectors.
inline SearchResult search_code(const Graph& graph, int c, const SearchOptions& opt) {
  const int n = graph.n;
  const StabilizerSet stab = standard_generators(graph, c);
  const auto errors = enumerate_errors(n, opt.weight, c);

  // Difference set: induced vectors themselves for detection, all pairwise
  // products for correction.
  std::vector<uint64_t> diff;
  std::vector<InducedError> degenerate;
  if (opt.mode == SearchMode::detect) {
    const auto induced = induce_set(errors, stab);
    std::unordered_set<uint64_t> seen;
    for (const auto& e : induced) {
      if (e.is_zero()) {
        degenerate.push_back(e);
      } else if (seen.insert(e.packed(n)).second) {
        diff.push_back(e.packed(n));
      }
    }
    std::sort(diff.begin(), diff.end());
  } else {
    auto diffset = correction_diff_set(errors, stab);
    diff = std::move(diffset.vectors);
    degenerate = diffset.degenerate_as_induced();
  }

  const CompatibilityGraph compat = build_compatibility(all_candidates(n + c), diff, n + c);
  const CliqueResult clique = max_clique(compat, opt.target_k, opt.budget, opt.seed);

  SearchResult result;
  result.optimality = clique.optimality();
  result.nodes_explored = clique.nodes_explored;
  result.diff_set_size = diff.size();
  result.degenerate_products = degenerate.size();

  ClassicalCode code = clique_to_code(clique.members, n, c);
  const auto word_ops = stripped_word_ops(code, stab);

  // Degenerate products slipped past the clique constraints; the classical
  // commute branch rejects them before the state-level check.
  if (!degenerate.empty()) {
    const auto check = detects(code, degenerate, word_ops);
    if (!check.ok) {
      throw std::runtime_error("searched code fails the degeneracy condition: " +
                               check.violation->describe());
    }
  }

  const int claimed_d = opt.mode == SearchMode::detect ? opt.weight + 1 : 2 * opt.weight + 1;
  const auto basis = basis_states(stab, word_ops, opt.tol);
  const auto verify_errors = enumerate_errors(n, claimed_d - 1, c);
  const auto kl = kl_check(basis, verify_errors, opt.tol, opt.threads);
  result.errors_verified = kl.checked;
  result.verified = kl.ok;
  if (!kl.ok) {
    throw std::runtime_error("searched code fails detection for " +
                             render_pauli(kl.witness->error));
  }

  result.code.params = CodeParams{n, code.codewords.size(), claimed_d, c};
  result.code.graph = graph;
  result.code.codewords = std::move(code);
  result.code.word_ops_encoded = word_ops;
  result.code.word_ops_initial = initial_word_ops(graph, c, word_ops);
  result.code.provenance =
      "search: t=" + std::to_string(opt.weight) +
      (opt.mode == SearchMode::detect ? " detect" : " correct") +
      ", clique " + result.optimality + " after " + std::to_string(result.nodes_explored) +
      " nodes, diff set " + std::to_string(result.diff_set_size);
  validate_eacws(result.code);
  return result;
}

}  // namespace ebitforge
