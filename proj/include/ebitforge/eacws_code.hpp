#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ebitforge/classical_search.hpp"
#include "ebitforge/graph_code.hpp"
#include "ebitforge/pauli.hpp"

namespace ebitforge {

/// Complete description of an entanglement-assisted codeword-stabilized code:
/// the graph and ebit count fix the stabilizer, the classical codewords fix
/// the word operators, and params carries the claimed ((n,K,d;c)).
struct EacwsCode {
  CodeParams params;
  Graph graph;
  ClassicalCode codewords;
  std::vector<PauliOperator> word_ops_encoded;
  std::optional<std::vector<PauliOperator>> word_ops_initial;
  std::string provenance;
};

inline void validate_eacws(const EacwsCode& code) {
  validate_params(code.params);
  if (code.graph.n != code.params.n) {
    throw std::invalid_argument("graph size disagrees with code parameters");
  }
  if (code.codewords.n != code.params.n || code.codewords.c != code.params.c) {
    throw std::invalid_argument("codeword partition disagrees with code parameters");
  }
  validate_code(code.codewords);
  if (code.codewords.codewords.size() != code.params.K ||
      code.word_ops_encoded.size() != code.params.K) {
    throw std::invalid_argument("codeword and word-operator counts must equal K");
  }
  for (const auto& w : code.word_ops_encoded) {
    if (w.alice_len() != code.params.n || w.bob_len() != code.params.c) {
      throw std::invalid_argument("word operator partition mismatch");
    }
    if (!w.identity_on_bob()) {
      throw std::invalid_argument("encoded word operators must act as identity on Bob");
    }
  }
  if (code.word_ops_initial && code.word_ops_initial->size() != code.params.K) {
    throw std::invalid_argument("pre-encoding word-operator count must equal K");
  }
}

}  // namespace ebitforge
