#pragma once

#include <fstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "ebitforge/eacws_code.hpp"
#include "ebitforge/verifier.hpp"

namespace ebitforge {

inline constexpr int kCodeFileVersion = 1;

/// Code files are versioned JSON; Pauli operators and codewords are stored in
/// the text formats the tables use, so fixtures stay human-diffable.
inline nlohmann::json code_to_json(const EacwsCode& code) {
  nlohmann::json j;
  j["format"] = "eacws-code";
  j["version"] = kCodeFileVersion;
  j["params"] = {{"n", code.params.n}, {"K", code.params.K}, {"d", code.params.d}, {"c", code.params.c}};
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& [u, v] : code.graph.edges()) {
    edges.push_back({u, v});
  }
  j["graph"] = {{"n", code.graph.n}, {"edges", edges}};
  nlohmann::json words = nlohmann::json::array();
  for (uint64_t cw : code.codewords.codewords) {
    words.push_back(bits_to_string(cw, code.codewords.n, code.codewords.c));
  }
  j["codewords"] = words;
  nlohmann::json ops = nlohmann::json::array();
  for (const auto& w : code.word_ops_encoded) {
    ops.push_back(render_pauli(w));
  }
  j["word_ops_encoded"] = ops;
  if (code.word_ops_initial) {
    nlohmann::json initial = nlohmann::json::array();
    for (const auto& w : *code.word_ops_initial) {
      initial.push_back(render_pauli(w));
    }
    j["word_ops_initial"] = initial;
  }
  j["provenance"] = code.provenance;
  return j;
}

inline EacwsCode code_from_json(const nlohmann::json& j) {
  if (j.value("format", "") != "eacws-code") {
    throw std::invalid_argument("not an eacws-code file");
  }
  if (j.value("version", 0) != kCodeFileVersion) {
    throw std::invalid_argument("unsupported code file version");
  }
  EacwsCode code;
  const auto& p = j.at("params");
  code.params = CodeParams{p.at("n").get<int>(), p.at("K").get<uint64_t>(),
                           p.at("d").get<int>(), p.at("c").get<int>()};
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : j.at("graph").at("edges")) {
    edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
  }
  code.graph = make_graph(j.at("graph").at("n").get<int>(), edges);
  code.codewords.n = code.params.n;
  code.codewords.c = code.params.c;
  for (const auto& cw : j.at("codewords")) {
    const BitVec v = parse_bitvec(cw.get<std::string>());
    if (v.alice_len != code.params.n || v.bob_len != code.params.c) {
      throw std::invalid_argument("codeword block lengths disagree with params: " + cw.get<std::string>());
    }
    code.codewords.codewords.push_back(v.bits);
  }
  for (const auto& w : j.at("word_ops_encoded")) {
    code.word_ops_encoded.push_back(parse_pauli(w.get<std::string>()));
  }
  if (j.contains("word_ops_initial")) {
    std::vector<PauliOperator> initial;
    for (const auto& w : j.at("word_ops_initial")) {
      initial.push_back(parse_pauli(w.get<std::string>()));
    }
    code.word_ops_initial = std::move(initial);
  }
  code.provenance = j.value("provenance", "");
  validate_eacws(code);
  return code;
}

inline void save_code_file(const EacwsCode& code, const std::string& path) {
  std::ofstream out(path);
  if (!out) {
    throw std::invalid_argument("cannot write code file: " + path);
  }
  out << code_to_json(code).dump(2) << "\n";
}

inline EacwsCode load_code_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::invalid_argument("cannot open code file: " + path);
  }
  nlohmann::json j;
  in >> j;
  return code_from_json(j);
}

inline nlohmann::json report_to_json(const VerificationReport& r) {
  nlohmann::json j;
  j["params"] = {{"n", r.params.n}, {"K", r.params.K}, {"d", r.params.d}, {"c", r.params.c}};
  j["word_ops_consistent"] = r.word_ops_consistent;
  j["orthonormal"] = r.orthonormal;
  j["detected_errors"] = r.detected_errors;
  if (r.distance.found) {
    j["distance"] = r.distance.value;
  } else {
    j["distance"] = "> " + std::to_string(r.distance.wmax);
  }
  j["wmax"] = r.distance.wmax;
  if (r.distance.witness) {
    j["witness"] = render_pauli(*r.distance.witness);
  }
  if (r.first_failure) {
    j["first_failure"] = render_pauli(r.first_failure->error);
  }
  j["pass"] = r.pass;
  j["timing_ms"] = {{"build", r.build_ms}, {"sweep", r.sweep_ms}};
  return j;
}

}  // namespace ebitforge
