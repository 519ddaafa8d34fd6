#pragma once

#include <string>
#include <vector>

#include "ebitforge/eacws_code.hpp"
#include "ebitforge/graph_code.hpp"
#include "ebitforge/pauli.hpp"

namespace ebitforge::fixtures {

/// Bundled reference code with every published table: stabilizer generators,
/// the induced single-error vectors (where listed), classical codewords, and
/// both word-operator tables (encoded w and pre-encoding w', signs omitted).
struct ReferenceCode {
  std::string name;
  int ring = 0;
  CodeParams params;
  std::vector<std::string> generators;
  std::vector<std::string> induced_single_errors;  // empty when not tabulated
  std::vector<std::string> codewords;
  std::vector<std::string> word_ops;          // w_l, identity on Bob
  std::vector<std::string> word_ops_initial;  // w'_l
  std::string note;                           // caveat carried into provenance
};

inline const ReferenceCode& code_5_16_2_1() {
  static const ReferenceCode fixture{
      "((5,16,2;1))",
      5,
      CodeParams{5, 16, 2, 1},
      {
          "XZIIZ|I", "ZXZII|I", "IZXZI|I", "IIZXZ|I", "ZIIZX|Z", "IIIIZ|X",
      },
      {
          "10000|0", "01001|0", "11001|0",
          "01000|0", "10100|0", "11100|0",
          "00100|0", "01010|0", "01110|0",
          "00010|0", "00101|0", "00111|0",
          "00001|0", "10010|1", "10011|1",
      },
      {
          "00000|0", "00011|0", "00101|1", "00110|1",
          "01001|1", "01010|1", "01100|0", "01111|0",
          "10001|0", "10010|0", "10100|1", "10111|1",
          "11000|1", "11011|1", "11101|0", "11110|0",
      },
      {
          "IIIII|I", "IIIZZ|I", "ZIZZY|I", "ZIZIX|I",
          "ZZIZY|I", "ZZIIX|I", "IZZII|I", "IZZZZ|I",
          "ZIIIZ|I", "ZIIZI|I", "IIZZX|I", "IIZIY|I",
          "IZIZX|I", "IZIIY|I", "ZZZIZ|I", "ZZZZI|I",
      },
      {
          "IIIII|I", "IIIXX|I", "IIXIY|I", "IIXXZ|I",
          "IXIIY|I", "IXIXZ|I", "IXXII|I", "IXXXX|I",
          "XIIIX|I", "XIIXI|I", "XIXIZ|I", "XIXXY|I",
          "XXIIZ|I", "XXIXY|I", "XXXIX|I", "XXXXI|I",
      },
      "",
  };
  return fixture;
}

inline const ReferenceCode& code_7_4_5_4() {
  static const ReferenceCode fixture{
      "((7,4,5;4))",
      7,
      CodeParams{7, 4, 5, 4},
      {
          "XZIIIIZ|IIII", "ZXZIIII|IIII", "IZXZIII|IIII", "IIZXZII|ZIII",
          "IIIZXZI|IZII", "IIIIZXZ|IIZI", "ZIIIIZX|IIIZ", "IIIZIII|XIII",
          "IIIIZII|IXII", "IIIIIZI|IIXI", "IIIIIIZ|IIIX",
      },
      {},
      {
          "0000000|0000", "1011110|1110", "1100010|1111", "0011101|0001",
      },
      {
          "IIIIIII|IIII", "ZIIXYXZ|IIII", "IZZYXYY|IIII", "ZIZZZZY|IIII",
      },
      {
          "IIIIIII|IIII", "XIXYYYI|IIII", "XXIZZYZ|IIII", "IIXXXIY|IIII",
      },
      "caution: brute-force verification finds the undetected weight-3 error "
      "ZXZIIII|IIII (the g_2 bit pattern, a product of the colliding correctable "
      "errors Z_1X_2 and Z_3), so this word set has true distance 3; "
      "code_7_4_5_4_repaired.json carries a verified distance-5 set",
  };
  return fixture;
}

inline std::vector<PauliOperator> parse_ops(const std::vector<std::string>& texts) {
  std::vector<PauliOperator> out;
  out.reserve(texts.size());
  for (const auto& t : texts) {
    out.push_back(parse_pauli(t));
  }
  return out;
}

/// The fixture as a full code description on its ring graph.
inline EacwsCode as_eacws(const ReferenceCode& fixture) {
  EacwsCode code;
  code.params = fixture.params;
  code.graph = ring_graph(fixture.ring);
  code.codewords.n = fixture.params.n;
  code.codewords.c = fixture.params.c;
  for (const auto& cw : fixture.codewords) {
    code.codewords.codewords.push_back(parse_bitvec(cw).bits);
  }
  code.word_ops_encoded = parse_ops(fixture.word_ops);
  code.word_ops_initial = parse_ops(fixture.word_ops_initial);
  code.provenance = "bundled " + fixture.name + " reference code on the " +
                    std::to_string(fixture.ring) + "-ring";
  if (!fixture.note.empty()) {
    code.provenance += "; " + fixture.note;
  }
  validate_eacws(code);
  return code;
}

}  // namespace ebitforge::fixtures
