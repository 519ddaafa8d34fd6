#pragma once

#include <cstdint>
#include <fstream>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ebitforge/pauli.hpp"

namespace ebitforge {

/// Simple undirected graph on Alice's n qubits; row i of the adjacency matrix
/// is the neighbor mask of vertex i+1.
struct Graph {
  int n = 0;
  std::vector<uint64_t> adjacency;

  bool has_edge(int u, int v) const {  // 1-indexed
    return (adjacency[u - 1] >> (v - 1)) & 1ULL;
  }

  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 1; u <= n; ++u) {
      for (int v = u + 1; v <= n; ++v) {
        if (has_edge(u, v)) {
          out.emplace_back(u, v);
        }
      }
    }
    return out;
  }

  friend bool operator==(const Graph&, const Graph&) = default;
};

inline Graph make_graph(int n, const std::vector<std::pair<int, int>>& edges) {
  if (n < 1 || n > kMaxQubits) {
    throw std::invalid_argument("graph vertex count out of range");
  }
  Graph g{n, std::vector<uint64_t>(static_cast<size_t>(n), 0)};
  for (const auto& [u, v] : edges) {
    if (u < 1 || u > n || v < 1 || v > n) {
      throw std::invalid_argument("graph edge endpoint out of range");
    }
    if (u == v) {
      throw std::invalid_argument("graph has a self-loop");
    }
    g.adjacency[u - 1] |= 1ULL << (v - 1);
    g.adjacency[v - 1] |= 1ULL << (u - 1);
  }
  return g;
}

inline Graph ring_graph(int n) {
  if (n < 3) {
    throw std::invalid_argument("ring graph needs at least 3 vertices");
  }
  std::vector<std::pair<int, int>> edges;
  for (int u = 1; u <= n; ++u) {
    edges.emplace_back(u, u % n + 1);
  }
  return make_graph(n, edges);
}

/// File format: first line "n <count>", then one "u v" edge per line,
/// 1-indexed.  Blank lines are ignored.
inline Graph parse_graph(std::istream& in) {
  std::string line;
  int n = -1;
  std::vector<std::pair<int, int>> edges;
  while (std::getline(in, line)) {
    std::istringstream row(line);
    std::string first;
    if (!(row >> first)) {
      continue;
    }
    if (n < 0) {
      int count = 0;
      if (first != "n" || !(row >> count)) {
        throw std::invalid_argument("graph file must start with a \"n <count>\" line");
      }
      n = count;
      continue;
    }
    int u = 0;
    int v = 0;
    try {
      u = std::stoi(first);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad graph edge line: " + line);
    }
    if (!(row >> v)) {
      throw std::invalid_argument("bad graph edge line: " + line);
    }
    edges.emplace_back(u, v);
  }
  if (n < 0) {
    throw std::invalid_argument("graph file is empty");
  }
  return make_graph(n, edges);
}

inline Graph load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::invalid_argument("cannot open graph file: " + path);
  }
  return parse_graph(in);
}

inline std::string adjacency_row_string(const Graph& g, int i) {  // 1-indexed
  std::string out;
  for (int v = 0; v < g.n; ++v) {
    out += ((g.adjacency[i - 1] >> v) & 1ULL) ? '1' : '0';
  }
  return out;
}

/// ((n,K,d;c)) parameters of a code.
struct CodeParams {
  int n = 0;
  uint64_t K = 1;
  int d = 1;
  int c = 0;

  friend bool operator==(const CodeParams&, const CodeParams&) = default;
};

inline void validate_params(const CodeParams& p) {
  if (p.n < 1 || p.c < 0 || p.c > p.n || p.n + p.c > kMaxQubits) {
    throw std::invalid_argument("code parameters out of range");
  }
  if (p.d < 1) {
    throw std::invalid_argument("code distance must be at least 1");
  }
  const int total = p.n + p.c;
  if (p.K < 1 || (total < 64 && p.K > (1ULL << total))) {
    throw std::invalid_argument("code dimension out of range");
  }
}

/// Maximal Abelian generator set on n Alice + c Bob qubits, ordered
/// g_1..g_n then h_1..h_c.  Generators g_1..g_{n-c} are isotropic; each
/// (g_{n-c+j}, h_j) is a symplectic pair attached to ebit j.
class StabilizerSet {
 public:
  StabilizerSet(int n, int c, std::vector<PauliOperator> generators)
      : n_(n), c_(c), generators_(std::move(generators)) {
    validate();
  }

  int n() const { return n_; }
  int c() const { return c_; }
  const std::vector<PauliOperator>& generators() const { return generators_; }

  const PauliOperator& g(int i) const { return generators_.at(i - 1); }          // 1..n
  const PauliOperator& h(int j) const { return generators_.at(n_ + j - 1); }     // 1..c

  bool is_isotropic(int index) const { return index <= n_ - c_; }  // index of g_i

  /// The generator carrying Z on Bob's qubit j, used to strip word operators.
  const PauliOperator& bob_z_generator(int j) const { return g(n_ - c_ + j); }

 private:
  void validate() const {
    if (c_ < 0 || c_ > n_ || n_ < 1) {
      throw std::invalid_argument("stabilizer set has invalid (n, c)");
    }
    if (generators_.size() != static_cast<size_t>(n_ + c_)) {
      throw std::invalid_argument("stabilizer set must have exactly n+c generators");
    }
    for (const auto& gen : generators_) {
      if (gen.alice_len() != n_ || gen.bob_len() != c_) {
        throw std::invalid_argument("stabilizer generator partition mismatch");
      }
    }
    for (size_t i = 0; i < generators_.size(); ++i) {
      for (size_t j = i + 1; j < generators_.size(); ++j) {
        if (!commutes(generators_[i], generators_[j])) {
          throw std::invalid_argument("stabilizer generators do not all commute");
        }
      }
    }
    if (symplectic_rank(generators_) != static_cast<int>(generators_.size())) {
      throw std::invalid_argument("stabilizer generators are not independent over GF(2)");
    }
  }

  static int symplectic_rank(const std::vector<PauliOperator>& ops) {
    // Gaussian elimination on (z|x) rows.
    std::vector<std::pair<uint64_t, uint64_t>> rows;
    rows.reserve(ops.size());
    for (const auto& op : ops) {
      rows.emplace_back(op.z_bits(), op.x_bits());
    }
    int rank = 0;
    for (int col = 0; col < 2 * kMaxQubits && rank < static_cast<int>(rows.size()); ++col) {
      const bool zpart = col < kMaxQubits;
      const uint64_t bit = 1ULL << (zpart ? col : col - kMaxQubits);
      int pivot = -1;
      for (int r = rank; r < static_cast<int>(rows.size()); ++r) {
        const uint64_t word = zpart ? rows[r].first : rows[r].second;
        if (word & bit) {
          pivot = r;
          break;
        }
      }
      if (pivot < 0) {
        continue;
      }
      std::swap(rows[rank], rows[pivot]);
      for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
        if (r == rank) {
          continue;
        }
        const uint64_t word = zpart ? rows[r].first : rows[r].second;
        if (word & bit) {
          rows[r].first ^= rows[rank].first;
          rows[r].second ^= rows[rank].second;
        }
      }
      ++rank;
    }
    return rank;
  }

  int n_;
  int c_;
  std::vector<PauliOperator> generators_;
};

/// Standard-form generators of the encoded base state:
///   g_i = X_i Z^{r_i} | I          for i = 1..n-c
///   g_i = X_i Z^{r_i} | Z_j        for i = n-c+1..n, j = i-(n-c)
///   h_j = Z_i | X_j
/// where r_i is row i of the adjacency matrix.  All phases are 0.
inline StabilizerSet standard_generators(const Graph& graph, int c) {
  const int n = graph.n;
  if (c < 0 || c > n) {
    throw std::invalid_argument("ebit count out of range");
  }
  std::vector<PauliOperator> gens;
  gens.reserve(static_cast<size_t>(n + c));
  for (int i = 1; i <= n; ++i) {
    uint64_t z = graph.adjacency[i - 1];
    const uint64_t x = 1ULL << (i - 1);
    if (i > n - c) {
      const int j = i - (n - c);
      z |= 1ULL << (n + j - 1);
    }
    gens.push_back(PauliOperator::from_bits(z, x, 0, n, c));
  }
  for (int j = 1; j <= c; ++j) {
    const int i = n - c + j;
    const uint64_t z = 1ULL << (i - 1);
    const uint64_t x = 1ULL << (n + j - 1);
    gens.push_back(PauliOperator::from_bits(z, x, 0, n, c));
  }
  return StabilizerSet(n, c, std::move(gens));
}

/// Generators fixing the pre-encoding state |0>^(n-c) |Phi+>^c:
///   Z_i|I for i = 1..n-c, then the pairs Z_i|Z_j and X_i|X_j for the
///   ebit-attached qubits i = n-c+1..n, j = i-(n-c).
inline StabilizerSet initial_generators(int n, int c) {
  if (n < 1 || c < 0 || c > n) {
    throw std::invalid_argument("ebit count out of range");
  }
  std::vector<PauliOperator> gens;
  gens.reserve(static_cast<size_t>(n + c));
  for (int i = 1; i <= n; ++i) {
    uint64_t z = 1ULL << (i - 1);
    if (i > n - c) {
      const int j = i - (n - c);
      z |= 1ULL << (n + j - 1);
    }
    gens.push_back(PauliOperator::from_bits(z, 0, 0, n, c));
  }
  for (int j = 1; j <= c; ++j) {
    const int i = n - c + j;
    const uint64_t x = (1ULL << (i - 1)) | (1ULL << (n + j - 1));
    gens.push_back(PauliOperator::from_bits(0, x, 0, n, c));
  }
  return StabilizerSet(n, c, std::move(gens));
}

}  // namespace ebitforge
