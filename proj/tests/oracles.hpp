// Test-only oracles, independent of the library's arithmetic paths: dense
// Pauli matrices over exact Gaussian integers, a direct graph-state builder,
// and small brute-force evaluators.
#pragma once

#include <cstdint>
#include <vector>

#include "ebitforge/classical_search.hpp"
#include "ebitforge/graph_code.hpp"
#include "ebitforge/pauli.hpp"
#include "ebitforge/verifier.hpp"

namespace oracles {

struct Gi {  // Gaussian integer a + b*i
  long re = 0;
  long im = 0;
  friend Gi operator+(Gi a, Gi b) { return {a.re + b.re, a.im + b.im}; }
  friend Gi operator*(Gi a, Gi b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend bool operator==(const Gi&, const Gi&) = default;
};

struct GiMatrix {
  size_t dim = 0;
  std::vector<Gi> data;  // row-major

  static GiMatrix zero(size_t dim) { return {dim, std::vector<Gi>(dim * dim)}; }

  Gi& at(size_t r, size_t c) { return data[r * dim + c]; }
  const Gi& at(size_t r, size_t c) const { return data[r * dim + c]; }

  friend bool operator==(const GiMatrix&, const GiMatrix&) = default;
};

inline GiMatrix matmul(const GiMatrix& a, const GiMatrix& b) {
  GiMatrix out = GiMatrix::zero(a.dim);
  for (size_t i = 0; i < a.dim; ++i) {
    for (size_t k = 0; k < a.dim; ++k) {
      const Gi aik = a.at(i, k);
      if (aik == Gi{}) {
        continue;
      }
      for (size_t j = 0; j < a.dim; ++j) {
        out.at(i, j) = out.at(i, j) + aik * b.at(k, j);
      }
    }
  }
  return out;
}

inline GiMatrix kron(const GiMatrix& a, const GiMatrix& b) {
  GiMatrix out = GiMatrix::zero(a.dim * b.dim);
  for (size_t i = 0; i < a.dim; ++i) {
    for (size_t j = 0; j < a.dim; ++j) {
      for (size_t k = 0; k < b.dim; ++k) {
        for (size_t l = 0; l < b.dim; ++l) {
          out.at(i * b.dim + k, j * b.dim + l) = a.at(i, j) * b.at(k, l);
        }
      }
    }
  }
  return out;
}

inline GiMatrix scale(const GiMatrix& m, Gi s) {
  GiMatrix out = m;
  for (auto& v : out.data) {
    v = v * s;
  }
  return out;
}

inline Gi i_power(int m) {
  switch (((m % 4) + 4) % 4) {
    case 0: return {1, 0};
    case 1: return {0, 1};
    case 2: return {-1, 0};
    default: return {0, -1};
  }
}

// Site matrix Z^z X^x (Z applied on the left).
inline GiMatrix site_matrix(bool z, bool x) {
  GiMatrix m = GiMatrix::zero(2);
  if (!z && !x) {
    m.at(0, 0) = {1, 0};
    m.at(1, 1) = {1, 0};
  } else if (z && !x) {
    m.at(0, 0) = {1, 0};
    m.at(1, 1) = {-1, 0};
  } else if (!z && x) {
    m.at(0, 1) = {1, 0};
    m.at(1, 0) = {1, 0};
  } else {  // Z*X = [[0,1],[-1,0]]
    m.at(0, 1) = {1, 0};
    m.at(1, 0) = {-1, 0};
  }
  return m;
}

// Dense matrix of a Pauli operator: i^m times the site tensor product,
// qubit 1 outermost.
inline GiMatrix pauli_matrix(const ebitforge::PauliOperator& p) {
  GiMatrix m = site_matrix(p.z_bit(0), p.x_bit(0));
  for (int s = 1; s < p.total_len(); ++s) {
    m = kron(m, site_matrix(p.z_bit(s), p.x_bit(s)));
  }
  return scale(m, i_power(p.phase_exp()));
}

// Graph state built directly: CZ on every edge of |+>^n.
inline ebitforge::StateVector graph_state(const ebitforge::Graph& g) {
  const size_t dim = size_t{1} << g.n;
  ebitforge::StateVector v{g.n, std::vector<ebitforge::Amplitude>(dim, 1.0 / std::sqrt(double(dim)))};
  for (const auto& [a, b] : g.edges()) {
    const uint64_t mask = (1ULL << (g.n - a)) | (1ULL << (g.n - b));
    for (uint64_t idx = 0; idx < dim; ++idx) {
      if ((idx & mask) == mask) {
        v.amplitudes[idx] = -v.amplitudes[idx];
      }
    }
  }
  return v;
}

// Double-loop detection oracle: some codeword plus an induced vector lands on
// another codeword.
inline bool detects_oracle(const ebitforge::ClassicalCode& code,
                           const std::vector<uint64_t>& induced_vectors) {
  for (uint64_t c1 : code.codewords) {
    for (uint64_t c2 : code.codewords) {
      if (c1 == c2) {
        continue;
      }
      for (uint64_t e : induced_vectors) {
        if (e != 0 && (c1 ^ e) == c2) {
          return false;
        }
      }
    }
  }
  return true;
}

// Exhaustive subset-enumeration maximum clique, for graphs small enough to
// scan every vertex subset.
inline size_t max_clique_oracle(const ebitforge::CompatibilityGraph& g) {
  const size_t m = g.candidates.size();
  size_t best = 0;
  for (uint64_t subset = 1; subset < (1ULL << m); ++subset) {
    const size_t size = static_cast<size_t>(std::popcount(subset));
    if (size <= best) {
      continue;
    }
    bool ok = true;
    for (size_t i = 0; ok && i < m; ++i) {
      if (!((subset >> i) & 1ULL)) {
        continue;
      }
      for (size_t j = i + 1; j < m; ++j) {
        if (((subset >> j) & 1ULL) && !g.adjacent(i, j)) {
          ok = false;
          break;
        }
      }
    }
    if (ok) {
      best = size;
    }
  }
  return best;
}

}  // namespace oracles
