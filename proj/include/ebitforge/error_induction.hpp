#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "ebitforge/graph_code.hpp"
#include "ebitforge/pauli.hpp"

namespace ebitforge {

/// Effective Z-only error induced by an Alice-side Pauli, as a binary vector
/// over Alice and Bob.  Physical errors never touch Bob's qubits; Bob bits
/// appear only through the ebit-attached generators.
struct InducedError {
  uint64_t alice_bits = 0;
  uint64_t bob_bits = 0;
  PauliOperator origin;

  uint64_t packed(int n) const { return alice_bits | (bob_bits << n); }
  bool is_zero() const { return alice_bits == 0 && bob_bits == 0; }
};

/// Cl map: an error i^m Z^v X^u on Alice's qubits induces the binary vector
///   alice = v xor (xor of adjacency rows r_l with u_l = 1)
///   bob_j = u_{n-c+j}
/// with r_l read off the standard-form generator g_l = X_l Z^{r_l}|...
/// Equivalently: multiplying the error by g_l for every l with u_l = 1 leaves
/// a Z-only operator supported exactly on alice|bob.
inline InducedError cl_map(const PauliOperator& e, const StabilizerSet& s) {
  if (e.alice_len() != s.n() || e.bob_len() != s.c()) {
    throw std::invalid_argument("error operator partition mismatch");
  }
  if (!e.identity_on_bob()) {
    throw std::invalid_argument("physical errors must act as identity on Bob");
  }
  const int n = s.n();
  const int c = s.c();
  uint64_t alice = e.z_bits() & mask_bits(n);
  uint64_t bob = 0;
  const uint64_t u = e.x_bits() & mask_bits(n);
  for (int l = 1; l <= n; ++l) {
    if ((u >> (l - 1)) & 1ULL) {
      const PauliOperator& g = s.g(l);
      alice ^= g.z_bits() & mask_bits(n);
      bob ^= (g.z_bits() >> n) & mask_bits(c);
    }
  }
  return InducedError{alice, bob, e};
}

/// Every Pauli on Alice's n qubits with 1 <= weight <= t, identity on Bob.
/// Order: weight-major, then site combinations in lexicographic order, then
/// letters per site with X < Y < Z.
inline std::vector<PauliOperator> enumerate_errors(int n, int t, int bob_len = 0) {
  if (t < 1 || t > n) {
    throw std::invalid_argument("error weight bound out of range");
  }
  // Letter order X < Y < Z with Y = (z=1,x=1) carrying phase 3.
  struct Letter {
    uint64_t z, x;
    int phase;
  };
  static constexpr Letter kLetters[3] = {{0, 1, 0}, {1, 1, 3}, {1, 0, 0}};

  std::vector<PauliOperator> out;
  std::vector<int> sites;
  for (int w = 1; w <= t; ++w) {
    sites.resize(static_cast<size_t>(w));
    for (int i = 0; i < w; ++i) {
      sites[i] = i;
    }
    while (true) {
      std::vector<int> letters(static_cast<size_t>(w), 0);
      while (true) {
        uint64_t z = 0;
        uint64_t x = 0;
        int phase = 0;
        for (int i = 0; i < w; ++i) {
          const Letter& l = kLetters[letters[i]];
          z |= l.z << sites[i];
          x |= l.x << sites[i];
          phase += l.phase;
        }
        out.push_back(PauliOperator::from_bits(z, x, phase & 3, n, bob_len));
        int pos = w - 1;
        while (pos >= 0 && letters[pos] == 2) {
          letters[pos] = 0;
          --pos;
        }
        if (pos < 0) {
          break;
        }
        ++letters[pos];
      }
      int pos = w - 1;
      while (pos >= 0 && sites[pos] == n - w + pos) {
        --pos;
      }
      if (pos < 0) {
        break;
      }
      ++sites[pos];
      for (int i = pos + 1; i < w; ++i) {
        sites[i] = sites[i - 1] + 1;
      }
    }
  }
  return out;
}

/// As enumerate_errors but a single exact weight, same ordering.
inline std::vector<PauliOperator> enumerate_errors_of_weight(int n, int w, int bob_len = 0) {
  auto all = enumerate_errors(n, w, bob_len);
  std::vector<PauliOperator> out;
  for (auto& e : all) {
    if (weight(e, Region::alice) == w) {
      out.push_back(std::move(e));
    }
  }
  return out;
}

inline std::vector<InducedError> induce_set(std::span<const PauliOperator> errors,
                                            const StabilizerSet& s) {
  std::vector<InducedError> out;
  out.reserve(errors.size());
  for (const auto& e : errors) {
    out.push_back(cl_map(e, s));
  }
  return out;
}

inline std::string induced_vector_string(const InducedError& e, int n, int c) {
  return bits_to_string(e.packed(n), n, c);
}

/// Report line in the table style "PAULI -> aaaaa|bb".
inline std::string induced_report_line(const InducedError& e, int n, int c) {
  return render_pauli(e.origin) + " -> " + induced_vector_string(e, n, c);
}

}  // namespace ebitforge
