#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "ebitforge/graph_code.hpp"
#include "ebitforge/pauli.hpp"

namespace ebitforge {

/// Z on every set bit of the codeword, Alice and Bob blocks respected.
inline PauliOperator codeword_to_z_operator(uint64_t codeword, int n, int c) {
  if ((codeword & ~mask_bits(n + c)) != 0) {
    throw std::invalid_argument("codeword length mismatch");
  }
  return PauliOperator::from_bits(codeword, 0, 0, n, c);
}

/// Cancels every Z on Bob's side by multiplying in the generator carrying a Z
/// on that Bob qubit, in ascending Bob-qubit order.  The result equals the
/// input times a stabilizer element, acts as identity on Bob, and in general
/// picks up X and Y letters on Alice.
inline PauliOperator strip_bob(const PauliOperator& wz, const StabilizerSet& s) {
  if ((wz.x_bits() & wz.bob_mask()) != 0) {
    throw std::invalid_argument("word operator has X support on Bob");
  }
  if (!wz.z_only()) {
    throw std::invalid_argument("strip_bob expects a Z-only word operator");
  }
  PauliOperator w = wz;
  for (int j = 1; j <= s.c(); ++j) {
    const int site = s.n() + j - 1;
    if (w.z_bit(site)) {
      w = multiply(w, s.bob_z_generator(j));
    }
  }
  return w;
}

/// True iff a and b differ by an element of the group generated by S,
/// ignoring global phase: the symplectic vector of a*b^dagger must lie in
/// the GF(2) row space of the generators.
inline bool equiv_mod_stabilizer(const PauliOperator& a, const PauliOperator& b,
                                 const StabilizerSet& s) {
  require_same_partition(a, b);
  uint64_t tz = a.z_bits() ^ b.z_bits();
  uint64_t tx = a.x_bits() ^ b.x_bits();
  // Reduce (tz|tx) against the generator rows.
  std::vector<std::pair<uint64_t, uint64_t>> rows;
  for (const auto& g : s.generators()) {
    rows.emplace_back(g.z_bits(), g.x_bits());
  }
  for (int col = 0; col < 2 * kMaxQubits; ++col) {
    const bool zpart = col < kMaxQubits;
    const uint64_t bit = 1ULL << (zpart ? col : col - kMaxQubits);
    size_t pivot = rows.size();
    for (size_t r = 0; r < rows.size(); ++r) {
      const uint64_t word = zpart ? rows[r].first : rows[r].second;
      if (word & bit) {
        pivot = r;
        break;
      }
    }
    if (pivot == rows.size()) {
      continue;
    }
    const auto prow = rows[pivot];
    rows.erase(rows.begin() + static_cast<long>(pivot));
    for (auto& row : rows) {
      const uint64_t word = zpart ? row.first : row.second;
      if (word & bit) {
        row.first ^= prow.first;
        row.second ^= prow.second;
      }
    }
    if ((zpart ? tz : tx) & bit) {
      tz ^= prow.first;
      tx ^= prow.second;
    }
  }
  return tz == 0 && tx == 0;
}

/// Clifford encoding map represented as a symplectic basis correspondence:
/// 2(n+c) source operators (stabilizer generators completed with conjugate
/// destabilizer partners) and their images.  Conjugation decomposes a Pauli
/// over one basis and rebuilds it over the other, tracking phases through
/// ordered products.
class CliffordMap {
 public:
  CliffordMap(int n, int c, std::vector<PauliOperator> source_stab,
              std::vector<PauliOperator> source_destab,
              std::vector<PauliOperator> image_stab,
              std::vector<PauliOperator> image_destab)
      : n_(n),
        c_(c),
        source_stab_(std::move(source_stab)),
        source_destab_(std::move(source_destab)),
        image_stab_(std::move(image_stab)),
        image_destab_(std::move(image_destab)) {
    validate();
  }

  int n() const { return n_; }
  int c() const { return c_; }
  const std::vector<PauliOperator>& source_stab() const { return source_stab_; }
  const std::vector<PauliOperator>& source_destab() const { return source_destab_; }
  const std::vector<PauliOperator>& image_stab() const { return image_stab_; }
  const std::vector<PauliOperator>& image_destab() const { return image_destab_; }

  /// U p U^dagger.
  PauliOperator forward(const PauliOperator& p) const {
    return transport(p, source_stab_, source_destab_, image_stab_, image_destab_);
  }

  /// U^dagger p U; forward(pull_back(p)) == p exactly.
  PauliOperator pull_back(const PauliOperator& p) const {
    return transport(p, image_stab_, image_destab_, source_stab_, source_destab_);
  }

 private:
  PauliOperator transport(const PauliOperator& p,
                          const std::vector<PauliOperator>& from_stab,
                          const std::vector<PauliOperator>& from_destab,
                          const std::vector<PauliOperator>& to_stab,
                          const std::vector<PauliOperator>& to_destab) const {
    if (p.alice_len() != n_ || p.bob_len() != c_) {
      throw std::invalid_argument("operator partition mismatch with Clifford map");
    }
    const size_t k = from_stab.size();
    std::vector<int> stab_coeff(k), destab_coeff(k);
    for (size_t i = 0; i < k; ++i) {
      stab_coeff[i] = symplectic_product(p, from_destab[i]);
      destab_coeff[i] = symplectic_product(p, from_stab[i]);
    }
    PauliOperator q(n_, c_);
    PauliOperator out(n_, c_);
    for (size_t i = 0; i < k; ++i) {
      if (stab_coeff[i]) {
        q = multiply(q, from_stab[i]);
        out = multiply(out, to_stab[i]);
      }
    }
    for (size_t i = 0; i < k; ++i) {
      if (destab_coeff[i]) {
        q = multiply(q, from_destab[i]);
        out = multiply(out, to_destab[i]);
      }
    }
    if (q.z_bits() != p.z_bits() || q.x_bits() != p.x_bits()) {
      throw std::logic_error("Pauli does not decompose over the symplectic basis");
    }
    const int residual = (p.phase_exp() - q.phase_exp() + 4) & 3;
    return PauliOperator::from_bits(out.z_bits(), out.x_bits(),
                                    out.phase_exp() + residual, n_, c_);
  }

  void validate() const {
    const size_t k = static_cast<size_t>(n_ + c_);
    if (source_stab_.size() != k || source_destab_.size() != k ||
        image_stab_.size() != k || image_destab_.size() != k) {
      throw std::invalid_argument("Clifford map basis has wrong size");
    }
    auto check_pairing = [k](const std::vector<PauliOperator>& stab,
                             const std::vector<PauliOperator>& destab) {
      for (size_t i = 0; i < k; ++i) {
        for (size_t j = 0; j < k; ++j) {
          if (symplectic_product(stab[i], stab[j]) != 0 ||
              symplectic_product(destab[i], destab[j]) != 0 ||
              symplectic_product(stab[i], destab[j]) != (i == j ? 1 : 0)) {
            throw std::invalid_argument("basis is not symplectic");
          }
        }
      }
    };
    check_pairing(source_stab_, source_destab_);
    check_pairing(image_stab_, image_destab_);
  }

  int n_;
  int c_;
  std::vector<PauliOperator> source_stab_, source_destab_;
  std::vector<PauliOperator> image_stab_, image_destab_;
};

namespace detail {

/// Solves for a Pauli (as a 2L-bit z|x vector) with prescribed symplectic
/// products against the given operators, by GF(2) elimination.  Free
/// variables are set to zero, so the solution is deterministic.
inline std::pair<uint64_t, uint64_t> solve_symplectic(
    const std::vector<const PauliOperator*>& constraints,
    const std::vector<int>& rhs, int total_len) {
  struct Row {
    uint64_t zc, xc;  // coefficients multiplying the unknown's z and x bits
    int b;
  };
  // sym(v, g) = v_z . g_x + v_x . g_z, so the coefficient masks swap blocks.
  std::vector<Row> rows;
  rows.reserve(constraints.size());
  for (size_t i = 0; i < constraints.size(); ++i) {
    rows.push_back({constraints[i]->x_bits(), constraints[i]->z_bits(), rhs[i]});
  }
  const int cols = 2 * total_len;
  std::vector<int> pivot_col;
  std::vector<Row*> pivot_row;
  size_t rank = 0;
  for (int col = 0; col < cols && rank < rows.size(); ++col) {
    const bool zpart = col < total_len;
    const uint64_t bit = 1ULL << (zpart ? col : col - total_len);
    size_t pr = rows.size();
    for (size_t r = rank; r < rows.size(); ++r) {
      const uint64_t word = zpart ? rows[r].zc : rows[r].xc;
      if (word & bit) {
        pr = r;
        break;
      }
    }
    if (pr == rows.size()) {
      continue;
    }
    std::swap(rows[rank], rows[pr]);
    for (size_t r = 0; r < rows.size(); ++r) {
      if (r == rank) {
        continue;
      }
      const uint64_t word = zpart ? rows[r].zc : rows[r].xc;
      if (word & bit) {
        rows[r].zc ^= rows[rank].zc;
        rows[r].xc ^= rows[rank].xc;
        rows[r].b ^= rows[rank].b;
      }
    }
    pivot_col.push_back(col);
    ++rank;
  }
  for (size_t r = rank; r < rows.size(); ++r) {
    if (rows[r].b) {
      throw std::invalid_argument("symplectic completion has no solution");
    }
  }
  uint64_t vz = 0;
  uint64_t vx = 0;
  for (size_t r = 0; r < rank; ++r) {
    if (rows[r].b) {
      const int col = pivot_col[r];
      if (col < total_len) {
        vz |= 1ULL << col;
      } else {
        vx |= 1ULL << (col - total_len);
      }
    }
  }
  return {vz, vx};
}

}  // namespace detail

/// Builds the encoding map taking each initial-state generator to the
/// corresponding standard-form generator.  Source destabilizers are fixed:
/// X_i|I for the isotropic Z_i|I, and (X_i|I, I|Z_j) for the ebit pair
/// (Z_i|Z_j, X_i|X_j).  Image destabilizers are completed by symplectic
/// Gram-Schmidt.  All basis elements are plain letter tensors (Hermitian).
inline CliffordMap synthesize_clifford(const StabilizerSet& initial,
                                       const StabilizerSet& target) {
  if (initial.n() != target.n() || initial.c() != target.c()) {
    throw std::invalid_argument("initial and target stabilizer sizes differ");
  }
  const int n = initial.n();
  const int c = initial.c();
  const int total = n + c;

  std::vector<PauliOperator> source_stab = initial.generators();
  std::vector<PauliOperator> image_stab = target.generators();

  std::vector<PauliOperator> source_destab;
  source_destab.reserve(static_cast<size_t>(total));
  for (int i = 1; i <= n; ++i) {
    // Partner of Z_i|I and of Z_i|Z_j alike.
    source_destab.push_back(PauliOperator::from_bits(0, 1ULL << (i - 1), 0, n, c));
  }
  for (int j = 1; j <= c; ++j) {
    // Partner of X_i|X_j.
    source_destab.push_back(PauliOperator::from_bits(1ULL << (n + j - 1), 0, 0, n, c));
  }

  std::vector<PauliOperator> image_destab;
  image_destab.reserve(static_cast<size_t>(total));
  for (int k = 0; k < total; ++k) {
    std::vector<const PauliOperator*> constraints;
    std::vector<int> rhs;
    for (int m = 0; m < total; ++m) {
      constraints.push_back(&image_stab[static_cast<size_t>(m)]);
      rhs.push_back(m == k ? 1 : 0);
    }
    for (int m = 0; m < k; ++m) {
      constraints.push_back(&image_destab[static_cast<size_t>(m)]);
      rhs.push_back(0);
    }
    const auto [vz, vx] = detail::solve_symplectic(constraints, rhs, total);
    image_destab.push_back(PauliOperator::from_letters(vz, vx, n, c));
  }

  return CliffordMap(n, c, std::move(source_stab), std::move(source_destab),
                     std::move(image_stab), std::move(image_destab));
}

}  // namespace ebitforge
