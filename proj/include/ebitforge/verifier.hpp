#pragma once

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "ebitforge/error_induction.hpp"
#include "ebitforge/graph_code.hpp"
#include "ebitforge/pauli.hpp"

namespace ebitforge {

using Amplitude = std::complex<double>;

/// Dense state caps at 24 qubits; the bundled codes need 64 and 2048
/// amplitudes, so the ceiling is about desk-scale ground truth, not size.
inline constexpr int kMaxDenseQubits = 24;

struct StateVector {
  int num_qubits = 0;
  std::vector<Amplitude> amplitudes;

  static StateVector basis_state(int num_qubits, uint64_t index) {
    StateVector v{num_qubits, std::vector<Amplitude>(size_t{1} << num_qubits)};
    v.amplitudes[index] = 1.0;
    return v;
  }

  double norm() const {
    double s = 0;
    for (const auto& a : amplitudes) {
      s += std::norm(a);
    }
    return std::sqrt(s);
  }
};

inline Amplitude inner_product(const StateVector& a, const StateVector& b) {
  Amplitude s = 0;
  for (size_t i = 0; i < a.amplitudes.size(); ++i) {
    s += std::conj(a.amplitudes[i]) * b.amplitudes[i];
  }
  return s;
}

namespace detail {

/// Site k of a Pauli (qubit k+1, leftmost letter) is state-index bit
/// total-1-k: qubit 1 is the most significant bit, matching the tensor
/// product order of the letters.
inline uint64_t site_mask_to_state_mask(uint64_t bits, int total) {
  uint64_t out = 0;
  for (int s = 0; s < total; ++s) {
    if ((bits >> s) & 1ULL) {
      out |= 1ULL << (total - 1 - s);
    }
  }
  return out;
}

inline Amplitude phase_factor(int phase_exp) {
  switch (phase_exp & 3) {
    case 0: return {1, 0};
    case 1: return {0, 1};
    case 2: return {-1, 0};
    default: return {0, -1};
  }
}

}  // namespace detail

/// Applies i^m Z^z X^x as an index permutation plus phase:
/// out[j] = i^m * (-1)^(z.j) * in[j ^ x].
inline StateVector apply_pauli(const PauliOperator& p, const StateVector& in) {
  const int total = p.total_len();
  if (total != in.num_qubits) {
    throw std::invalid_argument("operator size does not match state");
  }
  const uint64_t zmask = detail::site_mask_to_state_mask(p.z_bits(), total);
  const uint64_t xmask = detail::site_mask_to_state_mask(p.x_bits(), total);
  const Amplitude global = detail::phase_factor(p.phase_exp());
  StateVector out{in.num_qubits, std::vector<Amplitude>(in.amplitudes.size())};
  for (uint64_t j = 0; j < in.amplitudes.size(); ++j) {
    const Amplitude v = in.amplitudes[j ^ xmask];
    out.amplitudes[j] = (parity64(zmask & j) ? -global : global) * v;
  }
  return out;
}

/// The unique +1 eigenstate of a maximal Abelian generator set, built by
/// applying the projectors (I+g)/2 to a computational basis seed.  A seed
/// with zero overlap is detected exactly (all amplitudes are dyadic) and the
/// next basis state is tried.
inline StateVector stabilizer_state(const StabilizerSet& s) {
  const int total = s.n() + s.c();
  if (total > kMaxDenseQubits) {
    throw std::invalid_argument("state vector would exceed the dense-qubit cap");
  }
  const size_t dim = size_t{1} << total;
  for (uint64_t seed = 0; seed < dim; ++seed) {
    StateVector v = StateVector::basis_state(total, seed);
    bool dead = false;
    for (const auto& g : s.generators()) {
      const StateVector gv = apply_pauli(g, v);
      double norm2 = 0;
      for (size_t i = 0; i < dim; ++i) {
        v.amplitudes[i] = 0.5 * (v.amplitudes[i] + gv.amplitudes[i]);
        norm2 += std::norm(v.amplitudes[i]);
      }
      if (norm2 < 1e-12) {
        dead = true;
        break;
      }
    }
    if (dead) {
      continue;
    }
    const double nrm = v.norm();
    for (auto& a : v.amplitudes) {
      a /= nrm;
    }
    return v;
  }
  throw std::logic_error("no basis seed overlaps the stabilizer state");
}

/// Basis states w_l|S>; throws if any pair fails orthogonality at tol.
inline std::vector<StateVector> basis_states(const StabilizerSet& s,
                                             std::span<const PauliOperator> word_ops,
                                             double tol = 1e-9) {
  const StateVector base = stabilizer_state(s);
  std::vector<StateVector> basis;
  basis.reserve(word_ops.size());
  for (const auto& w : word_ops) {
    basis.push_back(apply_pauli(w, base));
  }
  for (size_t i = 0; i < basis.size(); ++i) {
    for (size_t j = i + 1; j < basis.size(); ++j) {
      if (std::abs(inner_product(basis[i], basis[j])) > tol) {
        throw std::runtime_error("word operators " + std::to_string(i) + " and " +
                                 std::to_string(j) + " give non-orthogonal basis states");
      }
    }
  }
  return basis;
}

struct KlWitness {
  PauliOperator error;
  std::vector<Amplitude> matrix;  // K x K, row-major
};

struct KlResult {
  bool ok = true;
  size_t checked = 0;
  std::optional<KlWitness> witness;
};

namespace detail {

inline std::vector<Amplitude> kl_matrix(std::span<const StateVector> basis,
                                        const PauliOperator& e) {
  const size_t k = basis.size();
  std::vector<Amplitude> m(k * k);
  for (size_t j = 0; j < k; ++j) {
    const StateVector ew = apply_pauli(e, basis[j]);
    for (size_t i = 0; i < k; ++i) {
      m[i * k + j] = inner_product(basis[i], ew);
    }
  }
  return m;
}

inline bool kl_matrix_ok(std::span<const Amplitude> m, size_t k, double tol) {
  const Amplitude lambda = m[0];
  for (size_t i = 0; i < k; ++i) {
    for (size_t j = 0; j < k; ++j) {
      const Amplitude want = i == j ? lambda : Amplitude{0, 0};
      if (std::abs(m[i * k + j] - want) > tol) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace detail

/// Detection condition: <w_i|E|w_j> = lambda_E delta_ij for every error.
/// Errors are scanned in order; the first violator (by position) is returned
/// with its matrix.  Work parallelizes over errors.
inline KlResult kl_check(std::span<const StateVector> basis,
                         std::span<const PauliOperator> errors, double tol = 1e-9,
                         int threads = 1) {
  KlResult result;
  result.checked = errors.size();
  if (basis.empty() || errors.empty()) {
    return result;
  }
  const size_t k = basis.size();

  size_t first_bad = errors.size();
  if (threads <= 1) {
    for (size_t idx = 0; idx < errors.size(); ++idx) {
      const auto m = detail::kl_matrix(basis, errors[idx]);
      if (!detail::kl_matrix_ok(m, k, tol)) {
        first_bad = idx;
        break;
      }
    }
  } else {
    std::vector<size_t> local(static_cast<size_t>(threads), errors.size());
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) {
      pool.emplace_back([&, t] {
        for (size_t idx = static_cast<size_t>(t); idx < errors.size();
             idx += static_cast<size_t>(threads)) {
          const auto m = detail::kl_matrix(basis, errors[idx]);
          if (!detail::kl_matrix_ok(m, k, tol)) {
            local[static_cast<size_t>(t)] = idx;
            return;
          }
        }
      });
    }
    for (auto& th : pool) {
      th.join();
    }
    for (size_t v : local) {
      first_bad = std::min(first_bad, v);
    }
  }

  if (first_bad < errors.size()) {
    result.ok = false;
    result.checked = first_bad + 1;
    result.witness = KlWitness{errors[first_bad], detail::kl_matrix(basis, errors[first_bad])};
  }
  return result;
}

struct DistanceResult {
  bool found = false;  // false: every weight up to wmax is detected
  int value = 0;       // smallest undetected weight when found
  int wmax = 0;
  std::optional<PauliOperator> witness;
  size_t errors_checked = 0;

  std::string to_string() const {
    return found ? std::to_string(value) : "> " + std::to_string(wmax);
  }
};

/// Smallest Alice-only error weight failing the detection condition, by
/// exhaustive sweep of weights 1..wmax.
inline DistanceResult distance(const StabilizerSet& s,
                               std::span<const PauliOperator> word_ops, int wmax,
                               double tol = 1e-9, int threads = 1) {
  if (wmax < 1 || wmax > s.n()) {
    throw std::invalid_argument("distance sweep weight out of range");
  }
  const auto basis = basis_states(s, word_ops, tol);
  DistanceResult result;
  result.wmax = wmax;
  for (int w = 1; w <= wmax; ++w) {
    const auto errors = enumerate_errors_of_weight(s.n(), w, s.c());
    const auto kl = kl_check(basis, errors, tol, threads);
    result.errors_checked += kl.checked;
    if (!kl.ok) {
      result.found = true;
      result.value = w;
      result.witness = kl.witness->error;
      return result;
    }
  }
  return result;
}

/// Encoding isometry: columns are the basis states.
struct Isometry {
  int num_qubits = 0;
  std::vector<StateVector> columns;

  size_t rows() const { return size_t{1} << num_qubits; }
  size_t cols() const { return columns.size(); }

  /// max |(V^dagger V - I)_{ij}|.
  double unitarity_defect() const {
    double worst = 0;
    for (size_t i = 0; i < columns.size(); ++i) {
      for (size_t j = 0; j < columns.size(); ++j) {
        const Amplitude want = i == j ? Amplitude{1, 0} : Amplitude{0, 0};
        worst = std::max(worst, std::abs(inner_product(columns[i], columns[j]) - want));
      }
    }
    return worst;
  }
};

inline Isometry build_encoder(const StabilizerSet& s,
                              std::span<const PauliOperator> word_ops,
                              double tol = 1e-9) {
  return Isometry{s.n() + s.c(), basis_states(s, word_ops, tol)};
}

struct VerificationReport {
  CodeParams params;
  bool word_ops_consistent = false;    // stored ops match the re-derived ones
  bool orthonormal = false;
  size_t detected_errors = 0;          // errors confirmed detected by the sweep
  std::optional<KlWitness> first_failure;
  DistanceResult distance;
  bool pass = false;                   // no undetected error below the claimed d
  double build_ms = 0;
  double sweep_ms = 0;
};

}  // namespace ebitforge
