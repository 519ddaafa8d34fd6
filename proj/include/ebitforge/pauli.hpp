#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include "ebitforge/bitvec.hpp"

namespace ebitforge {

enum class Region { alice, bob, all };

/// Phase-tracked Pauli operator on n Alice qubits followed by c Bob qubits.
///
/// Convention: operator = i^phase_exp * Z^z * X^x, applied sitewise with the
/// Z factor on the left.  Site k (0-based; qubit k+1, Alice block first) lives
/// in bit k of the packed words.  A Y letter is stored as (z=1, x=1) with a
/// phase contribution of 3, since Y = i^3 * Z * X.
///
/// Multiplication moves the left operand's X factors past the right operand's
/// Z factors, each overlapping site contributing a factor of -1:
///   (i^a Z^za X^xa)(i^b Z^zb X^xb)
///     = i^(a + b + 2*|xa & zb|) Z^(za^zb) X^(xa^xb).
///
/// Values are immutable after construction.
class PauliOperator {
 public:
  PauliOperator() = default;

  PauliOperator(int alice_len, int bob_len)
      : alice_len_(check_len(alice_len, bob_len)), bob_len_(bob_len) {}

  static PauliOperator from_bits(uint64_t z_bits, uint64_t x_bits, int phase_exp,
                                 int alice_len, int bob_len) {
    PauliOperator p(alice_len, bob_len);
    const uint64_t mask = mask_bits(p.total_len());
    if ((z_bits & ~mask) != 0 || (x_bits & ~mask) != 0) {
      throw std::invalid_argument("Pauli bit vector exceeds operator length");
    }
    p.z_bits_ = z_bits;
    p.x_bits_ = x_bits;
    p.phase_exp_ = ((phase_exp % 4) + 4) % 4;
    return p;
  }

  /// The plain tensor of I/X/Y/Z letters for the given supports (Hermitian).
  static PauliOperator from_letters(uint64_t z_bits, uint64_t x_bits,
                                    int alice_len, int bob_len) {
    const int phase = (3 * std::popcount(z_bits & x_bits)) & 3;
    return from_bits(z_bits, x_bits, phase, alice_len, bob_len);
  }

  uint64_t z_bits() const { return z_bits_; }
  uint64_t x_bits() const { return x_bits_; }
  int phase_exp() const { return phase_exp_; }
  int alice_len() const { return alice_len_; }
  int bob_len() const { return bob_len_; }
  int total_len() const { return alice_len_ + bob_len_; }

  bool z_bit(int site) const { return (z_bits_ >> site) & 1ULL; }
  bool x_bit(int site) const { return (x_bits_ >> site) & 1ULL; }

  bool is_identity_bits() const { return z_bits_ == 0 && x_bits_ == 0; }
  bool is_identity() const { return is_identity_bits() && phase_exp_ == 0; }

  bool z_only() const { return x_bits_ == 0; }

  uint64_t bob_mask() const { return mask_bits(bob_len_) << alice_len_; }
  bool identity_on_bob() const {
    return ((z_bits_ | x_bits_) & bob_mask()) == 0;
  }

  char letter(int site) const {
    const bool z = z_bit(site);
    const bool x = x_bit(site);
    if (z && x) return 'Y';
    if (z) return 'Z';
    if (x) return 'X';
    return 'I';
  }

  friend bool operator==(const PauliOperator&, const PauliOperator&) = default;

 private:
  static int check_len(int alice_len, int bob_len) {
    if (alice_len < 0 || bob_len < 0 || alice_len + bob_len > kMaxQubits) {
      throw std::invalid_argument("Pauli operator length out of range");
    }
    return alice_len;
  }

  uint64_t z_bits_ = 0;
  uint64_t x_bits_ = 0;
  int phase_exp_ = 0;
  int alice_len_ = 0;
  int bob_len_ = 0;
};

inline bool equal_up_to_phase(const PauliOperator& a, const PauliOperator& b) {
  return a.alice_len() == b.alice_len() && a.bob_len() == b.bob_len() &&
         a.z_bits() == b.z_bits() && a.x_bits() == b.x_bits();
}

inline void require_same_partition(const PauliOperator& a, const PauliOperator& b) {
  if (a.alice_len() != b.alice_len() || a.bob_len() != b.bob_len()) {
    throw std::invalid_argument("Pauli operator partition mismatch");
  }
}

inline PauliOperator multiply(const PauliOperator& a, const PauliOperator& b) {
  require_same_partition(a, b);
  const int phase = a.phase_exp() + b.phase_exp() +
                    2 * std::popcount(a.x_bits() & b.z_bits());
  return PauliOperator::from_bits(a.z_bits() ^ b.z_bits(),
                                  a.x_bits() ^ b.x_bits(), phase,
                                  a.alice_len(), a.bob_len());
}

/// Symplectic inner product mod 2; zero exactly when the operators commute.
inline int symplectic_product(const PauliOperator& a, const PauliOperator& b) {
  require_same_partition(a, b);
  return parity64(a.x_bits() & b.z_bits()) ^ parity64(a.z_bits() & b.x_bits());
}

inline bool commutes(const PauliOperator& a, const PauliOperator& b) {
  return symplectic_product(a, b) == 0;
}

inline int weight(const PauliOperator& p, Region region = Region::all) {
  uint64_t support = p.z_bits() | p.x_bits();
  switch (region) {
    case Region::alice:
      support &= mask_bits(p.alice_len());
      break;
    case Region::bob:
      support &= p.bob_mask();
      break;
    case Region::all:
      break;
  }
  return std::popcount(support);
}

/// Parses the paper-style text form: optional sign prefix (+, -, i, +i, -i),
/// letters I/X/Y/Z, and exactly one '|' between the Alice and Bob blocks.
inline PauliOperator parse_pauli(std::string_view text) {
  size_t pos = 0;
  int phase = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    negative = text[pos] == '-';
    ++pos;
  }
  if (pos < text.size() && text[pos] == 'i') {
    phase = 1;
    ++pos;
  }
  if (negative) {
    phase = (phase + 2) & 3;
  }

  uint64_t z = 0;
  uint64_t x = 0;
  int site = 0;
  int alice_len = -1;
  for (; pos < text.size(); ++pos) {
    const char ch = text[pos];
    if (ch == '|') {
      if (alice_len >= 0) {
        throw std::invalid_argument("Pauli string has more than one '|': " + std::string(text));
      }
      alice_len = site;
      continue;
    }
    if (site >= kMaxQubits) {
      throw std::invalid_argument("Pauli string longer than " + std::to_string(kMaxQubits));
    }
    switch (ch) {
      case 'I':
        break;
      case 'X':
        x |= 1ULL << site;
        break;
      case 'Z':
        z |= 1ULL << site;
        break;
      case 'Y':
        z |= 1ULL << site;
        x |= 1ULL << site;
        phase = (phase + 3) & 3;
        break;
      default:
        throw std::invalid_argument(std::string("bad Pauli character '") + ch + "' in: " + std::string(text));
    }
    ++site;
  }
  if (alice_len < 0) {
    throw std::invalid_argument("Pauli string missing '|' separator: " + std::string(text));
  }
  return PauliOperator::from_bits(z, x, phase, alice_len, site - alice_len);
}

/// Letters only, no sign: the form the word-operator tables use.
inline std::string render_pauli_unsigned(const PauliOperator& p) {
  std::string out;
  for (int s = 0; s < p.alice_len(); ++s) {
    out += p.letter(s);
  }
  out += '|';
  for (int s = p.alice_len(); s < p.total_len(); ++s) {
    out += p.letter(s);
  }
  return out;
}

/// Canonical text form: letters carry their intrinsic Y phases; only the
/// residual global phase is printed, and +1 gets no prefix.
inline std::string render_pauli(const PauliOperator& p) {
  const int letter_phase = (3 * std::popcount(p.z_bits() & p.x_bits())) & 3;
  const int residual = (p.phase_exp() - letter_phase + 4) & 3;
  std::string out;
  switch (residual) {
    case 0: break;
    case 1: out += 'i'; break;
    case 2: out += '-'; break;
    case 3: out += "-i"; break;
  }
  for (int s = 0; s < p.alice_len(); ++s) {
    out += p.letter(s);
  }
  out += '|';
  for (int s = p.alice_len(); s < p.total_len(); ++s) {
    out += p.letter(s);
  }
  return out;
}

}  // namespace ebitforge
