#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ebitforge {

inline constexpr int kMaxQubits = 64;

inline constexpr uint64_t mask_bits(int count) {
  return count >= 64 ? ~0ULL : ((1ULL << count) - 1ULL);
}

inline int parity64(uint64_t v) { return std::popcount(v) & 1; }

/// Binary vector partitioned Alice|Bob, site 0 = leftmost character = bit 0.
struct BitVec {
  uint64_t bits = 0;
  int alice_len = 0;
  int bob_len = 0;

  int total_len() const { return alice_len + bob_len; }
  bool bit(int site) const { return (bits >> site) & 1ULL; }
  uint64_t alice_bits() const { return bits & mask_bits(alice_len); }
  uint64_t bob_bits() const { return (bits >> alice_len) & mask_bits(bob_len); }
  int weight() const { return std::popcount(bits & mask_bits(total_len())); }

  friend bool operator==(const BitVec&, const BitVec&) = default;
};

inline std::string bits_to_string(uint64_t bits, int alice_len, int bob_len) {
  std::string out;
  out.reserve(static_cast<size_t>(alice_len + bob_len) + 1);
  for (int s = 0; s < alice_len; ++s) {
    out += ((bits >> s) & 1ULL) ? '1' : '0';
  }
  out += '|';
  for (int s = alice_len; s < alice_len + bob_len; ++s) {
    out += ((bits >> s) & 1ULL) ? '1' : '0';
  }
  return out;
}

inline std::string to_string(const BitVec& v) {
  return bits_to_string(v.bits, v.alice_len, v.bob_len);
}

inline BitVec parse_bitvec(std::string_view text) {
  BitVec v;
  bool seen_bar = false;
  int site = 0;
  for (char ch : text) {
    if (ch == '|') {
      if (seen_bar) {
        throw std::invalid_argument("bit vector has more than one '|': " + std::string(text));
      }
      seen_bar = true;
      v.alice_len = site;
      continue;
    }
    if (ch != '0' && ch != '1') {
      throw std::invalid_argument(std::string("bad bit character '") + ch + "' in: " + std::string(text));
    }
    if (site >= kMaxQubits) {
      throw std::invalid_argument("bit vector longer than " + std::to_string(kMaxQubits));
    }
    if (ch == '1') {
      v.bits |= 1ULL << site;
    }
    ++site;
  }
  if (!seen_bar) {
    throw std::invalid_argument("bit vector missing '|' separator: " + std::string(text));
  }
  v.bob_len = site - v.alice_len;
  return v;
}

/// String order on packed vectors: site 0 (leftmost character) compares first.
inline bool lex_less(uint64_t a, uint64_t b, int len) {
  for (int s = 0; s < len; ++s) {
    const bool ba = (a >> s) & 1ULL;
    const bool bb = (b >> s) & 1ULL;
    if (ba != bb) {
      return !ba;
    }
  }
  return false;
}

/// Canonical candidate/vertex ordering: Hamming weight first, then string order.
inline bool weight_lex_less(uint64_t a, uint64_t b, int len) {
  const int wa = std::popcount(a & mask_bits(len));
  const int wb = std::popcount(b & mask_bits(len));
  if (wa != wb) {
    return wa < wb;
  }
  return lex_less(a, b, len);
}

}  // namespace ebitforge
