#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "ebitforge/error_induction.hpp"
#include "ebitforge/pauli.hpp"

namespace ebitforge {

/// Classical binary code over Alice|Bob vectors of length n+c, stored packed.
/// Order is preserved (the bundled code tables pair codewords with word
/// operators by position).
struct ClassicalCode {
  int n = 0;
  int c = 0;
  std::vector<uint64_t> codewords;

  int length() const { return n + c; }
};

inline void validate_code(const ClassicalCode& code) {
  std::unordered_set<uint64_t> seen;
  bool has_zero = false;
  for (uint64_t cw : code.codewords) {
    if ((cw & ~mask_bits(code.length())) != 0) {
      throw std::invalid_argument("codeword exceeds code length");
    }
    if (!seen.insert(cw).second) {
      throw std::invalid_argument("duplicate codeword");
    }
    has_zero |= cw == 0;
  }
  if (!has_zero) {
    throw std::invalid_argument("classical code must contain the all-zero word");
  }
}

struct DetectsViolation {
  enum class Kind { classical, degenerate, unconfirmed_degenerate };
  Kind kind;
  size_t codeword_from = 0;   // classical: c1 with c1 xor e = c2
  size_t codeword_to = 0;     // classical: c2; degenerate: offending word op
  size_t error_index = 0;
  std::string describe() const;
};

struct DetectsResult {
  bool ok = true;
  std::optional<DetectsViolation> violation;
  explicit operator bool() const { return ok; }
};

/// Detection conditions for a candidate code against an induced error set:
///  (a) no codeword plus an induced vector lands on another codeword, and
///  (b) every error inducing the zero vector commutes with all word operators.
/// With word_ops empty, zero-vector errors are reported as violations that
/// still need quantum-side confirmation.
inline DetectsResult detects(const ClassicalCode& code,
                             std::span<const InducedError> induced,
                             std::span<const PauliOperator> word_ops) {
  if (!word_ops.empty() && word_ops.size() != code.codewords.size()) {
    throw std::invalid_argument("word operators must correspond one-to-one with codewords");
  }
  const int len = code.length();
  for (const auto& e : induced) {
    if ((e.packed(code.n) & ~mask_bits(len)) != 0) {
      throw std::invalid_argument("induced vector length mismatch with codewords");
    }
  }

  std::unordered_set<uint64_t> vectors;
  for (size_t k = 0; k < induced.size(); ++k) {
    if (induced[k].is_zero()) {
      if (word_ops.empty()) {
        return {false, DetectsViolation{DetectsViolation::Kind::unconfirmed_degenerate, 0, 0, k}};
      }
      for (size_t w = 0; w < word_ops.size(); ++w) {
        if (!commutes(induced[k].origin, word_ops[w])) {
          return {false, DetectsViolation{DetectsViolation::Kind::degenerate, 0, w, k}};
        }
      }
    } else {
      vectors.insert(induced[k].packed(code.n));
    }
  }

  for (size_t i = 0; i < code.codewords.size(); ++i) {
    for (size_t j = 0; j < code.codewords.size(); ++j) {
      if (i == j) {
        continue;
      }
      const uint64_t diff = code.codewords[i] ^ code.codewords[j];
      if (vectors.count(diff)) {
        size_t which = 0;
        for (size_t k = 0; k < induced.size(); ++k) {
          if (!induced[k].is_zero() && induced[k].packed(code.n) == diff) {
            which = k;
            break;
          }
        }
        return {false, DetectsViolation{DetectsViolation::Kind::classical, i, j, which}};
      }
    }
  }
  return {};
}

inline std::string DetectsViolation::describe() const {
  switch (kind) {
    case Kind::classical:
      return "codeword " + std::to_string(codeword_from) + " + error " +
             std::to_string(error_index) + " collides with codeword " +
             std::to_string(codeword_to);
    case Kind::degenerate:
      return "zero-induced error " + std::to_string(error_index) +
             " anticommutes with word operator " + std::to_string(codeword_to);
    case Kind::unconfirmed_degenerate:
      return "zero-induced error " + std::to_string(error_index) +
             " requires quantum-side confirmation (no word operators given)";
  }
  return {};
}

/// Induced vectors of all pairwise products E1*E2 over errors + identity.
/// Correcting the error set is detecting this difference set.  Products that
/// induce the zero vector are kept separately with their origin pairs; the
/// degeneracy branch handles them once word operators exist.
struct CorrectionDiffSet {
  std::vector<uint64_t> vectors;  // distinct, nonzero, sorted
  struct DegenerateProduct {
    PauliOperator first, second, product;
  };
  std::vector<DegenerateProduct> degenerate;

  /// Degenerate products wrapped for detects(); bits are all zero.
  std::vector<InducedError> degenerate_as_induced() const {
    std::vector<InducedError> out;
    out.reserve(degenerate.size());
    for (const auto& d : degenerate) {
      out.push_back(InducedError{0, 0, d.product});
    }
    return out;
  }
};

inline CorrectionDiffSet correction_diff_set(std::span<const PauliOperator> errors,
                                             const StabilizerSet& s) {
  const auto induced = induce_set(errors, s);
  const int n = s.n();
  CorrectionDiffSet out;
  std::unordered_set<uint64_t> seen;
  auto add = [&](uint64_t v) {
    if (seen.insert(v).second) {
      out.vectors.push_back(v);
    }
  };
  const PauliOperator identity(s.n(), s.c());
  for (size_t i = 0; i < induced.size(); ++i) {
    // Pair (E_i, I): the error itself.
    const uint64_t vi = induced[i].packed(n);
    if (vi == 0) {
      out.degenerate.push_back({errors[i], identity, errors[i]});
    } else {
      add(vi);
    }
    for (size_t j = i + 1; j < induced.size(); ++j) {
      const uint64_t v = vi ^ induced[j].packed(n);
      if (v == 0) {
        out.degenerate.push_back({errors[i], errors[j], multiply(errors[i], errors[j])});
      } else {
        add(v);
      }
    }
  }
  std::sort(out.vectors.begin(), out.vectors.end());
  return out;
}

/// Candidate vectors plus pairwise compatibility: u ~ v iff u != v and
/// u xor v is not in the difference set.  Adjacency is stored as bitset rows.
struct CompatibilityGraph {
  std::vector<uint64_t> candidates;
  int vector_len = 0;
  size_t words_per_row = 0;
  std::vector<uint64_t> adjacency;  // candidates.size() rows of bitset words

  bool adjacent(size_t i, size_t j) const {
    return (adjacency[i * words_per_row + j / 64] >> (j % 64)) & 1ULL;
  }
};

inline constexpr size_t kMaxCliqueVertices = 1 << 13;

inline CompatibilityGraph build_compatibility(std::vector<uint64_t> candidates,
                                              std::span<const uint64_t> diff_set,
                                              int vector_len) {
  if (candidates.size() > kMaxCliqueVertices) {
    throw std::invalid_argument(
        "candidate set too large for clique search (" + std::to_string(candidates.size()) +
        " > " + std::to_string(kMaxCliqueVertices) + "); restrict the candidate space");
  }
  CompatibilityGraph g;
  g.vector_len = vector_len;
  g.candidates = std::move(candidates);
  std::sort(g.candidates.begin(), g.candidates.end(),
            [vector_len](uint64_t a, uint64_t b) { return weight_lex_less(a, b, vector_len); });
  const size_t m = g.candidates.size();
  g.words_per_row = (m + 63) / 64;
  g.adjacency.assign(m * g.words_per_row, 0);
  std::unordered_set<uint64_t> diff(diff_set.begin(), diff_set.end());
  for (size_t i = 0; i < m; ++i) {
    for (size_t j = i + 1; j < m; ++j) {
      const uint64_t d = g.candidates[i] ^ g.candidates[j];
      if (!diff.count(d)) {
        g.adjacency[i * g.words_per_row + j / 64] |= 1ULL << (j % 64);
        g.adjacency[j * g.words_per_row + i / 64] |= 1ULL << (i % 64);
      }
    }
  }
  return g;
}

inline std::vector<uint64_t> all_candidates(int vector_len) {
  if (vector_len > 13) {
    throw std::invalid_argument("full candidate space too large; restrict it");
  }
  std::vector<uint64_t> out(size_t{1} << vector_len);
  for (size_t v = 0; v < out.size(); ++v) {
    out[v] = v;
  }
  return out;
}

/// Affine candidate subspace offset + span(basis), for additive-code search.
inline std::vector<uint64_t> affine_subspace_candidates(std::span<const uint64_t> basis,
                                                        uint64_t offset, int vector_len) {
  std::vector<uint64_t> out;
  out.reserve(size_t{1} << basis.size());
  out.push_back(offset & mask_bits(vector_len));
  for (uint64_t b : basis) {
    const size_t sz = out.size();
    for (size_t i = 0; i < sz; ++i) {
      out.push_back(out[i] ^ (b & mask_bits(vector_len)));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

struct CliqueResult {
  std::vector<uint64_t> members;  // candidate vectors, sorted weight/lex
  bool exact = false;             // search space exhausted
  uint64_t nodes_explored = 0;

  std::string optimality() const { return exact ? "exact" : "budget"; }
};

namespace detail {

class CliqueSearcher {
 public:
  CliqueSearcher(const CompatibilityGraph& g, size_t target, uint64_t budget)
      : g_(g), target_(target), budget_(budget), words_(g.words_per_row) {}

  void run(std::vector<uint32_t> initial) {
    best_ = std::move(initial);
    std::vector<uint64_t> p(words_, 0);
    const size_t m = g_.candidates.size();
    for (size_t v = 0; v < m; ++v) {
      p[v / 64] |= 1ULL << (v % 64);
    }
    std::vector<uint32_t> r;
    expand(r, p);
  }

  std::vector<uint32_t> best() const { return best_; }
  bool exhausted() const { return !stopped_; }
  uint64_t nodes() const { return nodes_; }

 private:
  // Tomita-style branch and bound: candidates are greedily colored in vertex
  // order and scanned in reverse color order, pruning when |R| + color bound
  // cannot beat the incumbent.  Each processed vertex is removed from the
  // working set so sibling branches never revisit it.
  void expand(std::vector<uint32_t>& r, std::vector<uint64_t> p) {
    if (stopped_) {
      return;
    }
    ++nodes_;
    if (nodes_ >= budget_ || (target_ > 0 && best_.size() >= target_)) {
      stopped_ = true;
      return;
    }

    std::vector<uint32_t> order;
    std::vector<uint32_t> color;
    color_sort(p, order, color);
    for (size_t idx = order.size(); idx-- > 0;) {
      if (r.size() + color[idx] <= best_.size()) {
        return;
      }
      const uint32_t v = order[idx];
      r.push_back(v);
      std::vector<uint64_t> next(words_);
      const uint64_t* row = &g_.adjacency[static_cast<size_t>(v) * words_];
      bool any = false;
      for (size_t w = 0; w < words_; ++w) {
        next[w] = p[w] & row[w];
        any |= next[w] != 0;
      }
      if (any) {
        expand(r, std::move(next));
      } else if (r.size() > best_.size()) {
        best_ = r;
      }
      r.pop_back();
      if (stopped_) {
        return;
      }
      p[v / 64] &= ~(1ULL << (v % 64));
    }
  }

  void color_sort(const std::vector<uint64_t>& p, std::vector<uint32_t>& order,
                  std::vector<uint32_t>& color) const {
    std::vector<uint64_t> uncolored = p;
    uint32_t current = 0;
    std::vector<uint64_t> cls(words_);
    while (true) {
      bool any = false;
      for (uint64_t w : uncolored) {
        any |= w != 0;
      }
      if (!any) {
        break;
      }
      ++current;
      cls = uncolored;
      while (true) {
        int v = first_bit(cls);
        if (v < 0) {
          break;
        }
        order.push_back(static_cast<uint32_t>(v));
        color.push_back(current);
        uncolored[v / 64] &= ~(1ULL << (v % 64));
        cls[v / 64] &= ~(1ULL << (v % 64));
        const uint64_t* row = &g_.adjacency[static_cast<size_t>(v) * words_];
        for (size_t w = 0; w < words_; ++w) {
          cls[w] &= ~row[w];
        }
      }
    }
  }

  static int first_bit(const std::vector<uint64_t>& bits) {
    for (size_t w = 0; w < bits.size(); ++w) {
      if (bits[w]) {
        return static_cast<int>(w * 64 + std::countr_zero(bits[w]));
      }
    }
    return -1;
  }

  const CompatibilityGraph& g_;
  size_t target_;
  uint64_t budget_;
  size_t words_;
  std::vector<uint32_t> best_;
  bool stopped_ = false;
  uint64_t nodes_ = 0;
};

inline std::vector<uint32_t> greedy_clique(const CompatibilityGraph& g,
                                           const std::vector<uint32_t>& order) {
  std::vector<uint32_t> clique;
  for (uint32_t v : order) {
    bool ok = true;
    for (uint32_t u : clique) {
      if (!g.adjacent(u, v)) {
        ok = false;
        break;
      }
    }
    if (ok) {
      clique.push_back(v);
    }
  }
  return clique;
}

}  // namespace detail

inline constexpr uint64_t kDefaultCliqueBudget = 50'000'000;

/// Best clique found by seeded greedy passes followed by exact branch and
/// bound under a node budget.  target > 0 stops the search early once a
/// clique of that size is in hand.  Deterministic for fixed seed and budget.
inline CliqueResult max_clique(const CompatibilityGraph& g, size_t target = 0,
                               uint64_t budget = kDefaultCliqueBudget,
                               uint64_t seed = 0) {
  CliqueResult result;
  const size_t m = g.candidates.size();
  if (m == 0) {
    result.exact = true;
    return result;
  }

  // Greedy fallback: canonical order first, then seeded shuffles.
  std::vector<uint32_t> order(m);
  for (size_t i = 0; i < m; ++i) {
    order[i] = static_cast<uint32_t>(i);
  }
  std::vector<uint32_t> best = detail::greedy_clique(g, order);
  std::mt19937_64 rng(seed);
  for (int restart = 0; restart < 16; ++restart) {
    std::shuffle(order.begin(), order.end(), rng);
    auto clique = detail::greedy_clique(g, order);
    if (clique.size() > best.size()) {
      best = std::move(clique);
    }
  }

  detail::CliqueSearcher searcher(g, target, budget);
  if (target == 0 || best.size() < target) {
    searcher.run(best);
    best = searcher.best();
  }

  result.nodes_explored = searcher.nodes();
  result.exact = searcher.exhausted() && searcher.nodes() > 0;
  result.members.reserve(best.size());
  for (uint32_t v : best) {
    result.members.push_back(g.candidates[v]);
  }
  std::sort(result.members.begin(), result.members.end(),
            [&g](uint64_t a, uint64_t b) { return weight_lex_less(a, b, g.vector_len); });
  return result;
}

/// XOR-translates a clique so that it contains the zero vector, preserving
/// compatibility (which depends only on pairwise XORs), and sorts it in
/// string order as the code tables print it.
inline ClassicalCode clique_to_code(const std::vector<uint64_t>& members, int n, int c) {
  if (members.empty()) {
    throw std::invalid_argument("cannot form a code from an empty clique");
  }
  uint64_t pivot = members.front();
  for (uint64_t v : members) {
    if (lex_less(v, pivot, n + c)) {
      pivot = v;
    }
  }
  ClassicalCode code{n, c, {}};
  code.codewords.reserve(members.size());
  for (uint64_t v : members) {
    code.codewords.push_back(v ^ pivot);
  }
  std::sort(code.codewords.begin(), code.codewords.end(),
            [n, c](uint64_t a, uint64_t b) { return lex_less(a, b, n + c); });
  validate_code(code);
  return code;
}

}  // namespace ebitforge
