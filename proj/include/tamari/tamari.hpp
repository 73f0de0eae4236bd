#pragma once

// The Tamari poset T(n) on planar binary trees of degree n.
//
// Orientation: the rotation (A v B) v C -> A v (B v C) goes up. The left comb
// is the minimum and the right comb the maximum, so that Y/Y <= Y\Y and the
// product S * T is the sum over the interval [S/T, S\T].

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tamari/check_report.hpp"
#include "tamari/exactlin.hpp"
#include "tamari/tree.hpp"

namespace tamari {

/// Largest degree for which the dense order relation is built.
inline constexpr int kMaxPosetDegree = 11;

/// All trees obtained from t by a single upward rotation (A v B) v C -> A v (B v C).
std::vector<Tree> covers_of(const Tree& t);

/// Dense boolean relation stored as packed 64-bit rows.
class BitMatrix {
 public:
  BitMatrix() = default;
  explicit BitMatrix(std::size_t n) : n_(n), words_((n + 63) / 64), bits_(n * words_, 0) {}

  std::size_t size() const noexcept { return n_; }
  bool test(std::size_t i, std::size_t j) const noexcept {
    return (bits_[i * words_ + j / 64] >> (j % 64)) & 1u;
  }
  void set(std::size_t i, std::size_t j) noexcept { bits_[i * words_ + j / 64] |= std::uint64_t{1} << (j % 64); }
  /// row(dst) |= row(src)
  void merge_row(std::size_t dst, std::size_t src) noexcept {
    for (std::size_t w = 0; w < words_; ++w) bits_[dst * words_ + w] |= bits_[src * words_ + w];
  }
  std::size_t row_count(std::size_t i) const noexcept;

  /// Calls f(j) for every j set in both row a of *this and row b of other.
  template <typename F>
  void for_each_common(std::size_t a, const BitMatrix& other, std::size_t b, F&& f) const {
    for (std::size_t w = 0; w < words_; ++w) {
      std::uint64_t word = bits_[a * words_ + w] & other.bits_[b * words_ + w];
      while (word) {
        const int bit = __builtin_ctzll(word);
        f(w * 64 + static_cast<std::size_t>(bit));
        word &= word - 1;
      }
    }
  }
  template <typename F>
  void for_each(std::size_t a, F&& f) const {
    for_each_common(a, *this, a, std::forward<F>(f));
  }

 private:
  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

class TamariPoset {
 public:
  /// Builds T(n): covering edges by rotation, a linear extension by
  /// topological sort, and the order as the reflexive-transitive closure.
  static TamariPoset build(int n);

  int degree() const noexcept { return degree_; }
  std::size_t size() const noexcept { return basis_->size(); }
  const std::vector<Tree>& basis() const noexcept { return *basis_; }
  /// (lower rank, upper rank) for every covering pair, sorted.
  const std::vector<std::pair<std::uint64_t, std::uint64_t>>& covers() const noexcept { return covers_; }
  /// Ranks in an order where v <= w implies v appears no later than w.
  const Extension& linear_extension() const noexcept { return extension_; }

  bool leq(std::uint64_t v, std::uint64_t w) const noexcept { return up_.test(v, w); }
  /// Throws DegreeMismatch unless both trees have this poset's degree.
  bool leq(const Tree& s, const Tree& t) const;

  const Tree& min_element() const;
  const Tree& max_element() const;

  /// All U with s <= U <= t, in canonical order; empty when s is not below t.
  std::vector<Tree> interval(const Tree& s, const Tree& t) const;
  std::vector<std::uint64_t> interval_ranks(std::uint64_t s, std::uint64_t t) const;
  template <typename F>
  void for_each_in_interval(std::uint64_t s, std::uint64_t t, F&& f) const {
    up_.for_each_common(s, down_, t, std::forward<F>(f));
  }
  /// Ranks w with v <= w, resp. w <= v.
  std::vector<std::uint64_t> upset(std::uint64_t v) const;
  std::vector<std::uint64_t> downset(std::uint64_t v) const;

  std::optional<std::uint64_t> meet(std::uint64_t a, std::uint64_t b) const;
  std::optional<std::uint64_t> join(std::uint64_t a, std::uint64_t b) const;

  /// Number of comparable pairs (v, w) with v <= w.
  std::size_t relation_size() const noexcept;

  /// L(v, w) = 1 iff v <= w, rows and columns in canonical order.
  IntMatrix zeta_matrix() const;
  /// Exact inverse of the zeta matrix.
  IntMatrix mobius_matrix() const;

 private:
  std::optional<std::uint64_t> bound(std::uint64_t a, std::uint64_t b, bool lower) const;

  int degree_ = 0;
  const std::vector<Tree>* basis_ = nullptr;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> covers_;
  Extension extension_;
  std::vector<std::size_t> position_;  // inverse of extension_
  BitMatrix up_;    // up_(v, w) iff v <= w
  BitMatrix down_;  // down_(w, v) iff v <= w
};

/// Shared, lazily built T(n). Thread-safe; the reference stays valid.
const TamariPoset& tamari_poset(int n);

/// Graphviz digraph: one node per tree labeled by its literal, one edge per
/// covering pair, minimum at the bottom.
std::string to_dot(const TamariPoset& poset);

CheckReport check_poset_axioms(int n);
/// Every pair has a meet and a join.
CheckReport check_lattice(int n);
/// leq(S, T) iff leq(mirror(T), mirror(S)).
CheckReport check_mirror_anti_automorphism(int n);

/// For every T1 in Y(n1), T2 in Y(n2): (s1, s2) -> s1\s2 is a bijection from
/// [T1, 1] x [T2, 1] onto [T1\T2, 1].
CheckReport check_lemma_2_1(int n1, int n2);
/// For every T1, T2: the intervals [s1/s2, s1\s2] over s1 <= T1, s2 <= T2 are
/// pairwise disjoint with union [0, T1\T2].
CheckReport check_lemma_3_3(int n1, int n2);

}  // namespace tamari
