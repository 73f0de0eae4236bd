#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tamari {

/// Planar binary tree. Either the leaf `|` (degree 0) or a node with an
/// ordered pair of subtrees. Trees are immutable values with structural
/// equality; subtrees are shared.
class Tree {
 public:
  /// The leaf `|`.
  Tree() = default;

  static Tree leaf() { return Tree(); }
  /// The unique tree with one node, Y = (..).
  static Tree y();

  bool is_leaf() const noexcept { return node_ == nullptr; }
  int degree() const noexcept;

  /// Children of a node; throws std::invalid_argument on the leaf.
  const Tree& left() const;
  const Tree& right() const;

  friend bool operator==(const Tree& a, const Tree& b) noexcept;
  friend std::strong_ordering operator<=>(const Tree& a, const Tree& b) noexcept;

  friend Tree wedge(Tree s, Tree t);

 private:
  struct Node;
  explicit Tree(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

struct Tree::Node {
  Tree left;
  Tree right;
  int degree;
};

inline int Tree::degree() const noexcept { return node_ ? node_->degree : 0; }

/// Canonical enumeration index of a tree inside Y(degree).
struct TreeId {
  int degree = 0;
  std::uint64_t rank = 0;

  friend bool operator==(const TreeId&, const TreeId&) = default;
  friend auto operator<=>(const TreeId&, const TreeId&) = default;
};

/// Largest degree for which enumerate() will materialize Y(n).
inline constexpr int kMaxEnumerationDegree = 14;

/// Catalan number c_n = binom(2n, n) / (n + 1). Throws CapacityError when the
/// value does not fit in a signed 64-bit integer (n > 35).
std::uint64_t catalan(int n);

/// All trees of degree n in canonical order: T = A v B ordered by degree(A)
/// ascending, then rank(A), then rank(B). The returned reference stays valid
/// for the life of the program.
const std::vector<Tree>& enumerate(int n);

/// Position of t in enumerate(t.degree()); computed arithmetically.
std::uint64_t rank(const Tree& t);
TreeId tree_id(const Tree& t);
/// Inverse of rank(); throws std::out_of_range for rank >= catalan(degree).
Tree unrank(int degree, std::uint64_t rank);
Tree unrank(TreeId id);

/// S v T: a new root with S grafted on its left leaf and T on its right leaf.
Tree wedge(Tree s, Tree t);
/// S / T: the root of S grafted onto the leftmost leaf of T.
Tree over(const Tree& s, const Tree& t);
/// S \ T: the root of T grafted onto the rightmost leaf of S.
Tree under(const Tree& s, const Tree& t);
/// Left-right reversal.
Tree mirror(const Tree& t);
/// (A, B) with t = A v B; throws std::invalid_argument on the leaf.
std::pair<Tree, Tree> decompose(const Tree& t);

/// Left comb ((..).).. of degree n: the minimum of the Tamari order.
Tree left_comb(int n);
/// Right comb (.(.(..))) of degree n: the maximum of the Tamari order.
Tree right_comb(int n);

/// Parses t := "." | "(" t t ")". Throws ParseError carrying the byte offset
/// of the first offending character.
Tree parse(std::string_view text);
std::string format(const Tree& t);

}  // namespace tamari
