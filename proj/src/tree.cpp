#include "tamari/tree.hpp"

#include <array>
#include <mutex>
#include <stdexcept>

#include "tamari/errors.hpp"

namespace tamari {

namespace {

constexpr int kMaxCatalanDegree = 35;

const std::array<std::uint64_t, kMaxCatalanDegree + 1>& catalan_table() {
  static const auto table = [] {
    std::array<std::uint64_t, kMaxCatalanDegree + 1> t{};
    t[0] = 1;
    for (int n = 0; n < kMaxCatalanDegree; ++n) {
      // c_{n+1} = c_n * 2(2n+1) / (n+2), exact in 128 bits.
      unsigned __int128 next = static_cast<unsigned __int128>(t[n]) * (2 * (2 * n + 1));
      t[n + 1] = static_cast<std::uint64_t>(next / (n + 2));
    }
    return t;
  }();
  return table;
}

// Number of trees of degree n whose left subtree has degree < a.
std::uint64_t split_offset(int n, int a) {
  std::uint64_t offset = 0;
  for (int j = 0; j < a; ++j) offset += catalan(j) * catalan(n - 1 - j);
  return offset;
}

void append_literal(const Tree& t, std::string& out) {
  if (t.is_leaf()) {
    out.push_back('.');
    return;
  }
  out.push_back('(');
  append_literal(t.left(), out);
  append_literal(t.right(), out);
  out.push_back(')');
}

}  // namespace

Tree Tree::y() {
  static const Tree y = wedge(Tree(), Tree());
  return y;
}

const Tree& Tree::left() const {
  if (!node_) throw std::invalid_argument("the leaf has no children");
  return node_->left;
}

const Tree& Tree::right() const {
  if (!node_) throw std::invalid_argument("the leaf has no children");
  return node_->right;
}

bool operator==(const Tree& a, const Tree& b) noexcept {
  if (a.node_ == b.node_) return true;
  if (!a.node_ || !b.node_ || a.node_->degree != b.node_->degree) return false;
  return a.node_->left == b.node_->left && a.node_->right == b.node_->right;
}

// Agrees with the canonical enumeration order within a degree.
std::strong_ordering operator<=>(const Tree& a, const Tree& b) noexcept {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  if (a.is_leaf()) return std::strong_ordering::equal;
  if (auto c = a.node_->left.degree() <=> b.node_->left.degree(); c != 0) return c;
  if (auto c = a.node_->left <=> b.node_->left; c != 0) return c;
  return a.node_->right <=> b.node_->right;
}

Tree wedge(Tree s, Tree t) {
  const int degree = s.degree() + t.degree() + 1;
  return Tree(std::make_shared<const Tree::Node>(Tree::Node{std::move(s), std::move(t), degree}));
}

std::uint64_t catalan(int n) {
  if (n < 0) throw std::invalid_argument("catalan: negative degree");
  if (n > kMaxCatalanDegree) {
    throw CapacityError("catalan(" + std::to_string(n) + ") exceeds 64-bit range");
  }
  return catalan_table()[n];
}

const std::vector<Tree>& enumerate(int n) {
  if (n < 0) throw std::invalid_argument("enumerate: negative degree");
  if (n > kMaxEnumerationDegree) {
    throw CapacityError("enumerate: degree " + std::to_string(n) + " exceeds limit " +
                        std::to_string(kMaxEnumerationDegree));
  }
  static std::recursive_mutex mutex;
  static std::array<std::vector<Tree>, kMaxEnumerationDegree + 1> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[n];
  if (!slot.empty()) return slot;

  std::vector<Tree> trees;
  trees.reserve(catalan(n));
  if (n == 0) {
    trees.emplace_back();
  } else {
    for (int a = 0; a < n; ++a) {
      const auto& lefts = enumerate(a);
      const auto& rights = enumerate(n - 1 - a);
      for (const Tree& l : lefts) {
        for (const Tree& r : rights) trees.push_back(wedge(l, r));
      }
    }
  }
  slot = std::move(trees);
  return slot;
}

std::uint64_t rank(const Tree& t) {
  if (t.is_leaf()) return 0;
  const int n = t.degree();
  const Tree& a = t.left();
  const Tree& b = t.right();
  return split_offset(n, a.degree()) + rank(a) * catalan(b.degree()) + rank(b);
}

TreeId tree_id(const Tree& t) { return {t.degree(), rank(t)}; }

Tree unrank(int degree, std::uint64_t r) {
  if (r >= catalan(degree)) {
    throw std::out_of_range("unrank: rank " + std::to_string(r) + " out of range for degree " +
                            std::to_string(degree));
  }
  if (degree == 0) return Tree();
  int a = 0;
  for (;; ++a) {
    const std::uint64_t block = catalan(a) * catalan(degree - 1 - a);
    if (r < block) break;
    r -= block;
  }
  const int b = degree - 1 - a;
  return wedge(unrank(a, r / catalan(b)), unrank(b, r % catalan(b)));
}

Tree unrank(TreeId id) { return unrank(id.degree, id.rank); }

Tree over(const Tree& s, const Tree& t) {
  if (t.is_leaf()) return s;
  return wedge(over(s, t.left()), t.right());
}

Tree under(const Tree& s, const Tree& t) {
  if (s.is_leaf()) return t;
  return wedge(s.left(), under(s.right(), t));
}

Tree mirror(const Tree& t) {
  if (t.is_leaf()) return t;
  return wedge(mirror(t.right()), mirror(t.left()));
}

std::pair<Tree, Tree> decompose(const Tree& t) {
  if (t.is_leaf()) throw std::invalid_argument("decompose: the leaf is not a wedge");
  return {t.left(), t.right()};
}

Tree left_comb(int n) {
  Tree t;
  for (int i = 0; i < n; ++i) t = wedge(t, Tree());
  return t;
}

Tree right_comb(int n) {
  Tree t;
  for (int i = 0; i < n; ++i) t = wedge(Tree(), t);
  return t;
}

Tree parse(std::string_view text) {
  // Frames hold the left child of each open '(' once it has been read.
  struct Frame {
    Tree left;
    bool has_left = false;
  };
  std::vector<Frame> stack;
  std::size_t pos = 0;

  while (true) {
    if (pos >= text.size()) throw ParseError("unexpected end of input", pos);
    const char c = text[pos];
    if (c == '(') {
      stack.push_back({});
      ++pos;
      continue;
    }
    if (c != '.') throw ParseError("expected '.' or '('", pos);
    ++pos;

    Tree value;
    while (true) {
      if (stack.empty()) {
        if (pos != text.size()) throw ParseError("trailing characters", pos);
        return value;
      }
      Frame& top = stack.back();
      if (!top.has_left) {
        top.left = std::move(value);
        top.has_left = true;
        break;
      }
      if (pos >= text.size()) throw ParseError("expected ')'", pos);
      if (text[pos] != ')') throw ParseError("expected ')'", pos);
      ++pos;
      value = wedge(std::move(top.left), std::move(value));
      stack.pop_back();
    }
  }
}

std::string format(const Tree& t) {
  std::string out;
  out.reserve(3 * static_cast<std::size_t>(t.degree()) + 1);
  append_literal(t, out);
  return out;
}

}  // namespace tamari
