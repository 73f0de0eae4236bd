#include "tamari/tamari.hpp"

#include <algorithm>
#include <array>
#include <memory>
#include <mutex>
#include <queue>
#include <sstream>

#include "tamari/errors.hpp"

namespace tamari {

namespace {

std::string pair_text(const Tree& a, const Tree& b) { return format(a) + " , " + format(b); }

void require_degree(int n, int limit, const char* what) {
  if (n < 0) throw std::invalid_argument(std::string(what) + ": negative degree");
  if (n > limit) {
    throw CapacityError(std::string(what) + ": degree " + std::to_string(n) + " exceeds limit " +
                        std::to_string(limit));
  }
}

}  // namespace

std::size_t BitMatrix::row_count(std::size_t i) const noexcept {
  std::size_t count = 0;
  for (std::size_t w = 0; w < words_; ++w) count += static_cast<std::size_t>(__builtin_popcountll(bits_[i * words_ + w]));
  return count;
}

std::vector<Tree> covers_of(const Tree& t) {
  std::vector<Tree> out;
  if (t.is_leaf()) return out;
  const Tree& l = t.left();
  const Tree& r = t.right();
  if (!l.is_leaf()) out.push_back(wedge(l.left(), wedge(l.right(), r)));
  for (Tree& c : covers_of(l)) out.push_back(wedge(std::move(c), r));
  for (Tree& c : covers_of(r)) out.push_back(wedge(l, std::move(c)));
  return out;
}

TamariPoset TamariPoset::build(int n) {
  require_degree(n, kMaxPosetDegree, "TamariPoset::build");
  TamariPoset p;
  p.degree_ = n;
  p.basis_ = &enumerate(n);
  const std::size_t size = p.basis_->size();

  std::vector<std::vector<std::uint64_t>> succ(size);
  std::vector<std::size_t> indegree(size, 0);
  for (std::size_t v = 0; v < size; ++v) {
    for (const Tree& c : covers_of((*p.basis_)[v])) {
      const std::uint64_t w = rank(c);
      succ[v].push_back(w);
      ++indegree[w];
      p.covers_.emplace_back(v, w);
    }
    std::sort(succ[v].begin(), succ[v].end());
  }
  std::sort(p.covers_.begin(), p.covers_.end());

  // Kahn's algorithm, smallest available rank first for a deterministic result.
  std::priority_queue<std::uint64_t, std::vector<std::uint64_t>, std::greater<>> ready;
  for (std::size_t v = 0; v < size; ++v) {
    if (indegree[v] == 0) ready.push(v);
  }
  p.extension_.reserve(size);
  while (!ready.empty()) {
    const std::uint64_t v = ready.top();
    ready.pop();
    p.extension_.push_back(static_cast<Eigen::Index>(v));
    for (std::uint64_t w : succ[v]) {
      if (--indegree[w] == 0) ready.push(w);
    }
  }
  if (p.extension_.size() != size) throw std::logic_error("covering digraph has a cycle");
  p.position_.resize(size);
  for (std::size_t i = 0; i < size; ++i) p.position_[static_cast<std::size_t>(p.extension_[i])] = i;

  p.up_ = BitMatrix(size);
  for (auto it = p.extension_.rbegin(); it != p.extension_.rend(); ++it) {
    const auto v = static_cast<std::size_t>(*it);
    p.up_.set(v, v);
    for (std::uint64_t w : succ[v]) p.up_.merge_row(v, w);
  }
  p.down_ = BitMatrix(size);
  for (std::size_t v = 0; v < size; ++v) {
    p.up_.for_each(v, [&](std::size_t w) { p.down_.set(w, v); });
  }
  return p;
}

bool TamariPoset::leq(const Tree& s, const Tree& t) const {
  if (s.degree() != degree_ || t.degree() != degree_) {
    throw DegreeMismatch("leq: trees of degree " + std::to_string(s.degree()) + " and " +
                         std::to_string(t.degree()) + " in T(" + std::to_string(degree_) + ")");
  }
  return leq(rank(s), rank(t));
}

const Tree& TamariPoset::min_element() const {
  return basis()[static_cast<std::size_t>(extension_.front())];
}

const Tree& TamariPoset::max_element() const {
  return basis()[static_cast<std::size_t>(extension_.back())];
}

std::vector<Tree> TamariPoset::interval(const Tree& s, const Tree& t) const {
  if (s.degree() != degree_ || t.degree() != degree_) {
    throw DegreeMismatch("interval: trees must have degree " + std::to_string(degree_));
  }
  std::vector<Tree> out;
  for_each_in_interval(rank(s), rank(t), [&](std::size_t u) { out.push_back(basis()[u]); });
  return out;
}

std::vector<std::uint64_t> TamariPoset::interval_ranks(std::uint64_t s, std::uint64_t t) const {
  std::vector<std::uint64_t> out;
  for_each_in_interval(s, t, [&](std::size_t u) { out.push_back(u); });
  return out;
}

std::vector<std::uint64_t> TamariPoset::upset(std::uint64_t v) const {
  std::vector<std::uint64_t> out;
  up_.for_each(v, [&](std::size_t w) { out.push_back(w); });
  return out;
}

std::vector<std::uint64_t> TamariPoset::downset(std::uint64_t v) const {
  std::vector<std::uint64_t> out;
  down_.for_each(v, [&](std::size_t w) { out.push_back(w); });
  return out;
}

std::optional<std::uint64_t> TamariPoset::bound(std::uint64_t a, std::uint64_t b, bool lower) const {
  const BitMatrix& rel = lower ? down_ : up_;
  std::vector<std::uint64_t> common;
  rel.for_each_common(a, rel, b, [&](std::size_t u) { common.push_back(u); });
  if (common.empty()) return std::nullopt;
  // A greatest lower bound sits last in the linear extension among the common
  // lower bounds (a least upper bound first), so only that candidate is tested.
  auto by_position = [&](std::uint64_t x, std::uint64_t y) { return position_[x] < position_[y]; };
  const std::uint64_t c = lower ? *std::max_element(common.begin(), common.end(), by_position)
                                : *std::min_element(common.begin(), common.end(), by_position);
  const bool dominates = std::all_of(common.begin(), common.end(), [&](std::uint64_t u) {
    return lower ? leq(u, c) : leq(c, u);
  });
  if (dominates) return c;
  return std::nullopt;
}

std::optional<std::uint64_t> TamariPoset::meet(std::uint64_t a, std::uint64_t b) const {
  return bound(a, b, true);
}

std::optional<std::uint64_t> TamariPoset::join(std::uint64_t a, std::uint64_t b) const {
  return bound(a, b, false);
}

std::size_t TamariPoset::relation_size() const noexcept {
  std::size_t count = 0;
  for (std::size_t v = 0; v < size(); ++v) count += up_.row_count(v);
  return count;
}

IntMatrix TamariPoset::zeta_matrix() const {
  const auto n = static_cast<Eigen::Index>(size());
  IntMatrix l = IntMatrix::Zero(n, n);
  for (Eigen::Index v = 0; v < n; ++v) {
    up_.for_each(static_cast<std::size_t>(v), [&](std::size_t w) { l(v, static_cast<Eigen::Index>(w)) = 1; });
  }
  return l;
}

IntMatrix TamariPoset::mobius_matrix() const {
  return inverse_unitriangular<CheckedInt>(zeta_matrix(), extension_);
}

const TamariPoset& tamari_poset(int n) {
  require_degree(n, kMaxPosetDegree, "tamari_poset");
  static std::mutex mutex;
  static std::array<std::unique_ptr<TamariPoset>, kMaxPosetDegree + 1> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[n];
  if (!slot) slot = std::make_unique<TamariPoset>(TamariPoset::build(n));
  return *slot;
}

std::string to_dot(const TamariPoset& poset) {
  std::ostringstream os;
  os << "digraph tamari_" << poset.degree() << " {\n";
  os << "  rankdir=BT;\n";
  for (std::size_t v = 0; v < poset.size(); ++v) {
    os << "  n" << v << " [label=\"" << format(poset.basis()[v]) << "\"];\n";
  }
  for (const auto& [lo, hi] : poset.covers()) os << "  n" << lo << " -> n" << hi << ";\n";
  os << "}\n";
  return os.str();
}

CheckReport check_poset_axioms(int n) {
  CheckRecorder rec("poset_axioms", "order", {n});
  const TamariPoset& p = tamari_poset(n);
  const std::size_t size = p.size();
  const auto& b = p.basis();
  for (std::size_t u = 0; u < size && !rec.failed(); ++u) {
    rec.expect(p.leq(u, u), [&] { return "not reflexive at " + format(b[u]); });
    for (std::size_t v = 0; v < size; ++v) {
      if (u != v) {
        rec.expect(!(p.leq(u, v) && p.leq(v, u)),
                   [&] { return "not antisymmetric at " + pair_text(b[u], b[v]); });
      }
      if (!p.leq(u, v)) continue;
      for (std::uint64_t w : p.upset(v)) {
        rec.expect(p.leq(u, w), [&] { return "not transitive at " + format(b[u]) + " <= " + format(b[v]) +
                                             " <= " + format(b[w]); });
      }
    }
  }
  const Tree lo = left_comb(n);
  const Tree hi = right_comb(n);
  rec.expect(p.min_element() == lo, [&] { return "minimum is " + format(p.min_element()); });
  rec.expect(p.max_element() == hi, [&] { return "maximum is " + format(p.max_element()); });
  for (std::size_t u = 0; u < size; ++u) {
    rec.expect(p.leq(lo, b[u]) && p.leq(b[u], hi),
               [&] { return format(b[u]) + " not between the combs"; });
  }
  return rec.finish();
}

CheckReport check_lattice(int n) {
  CheckRecorder rec("lattice", "meet/join", {n});
  const TamariPoset& p = tamari_poset(n);
  for (std::size_t a = 0; a < p.size(); ++a) {
    for (std::size_t b = a; b < p.size(); ++b) {
      rec.expect(p.meet(a, b).has_value() && p.join(a, b).has_value(),
                 [&] { return "no meet or join for " + pair_text(p.basis()[a], p.basis()[b]); });
    }
  }
  return rec.finish();
}

CheckReport check_mirror_anti_automorphism(int n) {
  CheckRecorder rec("mirror_anti_automorphism", "order", {n});
  const TamariPoset& p = tamari_poset(n);
  const auto& b = p.basis();
  std::vector<std::uint64_t> mirrored(p.size());
  for (std::size_t v = 0; v < p.size(); ++v) mirrored[v] = rank(mirror(b[v]));
  for (std::size_t s = 0; s < p.size(); ++s) {
    for (std::size_t t = 0; t < p.size(); ++t) {
      rec.expect(p.leq(s, t) == p.leq(mirrored[t], mirrored[s]),
                 [&] { return "mirror breaks order at " + pair_text(b[s], b[t]); });
    }
  }
  return rec.finish();
}

CheckReport check_lemma_2_1(int n1, int n2) {
  CheckRecorder rec("lemma_2_1", "Lemma2.1", {n1, n2});
  const TamariPoset& p1 = tamari_poset(n1);
  const TamariPoset& p2 = tamari_poset(n2);
  const TamariPoset& p = tamari_poset(n1 + n2);
  std::vector<int> hits(p.size());
  for (std::size_t t1 = 0; t1 < p1.size(); ++t1) {
    for (std::size_t t2 = 0; t2 < p2.size(); ++t2) {
      std::fill(hits.begin(), hits.end(), 0);
      for (std::uint64_t s1 : p1.upset(t1)) {
        for (std::uint64_t s2 : p2.upset(t2)) ++hits[rank(under(p1.basis()[s1], p2.basis()[s2]))];
      }
      const std::uint64_t target = rank(under(p1.basis()[t1], p2.basis()[t2]));
      bool ok = true;
      for (std::size_t u = 0; u < p.size(); ++u) ok = ok && hits[u] == (p.leq(target, u) ? 1 : 0);
      rec.expect(ok, [&] {
        return "T1=" + format(p1.basis()[t1]) + " T2=" + format(p2.basis()[t2]) +
               ": image of [T1,1]x[T2,1] under \\ is not [T1\\T2,1] bijectively";
      });
    }
  }
  return rec.finish();
}

CheckReport check_lemma_3_3(int n1, int n2) {
  CheckRecorder rec("lemma_3_3", "Lemma3.3", {n1, n2});
  const TamariPoset& p1 = tamari_poset(n1);
  const TamariPoset& p2 = tamari_poset(n2);
  const TamariPoset& p = tamari_poset(n1 + n2);
  std::vector<int> hits(p.size());
  for (std::size_t t1 = 0; t1 < p1.size(); ++t1) {
    for (std::size_t t2 = 0; t2 < p2.size(); ++t2) {
      std::fill(hits.begin(), hits.end(), 0);
      bool nonempty = true;
      for (std::uint64_t s1 : p1.downset(t1)) {
        for (std::uint64_t s2 : p2.downset(t2)) {
          const Tree& a = p1.basis()[s1];
          const Tree& b = p2.basis()[s2];
          const std::uint64_t lo = rank(over(a, b));
          const std::uint64_t hi = rank(under(a, b));
          nonempty = nonempty && p.leq(lo, hi);
          p.for_each_in_interval(lo, hi, [&](std::size_t u) { ++hits[u]; });
        }
      }
      const std::uint64_t target = rank(under(p1.basis()[t1], p2.basis()[t2]));
      bool ok = nonempty;
      for (std::size_t u = 0; u < p.size(); ++u) ok = ok && hits[u] == (p.leq(u, target) ? 1 : 0);
      rec.expect(ok, [&] {
        return "T1=" + format(p1.basis()[t1]) + " T2=" + format(p2.basis()[t2]) +
               ": intervals [s1/s2,s1\\s2] do not partition [0,T1\\T2]";
      });
    }
  }
  return rec.finish();
}

}  // namespace tamari
