#include "tamari/anticyclic.hpp"

#include <array>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <utility>

#include "tamari/dendriform.hpp"
#include "tamari/errors.hpp"

namespace tamari {

namespace {

// Every way of writing t = t1 \ t2 with both factors of positive degree:
// t2 is a non-leaf subtree hanging off the right spine of t.
std::vector<std::pair<Tree, Tree>> right_spine_splits(const Tree& t) {
  std::vector<std::pair<Tree, Tree>> out;
  if (t.is_leaf()) return out;
  const Tree& r = t.right();
  if (r.is_leaf()) return out;
  out.emplace_back(wedge(t.left(), Tree()), r);
  for (auto& [r1, r2] : right_spine_splits(r)) out.emplace_back(wedge(t.left(), r1), std::move(r2));
  return out;
}

}  // namespace

LinComb tau_basis(const Tree& t) {
  if (t.is_leaf()) throw std::invalid_argument("tau is not defined on the leaf");

  static std::mutex mutex;
  static std::map<TreeId, LinComb> memo;
  const TreeId id = tree_id(t);
  {
    std::lock_guard lock(mutex);
    if (auto it = memo.find(id); it != memo.end()) return it->second;
  }

  const Tree y = Tree::y();
  const auto& [a, b] = decompose(t);
  LinComb result(t.degree());
  if (t == y) {
    result = -LinComb::basis(y);
  } else if (b.is_leaf()) {
    // t = a / Y
    result = -star(LinComb::basis(y), LinComb::basis(a));
  } else {
    // t = (a v |) \ b
    result = over_lin(tau_basis(wedge(a, Tree())), tau_basis(b));
  }

  std::lock_guard lock(mutex);
  memo.emplace(id, result);
  return result;
}

LinComb tau(const LinComb& a) {
  Accumulator acc(a.degree());
  const auto& trees = enumerate(a.degree());
  for (const auto& [r, c] : a.terms()) acc.add(tau_basis(trees[r]), c);
  return acc.finish();
}

const TauMap& tau_matrix(int n) {
  if (n < 1) throw std::invalid_argument("tau_matrix: degree must be at least 1");
  if (n > kMaxMatrixDegree) {
    throw CapacityError("tau_matrix: degree " + std::to_string(n) + " exceeds limit " +
                        std::to_string(kMaxMatrixDegree));
  }
  static std::mutex mutex;
  static std::array<std::unique_ptr<TauMap>, kMaxMatrixDegree + 1> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[n];
  if (!slot) {
    const auto& trees = enumerate(n);
    const auto size = static_cast<Eigen::Index>(trees.size());
    auto map = std::make_unique<TauMap>();
    map->degree = n;
    map->matrix = IntMatrix::Zero(size, size);
    for (Eigen::Index j = 0; j < size; ++j) map->matrix.col(j) = tau_basis(trees[j]).to_vector();
    slot = std::move(map);
  }
  return *slot;
}

CheckReport check_tau_well_defined(int n) {
  CheckRecorder rec("tau_well_defined", "Eq(15)-(17)", {n});
  for (const Tree& t : enumerate(n)) {
    const LinComb expected = tau_basis(t);
    for (const auto& [t1, t2] : right_spine_splits(t)) {
      if (under(t1, t2) != t) throw std::logic_error("right_spine_splits produced a wrong split");
      const LinComb via_split = over_lin(tau_basis(t1), tau_basis(t2));
      rec.expect(via_split == expected, [&] {
        return "T=" + format(t) + " split " + format(t1) + " \\ " + format(t2) + ": " + format(via_split) +
               " != " + format(expected);
      });
    }
  }
  return rec.finish();
}

CheckReport check_tau_order(int n) {
  CheckRecorder rec("tau_order", "tau^(n+1)=Id", {n});
  const std::optional<int> order = matrix_order<CheckedInt>(tau_matrix(n).matrix, n + 1);
  rec.expect(order.has_value() && (n + 1) % *order == 0,
             [&] { return "tau^k != Id for every k dividing " + std::to_string(n + 1); });
  if (order) rec.set_detail("order=" + std::to_string(*order));
  return rec.finish();
}

}  // namespace tamari
