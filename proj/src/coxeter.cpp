#include "tamari/coxeter.hpp"

#include <array>
#include <memory>
#include <mutex>
#include <stdexcept>

#include "tamari/anticyclic.hpp"
#include "tamari/dendriform.hpp"
#include "tamari/errors.hpp"
#include "tamari/tamari.hpp"

namespace tamari {

namespace {

CheckedInt sign(int n) { return n % 2 == 0 ? 1 : -1; }

LinComb column_action(const IntMatrix& m, const LinComb& a) {
  Accumulator acc(a.degree());
  for (const auto& [r, c] : a.terms()) {
    const auto j = static_cast<Eigen::Index>(r);
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      if (m(i, j) != CheckedInt(0)) acc.add(static_cast<std::uint64_t>(i), m(i, j) * c);
    }
  }
  return acc.finish();
}

void require_matrix_degree(int n, const char* what) {
  if (n < 0) throw std::invalid_argument(std::string(what) + ": negative degree");
  if (n > kMaxMatrixDegree) {
    throw CapacityError(std::string(what) + ": degree " + std::to_string(n) + " exceeds limit " +
                        std::to_string(kMaxMatrixDegree));
  }
}

std::string mismatch(const std::string& tag, const std::string& where, const LinComb& lhs, const LinComb& rhs) {
  return tag + " " + where + ": " + format(lhs) + " != " + format(rhs);
}

template <typename F>
void for_each_basis_pair(int max_total, F&& f) {
  for (int n1 = 0; n1 <= max_total; ++n1) {
    for (int n2 = 0; n1 + n2 <= max_total; ++n2) {
      for (const Tree& s : enumerate(n1)) {
        for (const Tree& t : enumerate(n2)) f(s, t);
      }
    }
  }
}

}  // namespace

const CoxeterMap& coxeter_map(int n) {
  require_matrix_degree(n, "coxeter_map");
  static std::mutex mutex;
  static std::array<std::unique_ptr<CoxeterMap>, kMaxMatrixDegree + 1> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[n];
  if (!slot) {
    const TamariPoset& poset = tamari_poset(n);
    const IntMatrix zeta = poset.zeta_matrix();
    const IntMatrix mobius = poset.mobius_matrix();
    auto map = std::make_unique<CoxeterMap>();
    map->degree = n;
    // (L^t)^-1 = (L^-1)^t
    map->theta = neg<CheckedInt>(mul<CheckedInt>(zeta, transpose<CheckedInt>(mobius)));
    map->theta_inv = neg<CheckedInt>(mul<CheckedInt>(transpose<CheckedInt>(zeta), mobius));
    if (!is_identity<CheckedInt>(mul<CheckedInt>(map->theta, map->theta_inv))) {
      throw std::logic_error("coxeter_map: theta * theta^-1 != I");
    }
    slot = std::move(map);
  }
  return *slot;
}

IntMatrix signed_theta_squared(int n) {
  const IntMatrix& t = coxeter_map(n).theta;
  IntMatrix sq = mul<CheckedInt>(t, t);
  return n % 2 == 0 ? sq : neg<CheckedInt>(sq);
}

LinComb theta_apply(int n, const LinComb& a) {
  if (a.degree() != n) {
    throw DegreeMismatch("theta_apply: combination of degree " + std::to_string(a.degree()) + " at degree " +
                         std::to_string(n));
  }
  return column_action(coxeter_map(n).theta, a);
}

LinComb theta_inv_apply(int n, const LinComb& a) {
  if (a.degree() != n) {
    throw DegreeMismatch("theta_inv_apply: combination of degree " + std::to_string(a.degree()) + " at degree " +
                         std::to_string(n));
  }
  return column_action(coxeter_map(n).theta_inv, a);
}

LinComb theta(const LinComb& a) { return theta_apply(a.degree(), a); }
LinComb theta_inv(const LinComb& a) { return theta_inv_apply(a.degree(), a); }
LinComb theta_squared(const LinComb& a) { return theta(theta(a)); }

CheckReport verify_theorem(int n) {
  CheckRecorder rec("theorem", "Eq(14)", {n});
  const IntMatrix& tau_m = tau_matrix(n).matrix;
  const IntMatrix rhs = signed_theta_squared(n);
  const auto& trees = enumerate(n);
  for (Eigen::Index j = 0; j < tau_m.cols(); ++j) {
    const bool equal = tau_m.col(j) == rhs.col(j);
    rec.expect(equal, [&] {
      const IntVector lhs_col = tau_m.col(j);
      const IntVector rhs_col = rhs.col(j);
      return mismatch("tau=(-1)^n theta^2", "at " + format(trees[static_cast<std::size_t>(j)]),
                      LinComb::from_vector(n, lhs_col), LinComb::from_vector(n, rhs_col));
    });
  }
  return rec.finish();
}

CheckReport check_theta_order(int n) {
  CheckRecorder rec("theta_order", "theta^(2n+2)=Id", {n});
  const IntMatrix& t = coxeter_map(n).theta;
  const int period = 2 * n + 2;
  // theta^period = I exactly when the least order exists and divides period.
  const std::optional<int> order = matrix_order<CheckedInt>(t, period);
  rec.expect(order.has_value() && period % *order == 0,
             [&] { return "theta^" + std::to_string(period) + " != Id"; });
  if (order) rec.set_detail("order=" + std::to_string(*order));
  return rec.finish();
}

CheckReport check_prop_6_4(int max_total_degree) {
  CheckRecorder rec("prop_6_4", "Eq(18)-(23)", {max_total_degree});
  const LinComb bar = LinComb::basis(Tree::leaf());
  rec.expect(theta(bar) == -bar, [&] { return mismatch("Eq(18)", "", theta(bar), -bar); });
  if (max_total_degree >= 1) {
    const LinComb y = LinComb::basis(Tree::y());
    rec.expect(theta(y) == -y, [&] { return mismatch("Eq(19)", "", theta(y), -y); });
  }
  for_each_basis_pair(max_total_degree, [&](const Tree& s, const Tree& t) {
    const std::string where = "T1=" + format(s) + " T2=" + format(t);
    const LinComb a = LinComb::basis(s);
    const LinComb b = LinComb::basis(t);
    const LinComb ta = theta(a);
    const LinComb tb = theta(b);
    const LinComb ia = theta_inv(a);
    const LinComb ib = theta_inv(b);
    const LinComb ab = star(a, b);

    LinComb lhs = theta(LinComb::basis(under(s, t)));
    LinComb rhs = -star(ta, tb);
    rec.expect(lhs == rhs, [&] { return mismatch("Eq(20)", where, lhs, rhs); });

    lhs = theta(ab);
    rhs = -over_lin(ta, tb);
    rec.expect(lhs == rhs, [&] { return mismatch("Eq(21)", where, lhs, rhs); });

    lhs = theta_inv(LinComb::basis(over(s, t)));
    rhs = -star(ia, ib);
    rec.expect(lhs == rhs, [&] { return mismatch("Eq(22)", where, lhs, rhs); });

    lhs = theta_inv(ab);
    rhs = -under_lin(ia, ib);
    rec.expect(lhs == rhs, [&] { return mismatch("Eq(23)", where, lhs, rhs); });
  });
  return rec.finish();
}

CheckReport check_prop_6_6(int max_degree) {
  CheckRecorder rec("prop_6_6", "Eq(25)", {max_degree});
  const Tree y_tree = Tree::y();
  const LinComb y = LinComb::basis(y_tree);
  for (int n = 0; n <= max_degree; ++n) {
    for (const Tree& t : enumerate(n)) {
      const LinComb a = LinComb::basis(t);
      const std::string where = "T=" + format(t);

      LinComb lhs = theta(LinComb::basis(over(t, y_tree)));
      LinComb rhs = sign(n) * under_lin(y, theta_inv(a));
      rec.expect(lhs == rhs, [&] { return mismatch("Eq(25a)", where, lhs, rhs); });

      lhs = theta_inv(LinComb::basis(under(y_tree, t)));
      rhs = sign(n) * over_lin(theta(a), y);
      rec.expect(lhs == rhs, [&] { return mismatch("Eq(25b)", where, lhs, rhs); });
    }
  }
  return rec.finish();
}

CheckReport check_corollaries(int max) {
  CheckRecorder rec("corollaries", "Eq(24),(32)", {max});
  for_each_basis_pair(max, [&](const Tree& s, const Tree& t) {
    const int n1 = s.degree();
    const int n2 = t.degree();
    const LinComb lhs = sign(n1 + n2) * theta_squared(LinComb::basis(under(s, t)));
    const LinComb rhs = over_lin(sign(n1) * theta_squared(LinComb::basis(s)),
                                 sign(n2) * theta_squared(LinComb::basis(t)));
    rec.expect(lhs == rhs, [&] { return mismatch("Eq(24)", "T1=" + format(s) + " T2=" + format(t), lhs, rhs); });
  });
  const Tree y_tree = Tree::y();
  for (int n = 0; n <= max - 1; ++n) {
    for (const Tree& t : enumerate(n)) {
      const LinComb lhs = sign(n + 1) * theta_squared(LinComb::basis(over(t, y_tree)));
      const LinComb rhs = -star(LinComb::basis(y_tree), LinComb::basis(t));
      rec.expect(lhs == rhs, [&] { return mismatch("Eq(32)", "T=" + format(t), lhs, rhs); });
    }
  }
  return rec.finish();
}

}  // namespace tamari
