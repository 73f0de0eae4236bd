#include "tamari/dendriform.hpp"

#include <array>
#include <map>
#include <mutex>
#include <random>
#include <stdexcept>

#include "tamari/errors.hpp"
#include "tamari/tamari.hpp"

namespace tamari {

namespace {

// Extends a basis-level operation bilinearly. op(S, T, coeff, acc) adds
// coeff * (S op T) into acc.
template <typename BasisOp>
LinComb bilinear(const LinComb& a, const LinComb& b, int out_degree, BasisOp&& op) {
  Accumulator acc(out_degree);
  if (a.is_zero() || b.is_zero()) return acc.finish();
  const auto& ta = enumerate(a.degree());
  const auto& tb = enumerate(b.degree());
  for (const auto& [r1, c1] : a.terms()) {
    for (const auto& [r2, c2] : b.terms()) op(ta[r1], tb[r2], c1 * c2, acc);
  }
  return acc.finish();
}

void star_into(const Tree& s, const Tree& t, CheckedInt c, Accumulator& acc) {
  const TamariPoset& p = tamari_poset(s.degree() + t.degree());
  p.for_each_in_interval(rank(over(s, t)), rank(under(s, t)), [&](std::size_t u) { acc.add(u, c); });
}

void require_positive(const LinComb& a, const LinComb& b, const char* op) {
  if (a.degree() < 1 || b.degree() < 1) {
    throw std::invalid_argument(std::string(op) + ": half products need arguments of degree >= 1");
  }
}

LinComb prec_basis(const Tree& x, const Tree& y) {
  return wedge_lin(LinComb::basis(x.left()), star(x.right(), y));
}

LinComb succ_basis(const Tree& x, const Tree& y) {
  return wedge_lin(star(x, y.left()), LinComb::basis(y.right()));
}

LinComb lift(const std::function<LinComb(const Tree&, const Tree&)>& op, const LinComb& a, const LinComb& b) {
  return bilinear(a, b, a.degree() + b.degree(),
                  [&](const Tree& s, const Tree& t, CheckedInt c, Accumulator& acc) { acc.add(op(s, t), c); });
}

// Calls f(trees...) for every basis tuple of the given arity, each tree of
// degree >= min_degree, with total degree <= max_total.
template <typename F>
void for_each_pair(int max_total, int min_degree, F&& f) {
  for (int n1 = min_degree; n1 <= max_total; ++n1) {
    for (int n2 = min_degree; n1 + n2 <= max_total; ++n2) {
      for (const Tree& s : enumerate(n1)) {
        for (const Tree& t : enumerate(n2)) f(s, t);
      }
    }
  }
}

template <typename F>
void for_each_triple(int max_total, int min_degree, F&& f) {
  for_each_pair(max_total - min_degree, min_degree, [&](const Tree& x, const Tree& y) {
    for (int n3 = min_degree; x.degree() + y.degree() + n3 <= max_total; ++n3) {
      for (const Tree& z : enumerate(n3)) f(x, y, z);
    }
  });
}

std::string describe_pair(const Tree& s, const Tree& t, const LinComb& lhs, const LinComb& rhs) {
  return "S=" + format(s) + " T=" + format(t) + ": " + format(lhs) + " != " + format(rhs);
}

}  // namespace

LinComb star(const LinComb& a, const LinComb& b) {
  return bilinear(a, b, a.degree() + b.degree(), star_into);
}

LinComb star(const Tree& s, const Tree& t) { return star(LinComb::basis(s), LinComb::basis(t)); }

LinComb star_recursive(const Tree& s, const Tree& t) {
  if (s.is_leaf()) return LinComb::basis(t);
  if (t.is_leaf()) return LinComb::basis(s);

  using Key = std::array<std::uint64_t, 4>;
  static std::mutex mutex;
  static std::map<Key, LinComb> memo;
  const Key key{static_cast<std::uint64_t>(s.degree()), rank(s), static_cast<std::uint64_t>(t.degree()), rank(t)};
  {
    std::lock_guard lock(mutex);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
  }
  LinComb result = wedge_lin(star_recursive(s, t.left()), LinComb::basis(t.right())) +
                   wedge_lin(LinComb::basis(s.left()), star_recursive(s.right(), t));
  std::lock_guard lock(mutex);
  memo.emplace(key, result);
  return result;
}

LinComb star_recursive(const LinComb& a, const LinComb& b) {
  return bilinear(a, b, a.degree() + b.degree(),
                  [](const Tree& s, const Tree& t, CheckedInt c, Accumulator& acc) {
                    acc.add(star_recursive(s, t), c);
                  });
}

LinComb prec(const LinComb& a, const LinComb& b) {
  require_positive(a, b, "prec");
  return lift(prec_basis, a, b);
}

LinComb succ(const LinComb& a, const LinComb& b) {
  require_positive(a, b, "succ");
  return lift(succ_basis, a, b);
}

LinComb under_lin(const LinComb& a, const LinComb& b) {
  return bilinear(a, b, a.degree() + b.degree(),
                  [](const Tree& s, const Tree& t, CheckedInt c, Accumulator& acc) { acc.add(rank(under(s, t)), c); });
}

LinComb over_lin(const LinComb& a, const LinComb& b) {
  return bilinear(a, b, a.degree() + b.degree(),
                  [](const Tree& s, const Tree& t, CheckedInt c, Accumulator& acc) { acc.add(rank(over(s, t)), c); });
}

LinComb wedge_lin(const LinComb& a, const LinComb& b) {
  return bilinear(a, b, a.degree() + b.degree() + 1,
                  [](const Tree& s, const Tree& t, CheckedInt c, Accumulator& acc) { acc.add(rank(wedge(s, t)), c); });
}

HalfProducts standard_half_products() { return {prec_basis, succ_basis}; }

CheckReport check_dendriform_axiom(int equation, int max_total_degree, const HalfProducts& ops) {
  if (equation < 1 || equation > 3) throw std::invalid_argument("dendriform relations are numbered 1 to 3");
  CheckRecorder rec("dendriform_axiom", "Eq(" + std::to_string(equation) + ")", {max_total_degree});
  auto p = [&](const LinComb& a, const LinComb& b) { return lift(ops.prec, a, b); };
  auto s = [&](const LinComb& a, const LinComb& b) { return lift(ops.succ, a, b); };
  for_each_triple(max_total_degree, 1, [&](const Tree& tx, const Tree& ty, const Tree& tz) {
    if (rec.failed()) return;
    const LinComb x = LinComb::basis(tx);
    const LinComb y = LinComb::basis(ty);
    const LinComb z = LinComb::basis(tz);
    LinComb lhs(0);
    LinComb rhs(0);
    switch (equation) {
      case 1:  // (x < y) < z = x < (y < z) + x < (y > z)
        lhs = p(p(x, y), z);
        rhs = p(x, p(y, z)) + p(x, s(y, z));
        break;
      case 2:  // x > (y < z) = (x > y) < z
        lhs = s(x, p(y, z));
        rhs = p(s(x, y), z);
        break;
      default:  // x > (y > z) = (x > y) > z + (x < y) > z
        lhs = s(x, s(y, z));
        rhs = s(s(x, y), z) + s(p(x, y), z);
        break;
    }
    rec.expect(lhs == rhs, [&] {
      return "x=" + format(tx) + " y=" + format(ty) + " z=" + format(tz) + ": " + format(lhs) + " != " + format(rhs);
    });
  });
  return rec.finish();
}

CheckReport check_dendriform_axioms(int max_total_degree, const HalfProducts& ops) {
  CheckRecorder rec("dendriform_axioms", "Eq(1)-(3)", {max_total_degree});
  for (int eq = 1; eq <= 3; ++eq) {
    rec.absorb(check_dendriform_axiom(eq, max_total_degree, ops));
  }
  return rec.finish();
}

CheckReport check_star_oracle(int max_total_degree) {
  CheckRecorder rec("star_oracle", "Eq(4)=Eq(5)", {max_total_degree});
  for_each_pair(max_total_degree, 0, [&](const Tree& s, const Tree& t) {
    const LinComb a = star(s, t);
    const LinComb b = star_recursive(s, t);
    rec.expect(a == b, [&] { return describe_pair(s, t, a, b); });
  });
  return rec.finish();
}

CheckReport check_star_oracle_random(int min_total, int max_total, int count, std::uint64_t seed) {
  CheckRecorder rec("star_oracle_random", "Eq(4)=Eq(5)", {min_total, max_total});
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> total_dist(min_total, max_total);
  for (int i = 0; i < count; ++i) {
    const int total = total_dist(rng);
    const int n1 = std::uniform_int_distribution<int>(0, total)(rng);
    const int n2 = total - n1;
    const auto r1 = std::uniform_int_distribution<std::uint64_t>(0, catalan(n1) - 1)(rng);
    const auto r2 = std::uniform_int_distribution<std::uint64_t>(0, catalan(n2) - 1)(rng);
    const Tree& s = enumerate(n1)[r1];
    const Tree& t = enumerate(n2)[r2];
    const LinComb a = star(s, t);
    const LinComb b = star_recursive(s, t);
    rec.expect(a == b, [&] { return describe_pair(s, t, a, b); });
  }
  return rec.finish();
}

CheckReport check_half_product_sum(int max_total_degree) {
  CheckRecorder rec("half_product_sum", "x*y=x<y+x>y", {max_total_degree});
  for_each_pair(max_total_degree, 1, [&](const Tree& s, const Tree& t) {
    const LinComb x = LinComb::basis(s);
    const LinComb y = LinComb::basis(t);
    const LinComb lhs = star(x, y);
    const LinComb rhs = prec(x, y) + succ(x, y);
    rec.expect(lhs == rhs, [&] { return describe_pair(s, t, lhs, rhs); });
  });
  return rec.finish();
}

CheckReport check_star_associative(int max_total_degree) {
  CheckRecorder rec("star_associative", "Eq(5)", {max_total_degree});
  for_each_triple(max_total_degree, 0, [&](const Tree& x, const Tree& y, const Tree& z) {
    const LinComb a = LinComb::basis(x);
    const LinComb b = LinComb::basis(y);
    const LinComb c = LinComb::basis(z);
    const LinComb lhs = star(star(a, b), c);
    const LinComb rhs = star(a, star(b, c));
    rec.expect(lhs == rhs, [&] {
      return "x=" + format(x) + " y=" + format(y) + " z=" + format(z) + ": " + format(lhs) + " != " + format(rhs);
    });
  });
  return rec.finish();
}

CheckReport check_star_mirror(int max_total_degree) {
  CheckRecorder rec("star_mirror", "Eq(5)", {max_total_degree});
  for_each_pair(max_total_degree, 0, [&](const Tree& s, const Tree& t) {
    const LinComb lhs = mirror(star(s, t));
    const LinComb rhs = star(mirror(t), mirror(s));
    rec.expect(lhs == rhs, [&] { return describe_pair(s, t, lhs, rhs); });
  });
  return rec.finish();
}

LinComb zeta_apply(const LinComb& a) {
  const TamariPoset& p = tamari_poset(a.degree());
  Accumulator acc(a.degree());
  for (const auto& [r, c] : a.terms()) {
    for (std::uint64_t v : p.downset(r)) acc.add(v, c);
  }
  return acc.finish();
}

LinComb zeta_transpose_apply(const LinComb& a) {
  const TamariPoset& p = tamari_poset(a.degree());
  Accumulator acc(a.degree());
  for (const auto& [r, c] : a.terms()) {
    for (std::uint64_t v : p.upset(r)) acc.add(v, c);
  }
  return acc.finish();
}

CheckReport check_zeta_transpose_under(int n1, int n2) {
  CheckRecorder rec("zeta_transpose_under", "Lemma2.1", {n1, n2});
  for (const Tree& s : enumerate(n1)) {
    for (const Tree& t : enumerate(n2)) {
      const LinComb lhs = zeta_transpose_apply(LinComb::basis(under(s, t)));
      const LinComb rhs = under_lin(zeta_transpose_apply(LinComb::basis(s)), zeta_transpose_apply(LinComb::basis(t)));
      rec.expect(lhs == rhs, [&] { return describe_pair(s, t, lhs, rhs); });
    }
  }
  return rec.finish();
}

CheckReport check_zeta_under_to_star(int n1, int n2) {
  CheckRecorder rec("zeta_under_to_star", "Lemma3.3", {n1, n2});
  for (const Tree& s : enumerate(n1)) {
    for (const Tree& t : enumerate(n2)) {
      const LinComb lhs = zeta_apply(LinComb::basis(under(s, t)));
      const LinComb rhs = star_recursive(zeta_apply(LinComb::basis(s)), zeta_apply(LinComb::basis(t)));
      rec.expect(lhs == rhs, [&] { return describe_pair(s, t, lhs, rhs); });
    }
  }
  return rec.finish();
}

}  // namespace tamari
