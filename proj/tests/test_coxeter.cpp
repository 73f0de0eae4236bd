#include <random>

#include <gtest/gtest.h>

#include "tamari/anticyclic.hpp"
#include "tamari/coxeter.hpp"
#include "tamari/dendriform.hpp"
#include "tamari/tamari.hpp"

using namespace tamari;

namespace {

const Tree kLeaf;
const Tree kY = Tree::y();

LinComb b(const Tree& t) { return LinComb::basis(t); }
CheckedInt sign(int n) { return n % 2 == 0 ? 1 : -1; }

IntMatrix m2(std::int64_t a, std::int64_t b_, std::int64_t c, std::int64_t d) {
  IntMatrix m(2, 2);
  m << a, b_, c, d;
  return m;
}

}  // namespace

TEST(Theta, DegreesZeroAndOne) {
  IntMatrix minus_one(1, 1);
  minus_one << -1;
  EXPECT_EQ(coxeter_map(0).theta, minus_one);
  EXPECT_EQ(coxeter_map(1).theta, minus_one);
  EXPECT_EQ(theta(b(kLeaf)), -b(kLeaf));
  EXPECT_EQ(theta(b(kY)), -b(kY));
}

TEST(Theta, DegreeTwoByHand) {
  // Basis (Y\Y, Y/Y); Y/Y is the bottom element.
  const IntMatrix l = m2(1, 0, 1, 1);
  const IntMatrix l_inv = m2(1, 0, -1, 1);
  const IntMatrix l_inv_t = m2(1, -1, 0, 1);
  const IntMatrix expected = neg<CheckedInt>(mul<CheckedInt>(l, l_inv_t));
  EXPECT_EQ(expected, m2(-1, 1, -1, 0));
  EXPECT_EQ(tamari_poset(2).mobius_matrix(), l_inv);
  EXPECT_EQ(coxeter_map(2).theta, expected);
  EXPECT_EQ(mul<CheckedInt>(coxeter_map(2).theta, coxeter_map(2).theta), m2(0, -1, 1, -1));
  EXPECT_EQ(signed_theta_squared(2), m2(0, -1, 1, -1));
  EXPECT_EQ(theta(b(under(kY, kY))), -b(under(kY, kY)) - b(over(kY, kY)));
}

TEST(Theta, InverseRoundTrip) {
  for (int n = 0; n <= 7; ++n) {
    const CoxeterMap& c = coxeter_map(n);
    EXPECT_TRUE(is_identity<CheckedInt>(mul<CheckedInt>(c.theta, c.theta_inv))) << n;
    EXPECT_TRUE(is_identity<CheckedInt>(mul<CheckedInt>(c.theta_inv, c.theta))) << n;
  }
  std::mt19937_64 rng(99);
  for (int n = 1; n <= 6; ++n) {
    for (int rep = 0; rep < 20; ++rep) {
      LinComb x(n);
      for (int k = 0; k < 4; ++k) x.add(rng() % catalan(n), static_cast<std::int64_t>(rng() % 7) - 3);
      EXPECT_EQ(theta_inv(theta(x)), x);
      EXPECT_EQ(theta_apply(n, theta_inv_apply(n, x)), x);
    }
  }
}

TEST(Theta, DegreeMismatch) {
  EXPECT_THROW(theta_apply(3, b(kY)), DegreeMismatch);
  EXPECT_THROW(theta_inv_apply(0, b(kY)), DegreeMismatch);
  EXPECT_THROW(coxeter_map(kMaxMatrixDegree + 1), CapacityError);
}

TEST(TauTheta, TauIsSignedThetaSquared) {
  for (int n = 1; n <= 7; ++n) {
    const CheckReport r = verify_theorem(n);
    EXPECT_TRUE(r) << r.counterexample;
    EXPECT_EQ(tau_matrix(n).matrix, signed_theta_squared(n)) << n;
  }
}

TEST(Theta, Orders) {
  for (int n = 1; n <= 7; ++n) {
    const CheckReport r = check_theta_order(n);
    EXPECT_TRUE(r) << n;
    const auto order = matrix_order<CheckedInt>(coxeter_map(n).theta, 2 * n + 2);
    ASSERT_TRUE(order.has_value());
    EXPECT_EQ((2 * n + 2) % *order, 0);
    if (n >= 3) EXPECT_EQ(*order, 2 * n + 2) << n;
  }
  EXPECT_EQ(matrix_order<CheckedInt>(coxeter_map(1).theta, 10), 2);
  EXPECT_EQ(matrix_order<CheckedInt>(coxeter_map(2).theta, 10), 3);
}

TEST(GradedTheta, ProductRelations) {
  EXPECT_TRUE(check_prop_6_4(2));
  const CheckReport r = check_prop_6_4(6);
  EXPECT_TRUE(r) << r.counterexample;
  // theta(Y * Y) = -theta(Y) / theta(Y) = -(Y/Y).
  EXPECT_EQ(theta(star(b(kY), b(kY))), -b(over(kY, kY)));
}

TEST(GradedTheta, GraftWithY) {
  const CheckReport r = check_prop_6_6(5);
  EXPECT_TRUE(r) << r.counterexample;
  EXPECT_EQ(theta(b(over(kLeaf, kY))), under_lin(b(kY), theta_inv(b(kLeaf))));
  EXPECT_EQ(theta(b(over(kY, kY))), -under_lin(b(kY), theta_inv(b(kY))));
}

TEST(GradedTheta, SquareRelations) {
  const CheckReport r = check_corollaries(6);
  EXPECT_TRUE(r) << r.counterexample;
}

// The chain of rewrites that reduces theta(T/Y) to (-1)^n Y \ theta^-1(T),
// checked link by link for T = T1 v T2.
TEST(GradedTheta, InductionChain) {
  const LinComb y = b(kY);
  for (int n = 1; n <= 6; ++n) {
    for (const Tree& t : enumerate(n)) {
      const auto [t1, t2] = decompose(t);
      const int n1 = t1.degree();
      const int n2 = t2.degree();
      const LinComb a1 = b(t1);
      const LinComb a2 = b(t2);
      const std::string where = format(t);

      ASSERT_EQ(star(b(t), y), b(over(t, kY)) + under_lin(b(over(t1, kY)), star(a2, y))) << where;
      ASSERT_EQ(t, under(over(t1, kY), t2)) << where;
      ASSERT_EQ(t, over(t1, under(kY, t2))) << where;

      const LinComb target = theta(b(over(t, kY)));
      const LinComb e26 = theta(star(b(t), y)) - theta(under_lin(b(over(t1, kY)), star(a2, y)));
      const LinComb e27 = over_lin(theta(b(t)), y) + star(theta(b(over(t1, kY))), theta(star(a2, y)));
      const LinComb e28 = -over_lin(star(theta(b(over(t1, kY))), theta(a2)), y) +
                          star(theta(b(over(t1, kY))), over_lin(theta(a2), y));
      const LinComb ya1 = under_lin(y, theta_inv(a1));
      const LinComb e29 = sign(n1 + 1) * over_lin(star(ya1, theta(a2)), y) + sign(n1) * star(ya1, over_lin(theta(a2), y));
      const LinComb e30 = sign(n1 + n2) * under_lin(y, star(theta_inv(a1), theta_inv(b(under(kY, t2)))));
      const LinComb e31 = sign(n1) * under_lin(y, star(theta_inv(a1), over_lin(theta(a2), y)));
      const LinComb goal = sign(n) * under_lin(y, theta_inv(b(t)));

      EXPECT_EQ(e26, target) << where;
      EXPECT_EQ(e27, target) << where;
      EXPECT_EQ(e28, target) << where;
      EXPECT_EQ(e29, target) << where;
      EXPECT_EQ(e30, goal) << where;
      EXPECT_EQ(e31, goal) << where;
      EXPECT_EQ(goal, target) << where;
    }
  }
}
