#pragma once

// The free dendriform algebra on one generator, realized on integer
// combinations of planar binary trees.
//
// For x = X1 v X2 and y = Y1 v Y2 the half products are
//   x > y = (x * Y1) v Y2,     x < y = X1 v (X2 * y),
// the two summands of the recursive product, and x * y = x < y + x > y.
// The product itself is S * T = sum of U over the Tamari interval [S/T, S\T].

#include <cstdint>
#include <functional>

#include "tamari/check_report.hpp"
#include "tamari/lincomb.hpp"
#include "tamari/tree.hpp"

namespace tamari {

/// Associative product by Tamari interval sums, extended bilinearly.
LinComb star(const LinComb& a, const LinComb& b);
LinComb star(const Tree& s, const Tree& t);

/// The same product computed by the recursion
///   (T1 v T2) * (T3 v T4) = ((T1 v T2) * T3) v T4 + T1 v (T2 * (T3 v T4))
/// with the leaf as unit. Kept as an independent oracle for star().
LinComb star_recursive(const LinComb& a, const LinComb& b);
LinComb star_recursive(const Tree& s, const Tree& t);

/// x < y and x > y. Both arguments need degree >= 1.
LinComb prec(const LinComb& a, const LinComb& b);
LinComb succ(const LinComb& a, const LinComb& b);

/// Bilinear grafts S\T, S/T and S v T.
LinComb under_lin(const LinComb& a, const LinComb& b);
LinComb over_lin(const LinComb& a, const LinComb& b);
LinComb wedge_lin(const LinComb& a, const LinComb& b);

/// A pair of half products given on basis trees; lets the axiom check run
/// against deliberately broken variants.
struct HalfProducts {
  std::function<LinComb(const Tree&, const Tree&)> prec;
  std::function<LinComb(const Tree&, const Tree&)> succ;
};

HalfProducts standard_half_products();

/// One of the three dendriform relations (equation = 1, 2 or 3) on all basis
/// triples of positive degree with total degree <= max_total_degree.
CheckReport check_dendriform_axiom(int equation, int max_total_degree,
                                   const HalfProducts& ops = standard_half_products());
/// All three relations; the counterexample names the first failing one.
CheckReport check_dendriform_axioms(int max_total_degree, const HalfProducts& ops = standard_half_products());

/// star == star_recursive on every basis pair with total degree <= max.
CheckReport check_star_oracle(int max_total_degree);
/// star == star_recursive on `count` random basis pairs with total degree in
/// [min_total, max_total], drawn from a seeded generator.
CheckReport check_star_oracle_random(int min_total, int max_total, int count, std::uint64_t seed);

/// prec + succ == star on every basis pair of positive degrees.
CheckReport check_half_product_sum(int max_total_degree);
CheckReport check_star_associative(int max_total_degree);
/// mirror(S * T) == mirror(T) * mirror(S).
CheckReport check_star_mirror(int max_total_degree);

/// L(T) = sum of v <= T and its transpose L^t(T) = sum of v >= T.
LinComb zeta_apply(const LinComb& a);
LinComb zeta_transpose_apply(const LinComb& a);

/// L^t(a\b) = L^t(a) \ L^t(b) on all basis pairs of degrees (n1, n2).
CheckReport check_zeta_transpose_under(int n1, int n2);
/// L(a\b) = L(a) * L(b) on all basis pairs of degrees (n1, n2), the product
/// taken by the recursive route.
CheckReport check_zeta_under_to_star(int n1, int n2);

}  // namespace tamari
