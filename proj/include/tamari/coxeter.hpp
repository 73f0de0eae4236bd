#pragma once

// Coxeter transformation theta = -L (L^t)^-1 of the Tamari poset T(n), acting
// on kY(n) with the canonical tree basis. theta is a graded family: identities
// mixing degrees route each factor through the matrix of its own degree, the
// leaf included (theta(|) = -|).

#include "tamari/check_report.hpp"
#include "tamari/exactlin.hpp"
#include "tamari/lincomb.hpp"

namespace tamari {

struct CoxeterMap {
  int degree = 0;
  IntMatrix theta;
  IntMatrix theta_inv;
};

/// theta = -L (L^t)^-1 and theta^-1 = -L^t L^-1, exact, checked against
/// theta * theta^-1 = I. Shared and lazily built.
const CoxeterMap& coxeter_map(int n);

/// (-1)^n theta^2 at degree n.
IntMatrix signed_theta_squared(int n);

/// Coordinate action on a combination of the given degree; throws
/// DegreeMismatch otherwise.
LinComb theta_apply(int n, const LinComb& a);
LinComb theta_inv_apply(int n, const LinComb& a);
/// Graded action, degree taken from the argument.
LinComb theta(const LinComb& a);
LinComb theta_inv(const LinComb& a);
LinComb theta_squared(const LinComb& a);

/// tau == (-1)^n theta^2 entrywise at degree n.
CheckReport verify_theorem(int n);
/// theta^(2n+2) == I; the detail field reports the least order.
CheckReport check_theta_order(int n);

/// The six relations of the graded theta family on all basis pairs with
/// total degree <= max:
///   theta(|) = -|, theta(Y) = -Y,
///   theta(T1\T2) = -theta(T1) * theta(T2),   theta(T1*T2) = -theta(T1) / theta(T2),
///   theta^-1(T1/T2) = -theta^-1(T1) * theta^-1(T2),
///   theta^-1(T1*T2) = -theta^-1(T1) \ theta^-1(T2).
CheckReport check_prop_6_4(int max_total_degree);
/// theta(T/Y) = (-1)^n Y \ theta^-1(T) and theta^-1(Y\T) = (-1)^n theta(T)/Y
/// for every T of degree n <= max_degree.
CheckReport check_prop_6_6(int max_degree);
/// (-1)^n theta^2(T1\T2) = (-1)^n1 theta^2(T1) / (-1)^n2 theta^2(T2) for
/// total degree <= max, and (-1)^(n+1) theta^2(T/Y) = -Y * T for degree(T) <= max - 1.
CheckReport check_corollaries(int max);

}  // namespace tamari
