#pragma once

#include "tamari/check_report.hpp"
#include "tamari/exactlin.hpp"
#include "tamari/lincomb.hpp"
#include "tamari/tree.hpp"

namespace tamari {

/// Matrix of the anticyclic map on kY(n); column j is tau of basis tree j.
struct TauMap {
  int degree = 0;
  IntMatrix matrix;
};

/// tau on a basis tree of degree >= 1, by the recursion
///   tau(Y) = -Y,  tau(A v |) = -(Y * A),  tau((A v |) \ B) = tau(A v |) / tau(B).
/// Memoized. Throws std::invalid_argument on the leaf, where tau is undefined.
LinComb tau_basis(const Tree& t);
LinComb tau(const LinComb& a);

/// Shared, lazily assembled matrix of tau at degree n (1 <= n <= kMaxMatrixDegree).
const TauMap& tau_matrix(int n);

/// tau(T1 \ T2) = tau(T1) / tau(T2) for every T of degree n and every split
/// T = T1 \ T2 with both factors of positive degree.
CheckReport check_tau_well_defined(int n);
/// tau^(n+1) = Id; the detail field reports the least order.
CheckReport check_tau_order(int n);

}  // namespace tamari
