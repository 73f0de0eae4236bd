#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "tamari/checked_int.hpp"
#include "tamari/exactlin.hpp"
#include "tamari/tree.hpp"

namespace tamari {

/// Integer linear combination of trees of one fixed degree, keyed by
/// canonical rank. Zero coefficients are never stored.
class LinComb {
 public:
  using Terms = std::map<std::uint64_t, CheckedInt>;

  explicit LinComb(int degree = 0);

  static LinComb basis(const Tree& t, CheckedInt coeff = 1);
  static LinComb from_vector(int degree, const IntVector& coords);

  int degree() const noexcept { return degree_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  CheckedInt coefficient(std::uint64_t rank) const;
  CheckedInt coefficient(const Tree& t) const;

  /// Adds c * basis(rank). Throws std::out_of_range on an invalid rank.
  void add(std::uint64_t rank, CheckedInt c);
  void add(const Tree& t, CheckedInt c);

  IntVector to_vector() const;

  LinComb& operator+=(const LinComb& o);
  LinComb& operator-=(const LinComb& o);
  LinComb& operator*=(CheckedInt c);

  friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
  friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
  friend LinComb operator*(CheckedInt c, LinComb a) { return a *= c; }
  friend LinComb operator*(LinComb a, CheckedInt c) { return a *= c; }
  LinComb operator-() const;

  friend bool operator==(const LinComb&, const LinComb&) = default;

 private:
  void require_same_degree(const LinComb& o, const char* op) const;

  int degree_;
  Terms terms_;
};

/// "c1*t1 + c2*t2 + ..." in canonical basis order; "0" when empty.
std::string format(const LinComb& a);

/// Linear extension of the left-right reversal.
LinComb mirror(const LinComb& a);

/// Dense accumulator for building a LinComb of one degree.
class Accumulator {
 public:
  explicit Accumulator(int degree);
  void add(std::uint64_t rank, CheckedInt c) { coords_[static_cast<Eigen::Index>(rank)] += c; }
  void add(const LinComb& a, CheckedInt scale = 1);
  LinComb finish() const { return LinComb::from_vector(degree_, coords_); }

 private:
  int degree_;
  IntVector coords_;
};

}  // namespace tamari
