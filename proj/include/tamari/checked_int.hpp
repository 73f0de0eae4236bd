#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <ostream>

#include <Eigen/Core>

#include "tamari/errors.hpp"

namespace tamari {

// 64-bit signed integer whose arithmetic throws OverflowError instead of
// wrapping. Usable as an Eigen scalar.
class CheckedInt {
 public:
  constexpr CheckedInt() noexcept = default;
  constexpr CheckedInt(std::int64_t v) noexcept : v_(v) {}  // NOLINT: implicit by intent

  constexpr std::int64_t value() const noexcept { return v_; }

  CheckedInt& operator+=(CheckedInt o) {
    if (__builtin_add_overflow(v_, o.v_, &v_)) throw OverflowError("integer overflow in addition");
    return *this;
  }
  CheckedInt& operator-=(CheckedInt o) {
    if (__builtin_sub_overflow(v_, o.v_, &v_)) throw OverflowError("integer overflow in subtraction");
    return *this;
  }
  CheckedInt& operator*=(CheckedInt o) {
    if (__builtin_mul_overflow(v_, o.v_, &v_)) throw OverflowError("integer overflow in multiplication");
    return *this;
  }

  friend CheckedInt operator+(CheckedInt a, CheckedInt b) { return a += b; }
  friend CheckedInt operator-(CheckedInt a, CheckedInt b) { return a -= b; }
  friend CheckedInt operator*(CheckedInt a, CheckedInt b) { return a *= b; }
  CheckedInt operator-() const { return CheckedInt(0) - *this; }
  CheckedInt operator+() const { return *this; }

  friend constexpr bool operator==(CheckedInt a, CheckedInt b) noexcept = default;
  friend constexpr auto operator<=>(CheckedInt a, CheckedInt b) noexcept = default;

  friend std::ostream& operator<<(std::ostream& os, CheckedInt x) { return os << x.v_; }

 private:
  std::int64_t v_ = 0;
};

inline CheckedInt abs(CheckedInt x) { return x.value() < 0 ? -x : x; }
inline CheckedInt abs2(CheckedInt x) { return x * x; }
inline CheckedInt conj(CheckedInt x) { return x; }
inline CheckedInt real(CheckedInt x) { return x; }
inline CheckedInt imag(CheckedInt) { return 0; }

}  // namespace tamari

namespace Eigen {

template <>
struct NumTraits<tamari::CheckedInt> : GenericNumTraits<std::int64_t> {
  using Real = tamari::CheckedInt;
  using NonInteger = tamari::CheckedInt;
  using Literal = tamari::CheckedInt;
  using Nested = tamari::CheckedInt;

  enum {
    IsComplex = 0,
    IsInteger = 1,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 2,
    MulCost = 3
  };

  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline Real highest() { return std::numeric_limits<std::int64_t>::max(); }
  static inline Real lowest() { return std::numeric_limits<std::int64_t>::min(); }
  static inline int digits10() { return std::numeric_limits<std::int64_t>::digits10; }
};

}  // namespace Eigen
