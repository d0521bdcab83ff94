#pragma once

#include <compare>
#include <limits>
#include <stdexcept>
#include <string>

namespace unineq {

/// Raised for malformed input: out-of-domain arguments, bad schemas, unknown ids.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// A number in [0, +inf]. Multiplication follows 0 * inf = inf * 0 = 0.
class ExtValue {
 public:
  constexpr ExtValue() = default;
  explicit ExtValue(double v);

  static constexpr ExtValue infinity() { return ExtValue(kInf, Unchecked{}); }
  static constexpr ExtValue zero() { return ExtValue(); }

  constexpr double value() const { return v_; }
  constexpr bool is_inf() const { return v_ == kInf; }

  friend constexpr auto operator<=>(ExtValue, ExtValue) = default;

  friend ExtValue operator*(ExtValue a, ExtValue b);
  friend ExtValue operator+(ExtValue a, ExtValue b);

 private:
  struct Unchecked {};
  constexpr ExtValue(double v, Unchecked) : v_(v) {}
  double v_ = 0.0;
};

ExtValue min(ExtValue a, ExtValue b);
ExtValue max(ExtValue a, ExtValue b);

/// Product on [0, inf] with the annihilating zero applied before the native multiply.
constexpr double ext_mul(double a, double b) {
  if (a == 0.0 || b == 0.0) return 0.0;
  return a * b;
}

/// x^p for x in [0, inf], p > 0; inf stays inf and 0 stays 0.
double ext_pow(double x, double p);

/// a <= b up to a relative tolerance; infinities compare exactly.
bool approx_le(double a, double b, double tol);
bool approx_eq(double a, double b, double tol);

/// Throws InputError unless v is a non-NaN value in [0, inf].
double require_nonnegative(double v, const char* what);

/// Shortest round-trip decimal, with "inf" / "-inf" spelled out.
std::string format_value(double v);

}  // namespace unineq
