#include "unineq/extval.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>

namespace unineq {

ExtValue::ExtValue(double v) : v_(require_nonnegative(v, "ExtValue")) {}

ExtValue operator*(ExtValue a, ExtValue b) { return ExtValue(ext_mul(a.v_, b.v_), ExtValue::Unchecked{}); }

ExtValue operator+(ExtValue a, ExtValue b) { return ExtValue(a.v_ + b.v_, ExtValue::Unchecked{}); }

ExtValue min(ExtValue a, ExtValue b) { return b < a ? b : a; }

ExtValue max(ExtValue a, ExtValue b) { return a < b ? b : a; }

double ext_pow(double x, double p) {
  if (x == 0.0 || x == kInf) return x;
  if (p == 1.0) return x;
  return std::pow(x, p);
}

bool approx_le(double a, double b, double tol) {
  if (a <= b) return true;
  if (std::isinf(a) || std::isinf(b)) return false;
  const double scale = std::max({1.0, std::fabs(a), std::fabs(b)});
  return a - b <= tol * scale;
}

bool approx_eq(double a, double b, double tol) { return approx_le(a, b, tol) && approx_le(b, a, tol); }

double require_nonnegative(double v, const char* what) {
  if (std::isnan(v) || v < 0.0) {
    throw InputError(std::string(what) + ": value must lie in [0, inf], got " + format_value(v));
  }
  return v;
}

std::string format_value(double v) {
  if (std::isnan(v)) return "nan";
  if (v == kInf) return "inf";
  if (v == -kInf) return "-inf";
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

}  // namespace unineq
