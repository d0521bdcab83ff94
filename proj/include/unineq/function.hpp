#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <variant>
#include <vector>

#include "unineq/transform.hpp"

namespace unineq {

enum class Scale { Unit, Extended };

/// Nonnegative function on the finite carrier {0, ..., n-1}.
class FiniteFunction {
 public:
  FiniteFunction() = default;
  explicit FiniteFunction(std::vector<double> values);
  static FiniteFunction constant(std::size_t n, double c);

  std::size_t size() const { return values_.size(); }
  std::span<const double> values() const { return values_; }
  double operator[](std::size_t i) const { return values_[i]; }

  double max_value() const;
  double min_value() const;
  bool is_unit_scale() const { return max_value() <= 1.0; }

  FiniteFunction transformed(const MonotoneTransform& t) const;
  /// g[i] = f[perm[i]].
  FiniteFunction relabeled(std::span<const std::size_t> perm) const;
  /// Drops element `index`; later elements shift down by one.
  FiniteFunction restricted(std::size_t index) const;

  friend bool operator==(const FiniteFunction&, const FiniteFunction&) = default;

 private:
  std::vector<double> values_;
};

/// Continuous piecewise-linear function on [0,1].
class PiecewiseLinear {
 public:
  PiecewiseLinear() : PiecewiseLinear({0.0, 1.0}, {0.0, 1.0}) {}
  PiecewiseLinear(std::vector<double> x, std::vector<double> y);
  static PiecewiseLinear constant(double c) { return PiecewiseLinear({0.0, 1.0}, {c, c}); }

  std::span<const double> x() const { return x_; }
  std::span<const double> y() const { return y_; }

  double operator()(double t) const;
  double max_value() const;
  double min_value() const;
  bool is_constant() const { return max_value() == min_value(); }

  /// Lebesgue length of {x : f(x) >= level}, exact.
  double level_length(double level) const;
  /// Lebesgue length of {x : f(x) > level}, exact.
  double strict_level_length(double level) const;

  /// Pointwise min / max, with crossing points inserted so the result is exact.
  static PiecewiseLinear lattice(const PiecewiseLinear& a, const PiecewiseLinear& b, bool take_max);

  friend bool operator==(const PiecewiseLinear&, const PiecewiseLinear&) = default;

 private:
  std::vector<double> x_;
  std::vector<double> y_;
};

/// outer(base(x)) on [0,1]. Level sets of the composite are level sets of the
/// base at the pulled-back level, so profiles stay exact.
struct ContinuousFunction {
  PiecewiseLinear base;
  MonotoneTransform outer;

  /// f(x) = x^p with the closed-form profile 1 - t^(1/p).
  static ContinuousFunction power(double p);
  static ContinuousFunction constant(double c) { return {PiecewiseLinear::constant(c), {}}; }

  double operator()(double x) const { return outer(base(x)); }
  double max_value() const { return outer(base.max_value()); }
  double min_value() const { return outer(base.min_value()); }
  bool is_constant() const { return base.is_constant(); }

  ContinuousFunction transformed(const MonotoneTransform& t) const { return {base, outer.then(t)}; }

  /// Same function with a new outer transform: base is re-expressed so that
  /// outer'(base'(x)) = outer(base(x)). Only available for constants.
  std::optional<ContinuousFunction> with_outer(const MonotoneTransform& target) const;

  /// Evaluation nodes: the base breakpoints.
  std::vector<double> breakpoints() const { return {base.x().begin(), base.x().end()}; }
};

using Function = std::variant<FiniteFunction, ContinuousFunction>;

double max_value(const Function& f);
bool is_unit_scale(const Function& f);
Function transformed(const Function& f, const MonotoneTransform& t);

/// Result of a comonotonicity test. On failure `witness` = (x, y) with
/// f(x) < f(y) and g(x) > g(y).
struct ComonotoneResult {
  bool comonotone = true;
  std::optional<std::pair<std::size_t, std::size_t>> witness;
  explicit operator bool() const { return comonotone; }
};

/// Sort-based test: order by (f, g) and require g nondecreasing along the order.
/// Throws InputError when sizes differ.
ComonotoneResult is_comonotone(const FiniteFunction& f, const FiniteFunction& g);
ComonotoneResult is_countermonotone(const FiniteFunction& f, const FiniteFunction& g);

/// Continuous pairs are compared on the union of breakpoints plus a uniform
/// sample of `samples` points; the witness indexes into that sample.
ComonotoneResult is_comonotone_sampled(const ContinuousFunction& f, const ContinuousFunction& g,
                                       std::size_t samples = 1001);

ComonotoneResult is_comonotone(const Function& f, const Function& g);

/// k functions f_i = F_i(h) on n points, F_i nondecreasing staircases.
/// Unit scale keeps values in [0,1]; extended scale draws levels up to 4.
std::vector<FiniteFunction> make_comonotone_system(std::uint64_t seed, std::size_t n, std::size_t k, Scale scale);

}  // namespace unineq
