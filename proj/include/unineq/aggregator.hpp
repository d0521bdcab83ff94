#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "unineq/binary_op.hpp"
#include "unineq/function.hpp"
#include "unineq/grid.hpp"

namespace unineq {

/// The n-place function H of the n-ary theorems. Binary wraps a star
/// operation (arity 2); Table is an n-dimensional lookup on a shared node
/// grid with nearest-node evaluation.
class Aggregator {
 public:
  enum class Kind { Min, Max, Prod, WeightedMean, Binary, Table };

  Aggregator() = default;

  static Aggregator min(std::size_t arity);
  static Aggregator max(std::size_t arity);
  static Aggregator prod(std::size_t arity);
  /// Weights must be nonnegative with a positive sum; they are normalized.
  static Aggregator weighted_mean(std::vector<double> weights);
  static Aggregator binary(BinaryOp star);
  /// `values` holds nodes.size()^arity entries, last coordinate fastest.
  static Aggregator table(std::size_t arity, std::vector<double> nodes, std::vector<double> values);

  Kind kind() const { return kind_; }
  std::size_t arity() const { return arity_; }
  const std::vector<double>& weights() const { return weights_; }
  const BinaryOp& star() const { return star_; }
  const std::vector<double>& nodes() const { return nodes_; }
  const std::vector<double>& values() const { return values_; }

  double operator()(std::span<const double> args) const;
  double operator()(double a, double b) const;

  /// Min, Max, or a Binary wrapping min/max.
  bool is_lattice() const;
  std::string describe() const;

 private:
  Kind kind_ = Kind::Min;
  std::size_t arity_ = 1;
  std::vector<double> weights_;
  BinaryOp star_;
  std::vector<double> nodes_;
  std::vector<double> values_;
};

/// Pointwise H(f_1, ..., f_n). Continuous carriers support lattice H only.
Function apply_pointwise(const Aggregator& h, std::span<const Function> fs);

enum class HBound { AboveByMin, BelowByMax };

PropertyReport check_H_boundedness(const Aggregator& h, HBound mode, const GridSpec& grid, Exec exec = Exec::Serial);

/// Nondecreasing in every argument over adjacent grid steps.
PropertyReport check_H_monotone(const Aggregator& h, const GridSpec& grid, Exec exec = Exec::Serial);

/// Grid points per axis used for n-ary scans: 21 up to 3 axes, then 13, 9, 6.
std::size_t points_per_axis(std::size_t dims);

}  // namespace unineq
