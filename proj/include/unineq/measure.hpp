#pragma once

#include <cstdint>
#include <span>
#include <variant>
#include <vector>

#include "unineq/grid.hpp"
#include "unineq/transform.hpp"

namespace unineq {

inline constexpr std::size_t kMaxGroundSet = 20;

/// Set function on the subsets of {0, ..., n-1}, stored as a 2^n table indexed
/// by bitmask. Construction checks shape and nonnegativity only; use
/// validate_measure for the monotone-measure axioms.
class FiniteMonotoneMeasure {
 public:
  FiniteMonotoneMeasure() : FiniteMonotoneMeasure(counting(1)) {}
  FiniteMonotoneMeasure(std::size_t n, std::vector<double> table);

  static FiniteMonotoneMeasure counting(std::size_t n);

  std::size_t n() const { return n_; }
  std::uint32_t full_mask() const { return static_cast<std::uint32_t>(table_.size() - 1); }
  std::span<const double> table() const { return table_; }
  double total() const { return table_.back(); }

  /// Throws InputError when the mask has bits outside the ground set.
  double measure_of(std::uint64_t subset) const;
  double operator()(std::uint32_t subset) const { return table_[subset]; }

  /// m'(A) = m({perm[i] : i in A}); pairs with FiniteFunction::relabeled.
  FiniteMonotoneMeasure relabeled(std::span<const std::size_t> perm) const;
  /// Restriction to the ground set without `index`, renumbered.
  FiniteMonotoneMeasure restricted(std::size_t index) const;
  /// m / m(X); requires a finite positive total.
  FiniteMonotoneMeasure normalized() const;

  friend bool operator==(const FiniteMonotoneMeasure&, const FiniteMonotoneMeasure&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<double> table_;
};

/// m(A) = g(lambda(A)) on [0,1], g strictly increasing with g(0) = 0.
struct DistortedLebesgue {
  MonotoneTransform distortion;

  DistortedLebesgue() = default;
  explicit DistortedLebesgue(MonotoneTransform g);

  double of_length(double len) const { return distortion(len); }
  double total() const { return distortion(1.0); }
};

using Measure = std::variant<FiniteMonotoneMeasure, DistortedLebesgue>;

double total(const Measure& m);

/// Checks m(empty) = 0, m(X) > 0 and m(A) <= m(A + x) over all covering pairs.
/// The monotonicity witness is the mask pair (A, A + x).
PropertyReport validate_measure(const FiniteMonotoneMeasure& m);

}  // namespace unineq
