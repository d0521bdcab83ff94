#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace unineq {

/// Execution mode for the grid and campaign kernels. Serial is the reference
/// path; Parallel uses OpenMP and must produce identical results.
enum class Exec { Serial, Parallel };

/// A finite ascending set of sample points in [0, inf] used to certify
/// universally quantified properties.
class GridSpec {
 public:
  GridSpec() = default;
  explicit GridSpec(std::vector<double> points);

  /// `count` evenly spaced points from lo to hi inclusive.
  static GridSpec uniform(double lo, double hi, std::size_t count);

  /// Default grid for an op with domain cap `cap` and optional neutral `e`:
  /// 0..cap in `count` points; for an unbounded cap, 0..2*max(1, e) plus e and inf.
  static GridSpec for_cap(double cap, std::optional<double> neutral, std::size_t count = 101);

  GridSpec with(std::span<const double> extra) const;

  std::span<const double> points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  double operator[](std::size_t i) const { return points_[i]; }
  bool empty() const { return points_.empty(); }

  /// True when every point of `coarse` is also a point of this grid.
  bool refines(const GridSpec& coarse) const;

  std::string describe() const;

 private:
  std::vector<double> points_;
};

struct PropertyCheck {
  std::string property;
  bool passed = true;
  /// Required checks decide PropertyReport::passed; the rest are informational.
  bool required = true;
  std::vector<double> witness;
  std::string detail;
};

/// Outcome of a batch of grid checks. A pass is a grid-level certificate only.
struct PropertyReport {
  std::vector<PropertyCheck> checks;
  std::string certificate = "grid-verified";
  std::string grid;

  bool passed() const;
  const PropertyCheck* find(std::string_view property) const;
  void add(PropertyCheck check) { checks.push_back(std::move(check)); }
  void append(const PropertyReport& other);
};

using IndexPredicate = std::function<bool(std::span<const std::size_t>)>;

/// Scans the box [0,extents[0]) x ... x [0,extents[d-1]) in lexicographic order
/// and returns the first index tuple at which `holds` is false. The parallel
/// path splits the outermost axis across threads and reports the same tuple as
/// the serial path. Exceptions thrown by `holds` are rethrown on the caller.
std::optional<std::vector<std::size_t>> first_violation(std::span<const std::size_t> extents,
                                                        const IndexPredicate& holds, Exec exec);

}  // namespace unineq
