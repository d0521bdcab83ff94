#include "unineq/grid.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>

#include "unineq/extval.hpp"

namespace unineq {

GridSpec::GridSpec(std::vector<double> points) : points_(std::move(points)) {
  for (double p : points_) require_nonnegative(p, "grid point");
  std::sort(points_.begin(), points_.end());
  points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
}

GridSpec GridSpec::uniform(double lo, double hi, std::size_t count) {
  if (count == 0) return GridSpec();
  if (!(hi >= lo) || std::isinf(hi)) throw InputError("uniform grid: need finite hi >= lo");
  std::vector<double> pts(count);
  if (count == 1) {
    pts[0] = lo;
  } else {
    for (std::size_t i = 0; i < count; ++i) {
      pts[i] = (i + 1 == count) ? hi : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(count - 1);
    }
  }
  return GridSpec(std::move(pts));
}

GridSpec GridSpec::for_cap(double cap, std::optional<double> neutral, std::size_t count) {
  if (!std::isinf(cap)) {
    GridSpec g = uniform(0.0, cap, count);
    if (neutral && *neutral <= cap) {
      const double e[] = {*neutral};
      g = g.with(e);
    }
    return g;
  }
  double span = 2.0;
  if (neutral && !std::isinf(*neutral)) span = 2.0 * std::max(1.0, *neutral);
  GridSpec g = uniform(0.0, span, count);
  std::vector<double> extra{kInf};
  if (neutral) extra.push_back(*neutral);
  return g.with(extra);
}

GridSpec GridSpec::with(std::span<const double> extra) const {
  std::vector<double> pts(points_);
  pts.insert(pts.end(), extra.begin(), extra.end());
  return GridSpec(std::move(pts));
}

bool GridSpec::refines(const GridSpec& coarse) const {
  return std::includes(points_.begin(), points_.end(), coarse.points_.begin(), coarse.points_.end());
}

std::string GridSpec::describe() const {
  if (points_.empty()) return "empty";
  return std::to_string(points_.size()) + " points in [" + format_value(points_.front()) + ", " +
         format_value(points_.back()) + "]";
}

bool PropertyReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const PropertyCheck& c) { return c.passed || !c.required; });
}

const PropertyCheck* PropertyReport::find(std::string_view property) const {
  auto it = std::find_if(checks.begin(), checks.end(), [&](const PropertyCheck& c) { return c.property == property; });
  return it == checks.end() ? nullptr : &*it;
}

void PropertyReport::append(const PropertyReport& other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

namespace {

// Scans the inner box for a fixed outer index; idx[0] is preset by the caller.
bool scan_inner(std::span<const std::size_t> extents, std::vector<std::size_t>& idx, const IndexPredicate& holds) {
  const std::size_t dims = extents.size();
  for (std::size_t d = 1; d < dims; ++d) {
    if (extents[d] == 0) return false;
    idx[d] = 0;
  }
  while (true) {
    if (!holds(idx)) return true;
    std::size_t d = dims;
    while (d > 1) {
      --d;
      if (++idx[d] < extents[d]) break;
      idx[d] = 0;
      if (d == 1) return false;
    }
    if (dims == 1) return false;
  }
}

}  // namespace

std::optional<std::vector<std::size_t>> first_violation(std::span<const std::size_t> extents,
                                                        const IndexPredicate& holds, Exec exec) {
  if (extents.empty()) return std::nullopt;
  for (std::size_t e : extents) {
    if (e == 0) return std::nullopt;
  }
  const std::size_t outer = extents[0];
  const std::size_t dims = extents.size();

  if (exec == Exec::Serial) {
    std::vector<std::size_t> idx(dims, 0);
    for (std::size_t i = 0; i < outer; ++i) {
      idx[0] = i;
      if (scan_inner(extents, idx, holds)) return idx;
    }
    return std::nullopt;
  }

  std::vector<std::optional<std::vector<std::size_t>>> found(outer);
  std::atomic<std::size_t> best{outer};
  std::exception_ptr error;
  std::mutex error_mutex;

  const long long n_outer = static_cast<long long>(outer);
#pragma omp parallel for schedule(dynamic, 1)
  for (long long i = 0; i < n_outer; ++i) {
    const auto ui = static_cast<std::size_t>(i);
    if (ui > best.load(std::memory_order_relaxed)) continue;
    try {
      std::vector<std::size_t> idx(dims, 0);
      idx[0] = ui;
      if (scan_inner(extents, idx, holds)) {
        found[ui] = idx;
        std::size_t cur = best.load();
        while (ui < cur && !best.compare_exchange_weak(cur, ui)) {
        }
      }
    } catch (...) {
      std::lock_guard lock(error_mutex);
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  const std::size_t b = best.load();
  if (b == outer) return std::nullopt;
  return found[b];
}

}  // namespace unineq
