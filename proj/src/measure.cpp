#include "unineq/measure.hpp"

#include <bit>
#include <cmath>

#include "unineq/extval.hpp"

namespace unineq {

FiniteMonotoneMeasure::FiniteMonotoneMeasure(std::size_t n, std::vector<double> table)
    : n_(n), table_(std::move(table)) {
  if (n == 0 || n > kMaxGroundSet) {
    throw InputError("finite measure: ground set size must be in [1, " + std::to_string(kMaxGroundSet) + "]");
  }
  if (table_.size() != (std::size_t{1} << n)) {
    throw InputError("finite measure: expected " + std::to_string(std::size_t{1} << n) + " table entries, got " +
                     std::to_string(table_.size()));
  }
  for (double v : table_) require_nonnegative(v, "measure value");
}

FiniteMonotoneMeasure FiniteMonotoneMeasure::counting(std::size_t n) {
  if (n == 0 || n > kMaxGroundSet) throw InputError("counting measure: bad ground set size");
  std::vector<double> t(std::size_t{1} << n);
  for (std::size_t a = 0; a < t.size(); ++a) t[a] = static_cast<double>(std::popcount(a));
  return FiniteMonotoneMeasure(n, std::move(t));
}

double FiniteMonotoneMeasure::measure_of(std::uint64_t subset) const {
  if (subset >= table_.size()) {
    throw InputError("subset mask " + std::to_string(subset) + " outside a ground set of size " + std::to_string(n_));
  }
  return table_[subset];
}

FiniteMonotoneMeasure FiniteMonotoneMeasure::relabeled(std::span<const std::size_t> perm) const {
  if (perm.size() != n_) throw InputError("relabel: permutation size mismatch");
  std::uint32_t seen = 0;
  for (std::size_t p : perm) {
    if (p >= n_ || (seen >> p & 1u)) throw InputError("relabel: not a permutation");
    seen |= 1u << p;
  }
  std::vector<double> t(table_.size());
  for (std::uint32_t a = 0; a < t.size(); ++a) {
    std::uint32_t image = 0;
    for (std::size_t i = 0; i < n_; ++i) {
      if (a >> i & 1u) image |= 1u << perm[i];
    }
    t[a] = table_[image];
  }
  return FiniteMonotoneMeasure(n_, std::move(t));
}

FiniteMonotoneMeasure FiniteMonotoneMeasure::restricted(std::size_t index) const {
  if (index >= n_ || n_ == 1) throw InputError("restrict: cannot drop element " + std::to_string(index));
  std::vector<double> t(table_.size() / 2);
  const std::uint32_t low = (1u << index) - 1u;
  for (std::uint32_t a = 0; a < t.size(); ++a) {
    const std::uint32_t wide = (a & low) | ((a & ~low) << 1);
    t[a] = table_[wide];
  }
  return FiniteMonotoneMeasure(n_ - 1, std::move(t));
}

FiniteMonotoneMeasure FiniteMonotoneMeasure::normalized() const {
  const double tot = total();
  if (!(tot > 0.0) || std::isinf(tot)) throw InputError("normalize: m(X) must be finite and positive");
  std::vector<double> t(table_);
  for (double& v : t) v /= tot;
  t.back() = 1.0;
  return FiniteMonotoneMeasure(n_, std::move(t));
}

DistortedLebesgue::DistortedLebesgue(MonotoneTransform g) : distortion(std::move(g)) {
  if (distortion(0.0) != 0.0) throw InputError("distortion must satisfy g(0) = 0");
}

double total(const Measure& m) {
  return std::visit([](const auto& x) { return x.total(); }, m);
}

PropertyReport validate_measure(const FiniteMonotoneMeasure& m) {
  PropertyReport report;
  report.certificate = "exhaustive";
  report.grid = "all " + std::to_string(m.table().size()) + " subsets";

  PropertyCheck empty;
  empty.property = "empty_set_zero";
  if (m(0) != 0.0) {
    empty.passed = false;
    empty.witness = {0.0, m(0)};
  }
  report.add(empty);

  PropertyCheck positive;
  positive.property = "total_positive";
  if (!(m.total() > 0.0)) {
    positive.passed = false;
    positive.witness = {static_cast<double>(m.full_mask()), m.total()};
  }
  report.add(positive);

  PropertyCheck mono;
  mono.property = "monotone";
  const std::uint32_t full = m.full_mask();
  for (std::uint32_t a = 0; a <= full && mono.passed; ++a) {
    for (std::size_t x = 0; x < m.n(); ++x) {
      const std::uint32_t b = a | (1u << x);
      if (b != a && m(a) > m(b)) {
        mono.passed = false;
        mono.witness = {static_cast<double>(a), static_cast<double>(b)};
        mono.detail = "m(A) = " + format_value(m(a)) + " > m(B) = " + format_value(m(b));
        break;
      }
    }
  }
  report.add(mono);
  return report;
}

}  // namespace unineq
