#include "unineq/aggregator.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "unineq/extval.hpp"
#include "unineq/op_properties.hpp"

namespace unineq {

namespace {

void require_arity(std::size_t arity) {
  if (arity == 0) throw InputError("aggregator arity must be at least 1");
}

std::size_t nearest(const std::vector<double>& nodes, double x) {
  auto it = std::lower_bound(nodes.begin(), nodes.end(), x);
  if (it == nodes.end()) return nodes.size() - 1;
  const auto hi = static_cast<std::size_t>(it - nodes.begin());
  if (hi == 0) return 0;
  return (x - nodes[hi - 1] <= nodes[hi] - x) ? hi - 1 : hi;
}

// evenly spaced subsample of the grid keeping both ends
std::vector<double> axis_points(const GridSpec& grid, std::size_t count) {
  const auto pts = grid.points();
  if (pts.size() <= count) return {pts.begin(), pts.end()};
  std::vector<double> out;
  for (std::size_t k = 0; k < count; ++k) out.push_back(pts[k * (pts.size() - 1) / (count - 1)]);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

std::size_t points_per_axis(std::size_t dims) {
  if (dims <= 3) return 21;
  if (dims == 4) return 13;
  if (dims == 5) return 9;
  return 6;
}

Aggregator Aggregator::min(std::size_t arity) {
  require_arity(arity);
  Aggregator h;
  h.kind_ = Kind::Min;
  h.arity_ = arity;
  return h;
}

Aggregator Aggregator::max(std::size_t arity) {
  Aggregator h = min(arity);
  h.kind_ = Kind::Max;
  return h;
}

Aggregator Aggregator::prod(std::size_t arity) {
  Aggregator h = min(arity);
  h.kind_ = Kind::Prod;
  return h;
}

Aggregator Aggregator::weighted_mean(std::vector<double> weights) {
  require_arity(weights.size());
  double sum = 0.0;
  for (double w : weights) {
    if (!(w >= 0.0) || !std::isfinite(w)) throw InputError("mean weights must be finite and nonnegative");
    sum += w;
  }
  if (!(sum > 0.0)) throw InputError("mean weights must have a positive sum");
  for (double& w : weights) w /= sum;
  Aggregator h = min(weights.size());
  h.kind_ = Kind::WeightedMean;
  h.weights_ = std::move(weights);
  return h;
}

Aggregator Aggregator::binary(BinaryOp star) {
  Aggregator h = min(2);
  h.kind_ = Kind::Binary;
  h.star_ = std::move(star);
  return h;
}

Aggregator Aggregator::table(std::size_t arity, std::vector<double> nodes, std::vector<double> values) {
  require_arity(arity);
  if (nodes.empty() || !std::is_sorted(nodes.begin(), nodes.end()) ||
      std::adjacent_find(nodes.begin(), nodes.end()) != nodes.end())
    throw InputError("table nodes must be strictly ascending");
  double expect = std::pow(static_cast<double>(nodes.size()), static_cast<double>(arity));
  if (expect > 1e7 || static_cast<double>(values.size()) != expect)
    throw InputError("table needs nodes^arity values");
  for (double v : values) require_nonnegative(v, "table value");
  Aggregator h = min(arity);
  h.kind_ = Kind::Table;
  h.nodes_ = std::move(nodes);
  h.values_ = std::move(values);
  return h;
}

double Aggregator::operator()(std::span<const double> args) const {
  if (args.size() != arity_) throw InputError("aggregator arity mismatch");
  switch (kind_) {
    case Kind::Min:
      return *std::min_element(args.begin(), args.end());
    case Kind::Max:
      return *std::max_element(args.begin(), args.end());
    case Kind::Prod: {
      double p = 1.0;
      for (double a : args) p = ext_mul(p, a);
      return p;
    }
    case Kind::WeightedMean: {
      double s = 0.0;
      for (std::size_t i = 0; i < arity_; ++i) s += ext_mul(weights_[i], args[i]);
      return s;
    }
    case Kind::Binary:
      return eval_op(star_, ExtValue(args[0]), ExtValue(args[1])).value();
    case Kind::Table: {
      std::size_t idx = 0;
      for (double a : args) idx = idx * nodes_.size() + nearest(nodes_, a);
      return values_[idx];
    }
  }
  return 0.0;
}

double Aggregator::operator()(double a, double b) const {
  const double args[] = {a, b};
  return (*this)(args);
}

bool Aggregator::is_lattice() const {
  return kind_ == Kind::Min || kind_ == Kind::Max || (kind_ == Kind::Binary && star_.is_lattice());
}

std::string Aggregator::describe() const {
  const std::string n = std::to_string(arity_);
  switch (kind_) {
    case Kind::Min:
      return "min/" + n;
    case Kind::Max:
      return "max/" + n;
    case Kind::Prod:
      return "prod/" + n;
    case Kind::WeightedMean: {
      std::string s = "mean(";
      for (std::size_t i = 0; i < weights_.size(); ++i) s += (i ? "," : "") + format_value(weights_[i]);
      return s + ")";
    }
    case Kind::Binary:
      return star_.name();
    case Kind::Table:
      return "table/" + n;
  }
  return "?";
}

Function apply_pointwise(const Aggregator& h, std::span<const Function> fs) {
  if (fs.size() != h.arity()) throw InputError("aggregator arity does not match the number of functions");
  if (std::holds_alternative<FiniteFunction>(fs[0])) {
    const std::size_t n = std::get<FiniteFunction>(fs[0]).size();
    for (const auto& f : fs) {
      const auto* ff = std::get_if<FiniteFunction>(&f);
      if (!ff || ff->size() != n) throw InputError("functions must share one finite carrier");
    }
    std::vector<double> out(n), args(fs.size());
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t i = 0; i < fs.size(); ++i) args[i] = std::get<FiniteFunction>(fs[i])[x];
      out[x] = h(args);
    }
    return FiniteFunction(std::move(out));
  }
  for (const auto& f : fs)
    if (!std::holds_alternative<ContinuousFunction>(f)) throw InputError("functions must share one carrier");
  if (fs.size() == 1) return fs[0];
  if (!h.is_lattice()) throw InputError("pointwise " + h.describe() + " on [0,1] is supported for min/max only");
  const bool take_max = h.kind() == Aggregator::Kind::Max ||
                        (h.kind() == Aggregator::Kind::Binary && h.star().kind() == OpKind::Max);
  MonotoneTransform outer;
  for (const auto& f : fs) {
    const auto& cf = std::get<ContinuousFunction>(f);
    if (!cf.is_constant()) {
      outer = cf.outer;
      break;
    }
  }
  std::optional<PiecewiseLinear> acc;
  for (const auto& f : fs) {
    const auto aligned = std::get<ContinuousFunction>(f).with_outer(outer);
    if (!aligned) throw InputError("pointwise lattice of functions with different outer transforms");
    acc = acc ? PiecewiseLinear::lattice(*acc, aligned->base, take_max) : aligned->base;
  }
  return ContinuousFunction{*acc, outer};
}

PropertyReport check_H_boundedness(const Aggregator& h, HBound mode, const GridSpec& grid, Exec exec) {
  const auto axis = axis_points(grid, points_per_axis(h.arity()));
  const std::vector<std::size_t> extents(h.arity(), axis.size());
  const auto pred = [&](std::span<const std::size_t> idx) {
    std::vector<double> a(idx.size());
    for (std::size_t i = 0; i < idx.size(); ++i) a[i] = axis[idx[i]];
    const double v = h(a);
    if (mode == HBound::AboveByMin) return approx_le(v, *std::min_element(a.begin(), a.end()), kPropertyTol);
    return approx_le(*std::max_element(a.begin(), a.end()), v, kPropertyTol);
  };
  PropertyCheck check;
  check.property = mode == HBound::AboveByMin ? "bounded_above_by_min" : "bounded_below_by_max";
  if (const auto bad = first_violation(extents, pred, exec)) {
    check.passed = false;
    for (std::size_t i : *bad) check.witness.push_back(axis[i]);
  }
  PropertyReport report;
  report.grid = GridSpec(axis).describe() + "^" + std::to_string(h.arity());
  report.add(std::move(check));
  return report;
}

PropertyReport check_H_monotone(const Aggregator& h, const GridSpec& grid, Exec exec) {
  const auto axis = axis_points(grid, points_per_axis(h.arity()));
  const std::vector<std::size_t> extents(h.arity(), axis.size());
  std::vector<double> witness;
  const auto pred = [&](std::span<const std::size_t> idx) {
    std::vector<double> a(idx.size());
    for (std::size_t i = 0; i < idx.size(); ++i) a[i] = axis[idx[i]];
    const double base = h(a);
    for (std::size_t i = 0; i < idx.size(); ++i) {
      if (idx[i] + 1 == axis.size()) continue;
      auto b = a;
      b[i] = axis[idx[i] + 1];
      if (!approx_le(base, h(b), kPropertyTol)) return false;
    }
    return true;
  };
  PropertyCheck check;
  check.property = "H_nondecreasing";
  if (const auto bad = first_violation(extents, pred, exec)) {
    check.passed = false;
    for (std::size_t i : *bad) check.witness.push_back(axis[i]);
    check.detail = "some argument step decreases H";
  }
  PropertyReport report;
  report.grid = GridSpec(axis).describe() + "^" + std::to_string(h.arity());
  report.add(std::move(check));
  return report;
}

}  // namespace unineq
