#include "unineq/function.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "unineq/extval.hpp"
#include "unineq/rng.hpp"

namespace unineq {

FiniteFunction::FiniteFunction(std::vector<double> values) : values_(std::move(values)) {
  for (double v : values_) require_nonnegative(v, "function value");
}

FiniteFunction FiniteFunction::constant(std::size_t n, double c) { return FiniteFunction(std::vector<double>(n, c)); }

double FiniteFunction::max_value() const {
  return values_.empty() ? 0.0 : *std::max_element(values_.begin(), values_.end());
}

double FiniteFunction::min_value() const {
  return values_.empty() ? 0.0 : *std::min_element(values_.begin(), values_.end());
}

FiniteFunction FiniteFunction::transformed(const MonotoneTransform& t) const {
  if (t.is_identity()) return *this;
  std::vector<double> out(values_.size());
  std::transform(values_.begin(), values_.end(), out.begin(), [&](double v) { return t(v); });
  return FiniteFunction(std::move(out));
}

FiniteFunction FiniteFunction::relabeled(std::span<const std::size_t> perm) const {
  if (perm.size() != values_.size()) throw InputError("relabel: permutation size mismatch");
  std::vector<double> out(values_.size());
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (perm[i] >= values_.size()) throw InputError("relabel: index out of range");
    out[i] = values_[perm[i]];
  }
  return FiniteFunction(std::move(out));
}

FiniteFunction FiniteFunction::restricted(std::size_t index) const {
  if (index >= values_.size()) throw InputError("restrict: index out of range");
  std::vector<double> out(values_);
  out.erase(out.begin() + static_cast<std::ptrdiff_t>(index));
  return FiniteFunction(std::move(out));
}

PiecewiseLinear::PiecewiseLinear(std::vector<double> x, std::vector<double> y) : x_(std::move(x)), y_(std::move(y)) {
  if (x_.size() < 2 || x_.size() != y_.size()) throw InputError("pwl: need at least two nodes and matching x/y");
  if (x_.front() != 0.0 || x_.back() != 1.0) throw InputError("pwl: nodes must start at 0 and end at 1");
  for (std::size_t i = 1; i < x_.size(); ++i) {
    if (!(x_[i] > x_[i - 1])) throw InputError("pwl: nodes must be strictly ascending");
  }
  for (double v : y_) {
    require_nonnegative(v, "pwl value");
    if (std::isinf(v)) throw InputError("pwl: values must be finite");
  }
}

double PiecewiseLinear::operator()(double t) const {
  if (t <= 0.0) return y_.front();
  if (t >= 1.0) return y_.back();
  const auto hi = static_cast<std::size_t>(std::upper_bound(x_.begin(), x_.end(), t) - x_.begin());
  const std::size_t lo = hi - 1;
  const double w = (t - x_[lo]) / (x_[hi] - x_[lo]);
  return y_[lo] + w * (y_[hi] - y_[lo]);
}

double PiecewiseLinear::max_value() const { return *std::max_element(y_.begin(), y_.end()); }
double PiecewiseLinear::min_value() const { return *std::min_element(y_.begin(), y_.end()); }

namespace {

double level_length_impl(std::span<const double> x, std::span<const double> y, double level, bool strict) {
  double total = 0.0;
  for (std::size_t i = 1; i < x.size(); ++i) {
    const double len = x[i] - x[i - 1];
    const double lo = std::min(y[i - 1], y[i]);
    const double hi = std::max(y[i - 1], y[i]);
    const bool all = strict ? lo > level : lo >= level;
    const bool none = strict ? hi <= level : hi < level;
    if (all) {
      total += len;
    } else if (!none) {
      total += (hi - level) / (hi - lo) * len;
    }
  }
  return std::clamp(total, 0.0, 1.0);
}

}  // namespace

double PiecewiseLinear::level_length(double level) const { return level_length_impl(x_, y_, level, false); }

double PiecewiseLinear::strict_level_length(double level) const { return level_length_impl(x_, y_, level, true); }

PiecewiseLinear PiecewiseLinear::lattice(const PiecewiseLinear& a, const PiecewiseLinear& b, bool take_max) {
  std::vector<double> nodes(a.x_);
  nodes.insert(nodes.end(), b.x_.begin(), b.x_.end());
  std::sort(nodes.begin(), nodes.end());
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
  std::vector<double> xs;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (i > 0) {
      const double d0 = a(nodes[i - 1]) - b(nodes[i - 1]);
      const double d1 = a(nodes[i]) - b(nodes[i]);
      if ((d0 < 0.0 && d1 > 0.0) || (d0 > 0.0 && d1 < 0.0)) {
        const double xc = nodes[i - 1] + d0 / (d0 - d1) * (nodes[i] - nodes[i - 1]);
        if (xc > nodes[i - 1] && xc < nodes[i]) xs.push_back(xc);
      }
    }
    xs.push_back(nodes[i]);
  }
  std::vector<double> ys(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    ys[i] = take_max ? std::max(a(xs[i]), b(xs[i])) : std::min(a(xs[i]), b(xs[i]));
  }
  return PiecewiseLinear(std::move(xs), std::move(ys));
}

ContinuousFunction ContinuousFunction::power(double p) {
  return {PiecewiseLinear(), MonotoneTransform::power_profile_exact(p)};
}

std::optional<ContinuousFunction> ContinuousFunction::with_outer(const MonotoneTransform& target) const {
  if (outer == target) return *this;
  if (!is_constant()) return std::nullopt;
  return ContinuousFunction{PiecewiseLinear::constant(target.invert(max_value())), target};
}

double max_value(const Function& f) {
  return std::visit([](const auto& g) { return g.max_value(); }, f);
}

bool is_unit_scale(const Function& f) { return max_value(f) <= 1.0; }

Function transformed(const Function& f, const MonotoneTransform& t) {
  return std::visit([&](const auto& g) -> Function { return g.transformed(t); }, f);
}

namespace {

ComonotoneResult comonotone_core(std::span<const double> f, std::span<const double> g) {
  if (f.size() != g.size()) throw InputError("comonotone: functions live on carriers of different size");
  std::vector<std::size_t> order(f.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (f[a] != f[b]) return f[a] < f[b];
    if (g[a] != g[b]) return g[a] < g[b];
    return a < b;
  });
  ComonotoneResult res;
  for (std::size_t k = 1; k < order.size(); ++k) {
    if (g[order[k]] < g[order[k - 1]]) {
      res.comonotone = false;
      res.witness = std::pair{order[k - 1], order[k]};
      break;
    }
  }
  return res;
}

}  // namespace

ComonotoneResult is_comonotone(const FiniteFunction& f, const FiniteFunction& g) {
  return comonotone_core(f.values(), g.values());
}

ComonotoneResult is_countermonotone(const FiniteFunction& f, const FiniteFunction& g) {
  std::vector<double> neg(g.values().begin(), g.values().end());
  for (double& v : neg) v = -v;
  return comonotone_core(f.values(), neg);
}

ComonotoneResult is_comonotone_sampled(const ContinuousFunction& f, const ContinuousFunction& g, std::size_t samples) {
  std::vector<double> xs = f.breakpoints();
  const auto gb = g.breakpoints();
  xs.insert(xs.end(), gb.begin(), gb.end());
  for (std::size_t i = 0; i < samples; ++i) {
    xs.push_back(samples == 1 ? 0.0 : static_cast<double>(i) / static_cast<double>(samples - 1));
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  std::vector<double> fv(xs.size()), gv(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    fv[i] = f(xs[i]);
    gv[i] = g(xs[i]);
  }
  return comonotone_core(fv, gv);
}

ComonotoneResult is_comonotone(const Function& f, const Function& g) {
  if (f.index() != g.index()) throw InputError("comonotone: functions live on different carriers");
  if (const auto* ff = std::get_if<FiniteFunction>(&f)) return is_comonotone(*ff, std::get<FiniteFunction>(g));
  return is_comonotone_sampled(std::get<ContinuousFunction>(f), std::get<ContinuousFunction>(g));
}

std::vector<FiniteFunction> make_comonotone_system(std::uint64_t seed, std::size_t n, std::size_t k, Scale scale) {
  Rng rng(seed);
  const double top = scale == Scale::Unit ? 1.0 : 4.0;
  std::vector<std::size_t> h(n);
  for (auto& r : h) r = rng.index(std::max<std::size_t>(n, 1));
  std::vector<FiniteFunction> out;
  out.reserve(k);
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<double> stair(std::max<std::size_t>(n, 1));
    for (double& v : stair) {
      v = rng.uniform(0.0, top);
      if (rng.chance(0.25)) v = std::round(v * 4.0 / top) * top / 4.0;
    }
    std::sort(stair.begin(), stair.end());
    if (rng.chance(0.15)) stair.front() = 0.0;
    if (rng.chance(0.15)) stair.back() = top;
    std::vector<double> vals(n);
    for (std::size_t j = 0; j < n; ++j) vals[j] = stair[h[j]];
    out.emplace_back(std::move(vals));
  }
  return out;
}

}  // namespace unineq
