#include "unineq/integrals.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "unineq/extval.hpp"

namespace unineq {
namespace {

double checked(const BinaryOp& op, double a, double b) {
  if (!op.in_domain(a) || !op.in_domain(b)) {
    throw InputError("op " + op.name() + " evaluated outside its domain at (" + format_value(a) + ", " +
                     format_value(b) + ")");
  }
  return op(a, b);
}

constexpr double kInvPhi = 0.6180339887498949;

// Grid search over every segment between nodes, then golden-section refinement
// around the best sample. Returns the best value actually evaluated.
IntegralValue optimize(std::vector<double> nodes, const std::function<double(double)>& objective, bool maximize,
                       double tol) {
  std::sort(nodes.begin(), nodes.end());
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
  auto better = [maximize](double a, double b) { return maximize ? a > b : a < b; };

  std::vector<double> ts;
  ts.reserve(nodes.size() * (kSegmentNodes + 1));
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (i > 0) {
      const double a = nodes[i - 1], b = nodes[i];
      for (std::size_t j = 1; j <= kSegmentNodes; ++j) {
        ts.push_back(a + (b - a) * static_cast<double>(j) / static_cast<double>(kSegmentNodes + 1));
      }
    }
    ts.push_back(nodes[i]);
  }

  IntegralValue out;
  std::size_t best_k = 0;
  double best = objective(ts[0]);
  for (std::size_t k = 1; k < ts.size(); ++k) {
    const double v = objective(ts[k]);
    if (better(v, best)) {
      best = v;
      best_k = k;
    }
  }
  out.candidates = ts.size();

  double lo = ts[best_k > 0 ? best_k - 1 : 0];
  double hi = ts[std::min(best_k + 1, ts.size() - 1)];
  if (hi > lo) {
    double x1 = hi - kInvPhi * (hi - lo);
    double x2 = lo + kInvPhi * (hi - lo);
    double f1 = objective(x1), f2 = objective(x2);
    out.candidates += 2;
    for (int iter = 0; iter < 200 && hi - lo > tol; ++iter) {
      if (better(f1, best)) best = f1;
      if (better(f2, best)) best = f2;
      if (better(f2, f1)) {
        lo = x1;
        x1 = x2;
        f1 = f2;
        x2 = lo + kInvPhi * (hi - lo);
        f2 = objective(x2);
      } else {
        hi = x2;
        x2 = x1;
        f2 = f1;
        x1 = hi - kInvPhi * (hi - lo);
        f1 = objective(x1);
      }
      ++out.candidates;
    }
    if (better(f1, best)) best = f1;
    if (better(f2, best)) best = f2;
  }
  out.value = best;
  out.tol = (hi - lo) + 1e-12;
  return out;
}

IntegralValue sup_kernel(const BinaryOp& op, const Measure& m, const Function& f, double tol) {
  const SurvivalProfile p = survival(m, f);
  if (p.is_finite()) {
    const auto& v = p.candidates();
    const auto& w = p.weak_at_candidates();
    IntegralValue out;
    out.candidates = v.size();
    for (std::size_t k = 0; k < v.size(); ++k) out.value = std::max(out.value, checked(op, v[k], w[k]));
    return out;
  }
  std::vector<double> nodes = p.candidates();
  if (const auto& e = op.neutral(); e && std::isfinite(*e) && *e < p.t_max()) nodes.push_back(*e);
  return optimize(std::move(nodes), [&](double t) { return checked(op, t, p.weak(t)); }, true, tol);
}

}  // namespace

IntegralValue universal_integral(const BinaryOp& op, const Measure& m, const Function& f, double tol) {
  if (!op.has(OpFlag::Nondecreasing) || !op.has(OpFlag::AnnihilatorZero)) {
    throw InputError("universal integral: op " + op.name() + " must be nondecreasing with annihilator 0");
  }
  return sup_kernel(op, m, f, tol);
}

IntegralValue sugeno(const Measure& m, const Function& f) { return universal_integral(BinaryOp::min(), m, f); }

IntegralValue shilkret(const Measure& m, const Function& f) { return universal_integral(BinaryOp::prod(), m, f); }

IntegralValue smallest_e_integral(const Measure& m, const Function& f, double e) {
  if (std::isnan(e) || !(e > 0.0)) throw InputError("smallest-e integral: e must lie in (0, inf]");
  const SurvivalProfile p = survival(m, f);
  IntegralValue out;
  out.value = std::max(p.weak(e), essinf(m, f));
  out.candidates = 2;
  return out;
}

IntegralValue seminormed_integral(const BinaryOp& semicopula, const Measure& m, const Function& f, double tol) {
  if (!is_unit_scale(f)) throw InputError("seminormed integral: function must take values in [0,1]");
  if (!semicopula.has(OpFlag::Nondecreasing)) {
    throw InputError("seminormed integral: op " + semicopula.name() + " must be nondecreasing");
  }
  return sup_kernel(semicopula, m, f, tol);
}

IntegralValue semiconormed_integral(const BinaryOp& pseudo_add, const Measure& m, const Function& f, double tol) {
  if (!pseudo_add.has(OpFlag::Nondecreasing) || pseudo_add.neutral() != 0.0) {
    throw InputError("semiconormed integral: op " + pseudo_add.name() + " must be nondecreasing with neutral 0");
  }
  const SurvivalProfile p = survival(m, f);
  if (p.is_finite()) {
    IntegralValue out;
    out.value = checked(pseudo_add, 0.0, p.strict(0.0));
    for (double v : p.candidates()) out.value = std::min(out.value, checked(pseudo_add, v, p.strict(v)));
    out.candidates = p.candidates().size() + 1;
    return out;
  }
  return optimize(p.candidates(), [&](double t) { return checked(pseudo_add, t, p.strict(t)); }, false, tol);
}

}  // namespace unineq
