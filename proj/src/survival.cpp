#include "unineq/survival.hpp"

#include <algorithm>

#include "unineq/extval.hpp"

namespace unineq {

SurvivalProfile survival(const Measure& m, const Function& f) {
  SurvivalProfile p;
  p.total_ = total(m);
  if (const auto* fm = std::get_if<FiniteMonotoneMeasure>(&m)) {
    const auto* ff = std::get_if<FiniteFunction>(&f);
    if (!ff) throw InputError("survival: finite measure needs a finite function");
    if (ff->size() != fm->n()) {
      throw InputError("survival: function has " + std::to_string(ff->size()) + " values, ground set has " +
                       std::to_string(fm->n()));
    }
    std::vector<double> vals(ff->values().begin(), ff->values().end());
    std::sort(vals.begin(), vals.end());
    vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
    SurvivalProfile::Steps steps;
    steps.weak_at.reserve(vals.size());
    for (double v : vals) {
      std::uint32_t mask = 0;
      for (std::size_t i = 0; i < ff->size(); ++i) {
        if ((*ff)[i] >= v) mask |= 1u << i;
      }
      steps.weak_at.push_back((*fm)(mask));
    }
    p.candidates_ = std::move(vals);
    p.data_ = std::move(steps);
    return p;
  }
  const auto& dl = std::get<DistortedLebesgue>(m);
  const auto* cf = std::get_if<ContinuousFunction>(&f);
  if (!cf) throw InputError("survival: Lebesgue-type measure needs a function on [0,1]");
  std::vector<double> cands{0.0};
  for (double y : cf->base.y()) cands.push_back(cf->outer(y));
  std::sort(cands.begin(), cands.end());
  cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
  p.candidates_ = std::move(cands);
  p.data_ = SurvivalProfile::Closed{*cf, dl};
  return p;
}

double SurvivalProfile::weak(double t) const {
  if (const auto* s = std::get_if<Steps>(&data_)) {
    if (candidates_.empty()) return 0.0;
    auto it = std::lower_bound(candidates_.begin(), candidates_.end(), t);
    if (it == candidates_.end()) return 0.0;
    return s->weak_at[static_cast<std::size_t>(it - candidates_.begin())];
  }
  const auto& c = std::get<Closed>(data_);
  if (t <= c.f.outer(0.0)) return total_;
  return c.m.of_length(c.f.base.level_length(c.f.outer.invert(t)));
}

double SurvivalProfile::strict(double t) const {
  if (const auto* s = std::get_if<Steps>(&data_)) {
    auto it = std::upper_bound(candidates_.begin(), candidates_.end(), t);
    if (it == candidates_.end()) return 0.0;
    return s->weak_at[static_cast<std::size_t>(it - candidates_.begin())];
  }
  const auto& c = std::get<Closed>(data_);
  if (t < c.f.outer(0.0)) return total_;
  return c.m.of_length(c.f.base.strict_level_length(c.f.outer.invert(t)));
}

const std::vector<double>& SurvivalProfile::weak_at_candidates() const {
  const auto* s = std::get_if<Steps>(&data_);
  if (!s) throw InputError("weak_at_candidates: continuous profile");
  return s->weak_at;
}

double essinf(const Measure& m, const Function& f) {
  if (const auto* cf = std::get_if<ContinuousFunction>(&f)) {
    survival(m, f);  // carrier check
    return cf->min_value();
  }
  const auto p = survival(m, f);
  const auto& w = p.weak_at_candidates();
  double best = 0.0;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (w[k] == p.total()) best = p.candidates()[k];
  }
  return best;
}

}  // namespace unineq
