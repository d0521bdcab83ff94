#pragma once

#include <variant>
#include <vector>

#include "unineq/function.hpp"
#include "unineq/measure.hpp"

namespace unineq {

/// t -> m({f >= t}) and t -> m({f > t}) for one (measure, function) pair,
/// with the candidate t-values the integral evaluators optimize over.
///
/// Finite pairs: candidates are the distinct values of f, ascending, and both
/// profiles are exact step functions. Continuous pairs: candidates are the
/// transformed vertex values of f (plus 0) and both profiles are closed form.
class SurvivalProfile {
 public:
  double weak(double t) const;
  double strict(double t) const;

  const std::vector<double>& candidates() const { return candidates_; }
  /// Largest value of f; weak(t) = m(empty) = 0 for every t > t_max.
  double t_max() const { return candidates_.empty() ? 0.0 : candidates_.back(); }
  double total() const { return total_; }
  bool is_finite() const { return std::holds_alternative<Steps>(data_); }

  /// Finite case only: weak(candidates()[k]).
  const std::vector<double>& weak_at_candidates() const;

  friend SurvivalProfile survival(const Measure& m, const Function& f);

 private:
  struct Steps {
    std::vector<double> weak_at;  // weak(v_k)
  };
  struct Closed {
    ContinuousFunction f;
    DistortedLebesgue m;
  };

  std::vector<double> candidates_;
  double total_ = 0.0;
  std::variant<Steps, Closed> data_;
};

/// Throws InputError when the function does not live on the measure's carrier.
SurvivalProfile survival(const Measure& m, const Function& f);

/// sup {t : m({f >= t}) = m(X)}.
double essinf(const Measure& m, const Function& f);

}  // namespace unineq
