#pragma once

#include <cstddef>

#include "unineq/binary_op.hpp"
#include "unineq/function.hpp"
#include "unineq/measure.hpp"
#include "unineq/survival.hpp"

namespace unineq {

/// Interior nodes per segment of the continuous search before refinement.
inline constexpr std::size_t kSegmentNodes = 32;
/// Default bracket width at which golden-section refinement stops.
inline constexpr double kRefineTol = 1e-13;

/// An integral value. Finite instances are exact (tol = 0); continuous
/// instances carry the refinement tolerance and the number of t-values tried.
struct IntegralValue {
  double value = 0.0;
  double tol = 0.0;
  std::size_t candidates = 0;
};

/// sup_t t (x) m({f >= t}). Throws InputError unless the op declares the
/// nondecreasing and annihilator flags, or when values leave its domain.
IntegralValue universal_integral(const BinaryOp& op, const Measure& m, const Function& f, double tol = kRefineTol);

IntegralValue sugeno(const Measure& m, const Function& f);
IntegralValue shilkret(const Measure& m, const Function& f);

/// max{m({f >= e}), essinf f}. e must lie in (0, inf].
IntegralValue smallest_e_integral(const Measure& m, const Function& f, double e);

/// sup over t in [0,1] of t (*) m({f >= t}); f must be unit scale.
IntegralValue seminormed_integral(const BinaryOp& semicopula, const Measure& m, const Function& f,
                                  double tol = kRefineTol);

/// inf_t t (+) m({f > t}), with 0 (+) m({f > 0}) standing for the limit t -> 0+.
/// The op must have neutral element 0 and be nondecreasing.
IntegralValue semiconormed_integral(const BinaryOp& pseudo_add, const Measure& m, const Function& f,
                                    double tol = kRefineTol);

}  // namespace unineq
