#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "unineq/aggregator.hpp"
#include "unineq/binary_op.hpp"
#include "unineq/function.hpp"
#include "unineq/grid.hpp"
#include "unineq/measure.hpp"
#include "unineq/transform.hpp"

namespace unineq {

enum class TheoremId {
  Thm31,
  Thm32,
  Thm41,
  Thm42H,
  Chebyshev,
  Holder,
  Minkowski,
  StarGeneral,
  SeminormedGeneral,
  RevChebyshev,
  RevHolder,
  RevMinkowski,
  RevSeminormed,
  Thm33,
  Jensen,
  RevJensen,
  Lyapunov,
  RevTransform,
};

const std::vector<TheoremId>& theorem_catalog();
std::string_view theorem_name(TheoremId id);
/// Throws InputError for names outside the catalog.
TheoremId parse_theorem(std::string_view name);

bool is_reverse(TheoremId id);
bool is_nary(TheoremId id);
bool is_two_function(TheoremId id);
bool is_single_function(TheoremId id);

/// Everything needed to evaluate one inequality. Which fields matter depends
/// on the theorem:
///  - thm31, thm41: H, U (U_0..U_n, identity when empty), psi (psi_1..psi_n)
///  - thm32, thm42_h, star_general: H, exponents xi0..xin, omega0..omegan
///  - chebyshev, holder (p, q), minkowski (s), rev_chebyshev, rev_holder (p, q),
///    rev_minkowski (k): H is the star operation
///  - seminormed_general, rev_seminormed: exponents alpha, lambda, beta,
///    upsilon, gamma, tau
///  - thm33, rev_transform: phi1, phi2; jensen, rev_jensen: phi;
///    lyapunov: exponents r, s
/// Missing exponents default to 1.
struct TheoremInstance {
  TheoremId theorem = TheoremId::Chebyshev;
  BinaryOp op;
  Measure measure;
  std::vector<Function> functions;
  Aggregator H;
  std::vector<MonotoneTransform> U;
  std::vector<MonotoneTransform> psi;
  MonotoneTransform phi;
  MonotoneTransform phi1;
  MonotoneTransform phi2;
  std::map<std::string, double> exponents;
  /// Also require op to be the smallest pseudo-multiplication with its neutral.
  bool require_smallest_op = false;
};

/// x -> post(I(pre(x))) around one integral; post is either a forward
/// transform or the inverse of one.
struct Leg {
  MonotoneTransform pre;
  MonotoneTransform post;
  bool post_inverse = false;

  double apply_post(double y) const { return post_inverse ? post.invert(y) : post(y); }
  bool is_identity() const { return pre.is_identity() && post.is_identity(); }
};

/// Common shape of every catalogued inequality:
///   legs[0].post(I(legs[0].pre(H(psi_1(f_1), ..., psi_n(f_n)))))
///     >= (or <=)  H(psi_1(legs[1].post(I(legs[1].pre(f_1)))), ...)
/// Single-function theorems use n = 1 with H the identity.
struct InequalityForm {
  bool reverse = false;
  Aggregator H;
  std::vector<MonotoneTransform> psi;
  std::vector<Leg> legs;
};

/// Throws InputError on missing or malformed theorem data.
InequalityForm resolve_form(const TheoremInstance& instance);

/// The theorem's scalar condition over a in a_grid^n and c in c_grid.
/// Forward: legs[0].post(legs[0].pre(H(psi(a))) (x) c) >= max_i H(.., psi_i(legs[i].post(legs[i].pre(a_i) (x) c)), ..).
/// Reverse swaps in (+), <= and min. Witness: (a_1, ..., a_n, c).
PropertyReport check_scalar_condition(const InequalityForm& form, const BinaryOp& op, const GridSpec& a_grid,
                                      const GridSpec& c_grid, Exec exec = Exec::Serial);

enum class Direction { GreaterEqual, LessEqual };
std::string_view direction_symbol(Direction d);

struct InequalityVerdict {
  TheoremId theorem = TheoremId::Chebyshev;
  double lhs = 0.0;
  double rhs = 0.0;
  Direction direction = Direction::GreaterEqual;
  double margin = 0.0;
  bool holds = false;
  double tol = 0.0;
  bool hypotheses_met = false;
  bool hypotheses_checked = true;
  PropertyReport report;
  /// I(...) on the left side and each inner integral on the right.
  double lhs_integral = 0.0;
  std::vector<double> rhs_integrals;
};

struct VerifyOptions {
  /// Added to the policy tolerance.
  double extra_tol = 0.0;
  bool skip_hypotheses = false;
  Exec exec = Exec::Serial;
};

/// Base tolerance for instances that are not exact (any non-lattice op,
/// transform or continuous carrier).
inline constexpr double kVerdictTol = 1e-9;

/// Evaluates both sides and checks every hypothesis of the selected theorem.
/// Hypothesis failures never suppress the evaluation.
InequalityVerdict verify(const TheoremInstance& instance, const VerifyOptions& options = {});

/// Category-checked entry points; each throws InputError for theorems outside its family.
InequalityVerdict verify_nary_H(const TheoremInstance& instance, const VerifyOptions& options = {});
InequalityVerdict verify_two_function(const TheoremInstance& instance, const VerifyOptions& options = {});
InequalityVerdict verify_single_function(const TheoremInstance& instance, const VerifyOptions& options = {});

/// Hypotheses only.
PropertyReport check_hypotheses(const TheoremInstance& instance, Exec exec = Exec::Serial);

}  // namespace unineq
