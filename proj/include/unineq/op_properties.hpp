#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "unineq/binary_op.hpp"
#include "unineq/grid.hpp"
#include "unineq/transform.hpp"

namespace unineq {

/// Relative slack used by all grid property checks, so that rounding in
/// products and sums is not reported as a violation.
inline constexpr double kPropertyTol = 1e-12;

/// One requested property. Names: nondecreasing, annihilator_zero, neutral,
/// bounded_above_by_min, bounded_below_by_max, commutative, associative.
/// `neutral` carries its element; when absent the op's declared neutral is used.
struct OpProperty {
  std::string name;
  std::optional<double> neutral;

  std::string label() const;
};

/// Parses "nondecreasing,neutral(0.5),associative". Throws InputError on
/// unknown names.
std::vector<OpProperty> parse_properties(std::string_view list);

/// Every property the op declares through its flags, plus its neutral element.
std::vector<OpProperty> declared_properties(const BinaryOp& op);

/// Grid points outside the op's domain cap are dropped before checking.
PropertyReport verify_op_properties(const BinaryOp& op, std::span<const OpProperty> properties, const GridSpec& grid,
                                    Exec exec = Exec::Serial);

/// A(B(a,b), B(c,d)) >= B(A(a,c), A(b,d)) on every grid quadruple.
PropertyReport check_domination(const BinaryOp& a, const BinaryOp& b, const GridSpec& grid, Exec exec = Exec::Serial);

enum class Distributivity { Sub, Super };

/// Sub: phi(x*y) <= phi(x)*phi(y). Super: >=. Pairs whose transformed values
/// leave the op's domain count as failures.
PropertyReport check_distributivity(const MonotoneTransform& phi, const BinaryOp& star, Distributivity mode,
                                    const GridSpec& grid, Exec exec = Exec::Serial);

}  // namespace unineq
