#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "unineq/extval.hpp"

namespace unineq {

enum class OpKind {
  Min,
  Prod,
  SmallestWithNeutral,
  GreatestWithNeutral,
  Lukasiewicz,
  Drastic,
  Max,
  Sum,
  ProbabilisticSum,
  LukasiewiczConorm,
  Table,
  Closure,
};

/// Algebraic claims attached to an operation. Claims are checked on grids by
/// verify_op_properties, never assumed proven.
enum class OpFlag : unsigned {
  Nondecreasing = 1u << 0,
  AnnihilatorZero = 1u << 1,
  Commutative = 1u << 2,
  Associative = 1u << 3,
  BoundedAboveByMin = 1u << 4,
  BoundedBelowByMax = 1u << 5,
};

using OpFlags = unsigned;

constexpr OpFlags operator|(OpFlag a, OpFlag b) { return static_cast<unsigned>(a) | static_cast<unsigned>(b); }
constexpr OpFlags operator|(OpFlags a, OpFlag b) { return a | static_cast<unsigned>(b); }

/// Domain of an operation: [0,1] or [0,inf].
enum class Cap { Unit, Extended };

constexpr double cap_value(Cap c) { return c == Cap::Unit ? 1.0 : kInf; }

/// A total binary operation on [0,cap]^2 carrying a neutral element and declared flags.
///
/// Houses pseudo-multiplications, pseudo-additions, semicopulas, t-norms and
/// t-conorms. Instances are immutable and cheap to copy.
class BinaryOp {
 public:
  BinaryOp();

  static BinaryOp min(Cap cap = Cap::Extended);
  static BinaryOp prod(Cap cap = Cap::Extended);
  static BinaryOp smallest_with_neutral(double e, Cap cap = Cap::Extended);
  static BinaryOp greatest_with_neutral(double e, Cap cap = Cap::Extended);
  static BinaryOp lukasiewicz();
  static BinaryOp drastic();
  static BinaryOp max(Cap cap = Cap::Extended);
  static BinaryOp sum();
  static BinaryOp probabilistic_sum();
  static BinaryOp lukasiewicz_conorm();

  /// Dense table over `nodes` x `nodes` (row-major, first argument selects the row).
  /// Arguments are snapped to the nearest node; no interpolation.
  static BinaryOp table(std::vector<double> nodes, std::vector<double> values, std::optional<double> neutral,
                        OpFlags flags, Cap cap, std::string name = "table");

  static BinaryOp closure(std::function<double(double, double)> fn, std::optional<double> neutral, OpFlags flags,
                          Cap cap, std::string name);

  OpKind kind() const { return kind_; }
  Cap cap() const { return cap_; }
  double cap_value() const { return unineq::cap_value(cap_); }
  const std::optional<double>& neutral() const { return neutral_; }
  OpFlags flags() const { return flags_; }
  bool has(OpFlag f) const { return (flags_ & static_cast<unsigned>(f)) != 0; }
  const std::string& name() const { return name_; }

  /// Min or Max: results are always one of the arguments.
  bool is_lattice() const { return kind_ == OpKind::Min || kind_ == OpKind::Max; }

  /// Unchecked evaluation; callers guarantee a, b in [0, cap].
  double operator()(double a, double b) const;

  bool in_domain(double x) const { return !(x < 0.0) && x <= cap_value(); }

  /// Same kind, cap and neutral; closures compare by name only.
  bool same_as(const BinaryOp& other) const;

  // Table payload, exposed for serialization.
  const std::vector<double>& table_nodes() const;
  const std::vector<double>& table_values() const;

 private:
  struct TableData {
    std::vector<double> nodes;
    std::vector<double> values;
    std::size_t nearest(double x) const;
  };

  OpKind kind_ = OpKind::Min;
  Cap cap_ = Cap::Extended;
  std::optional<double> neutral_;
  OpFlags flags_ = 0;
  std::string name_;
  std::shared_ptr<const TableData> table_;
  std::shared_ptr<const std::function<double(double, double)>> fn_;
};

/// Domain-checked evaluation.
ExtValue eval_op(const BinaryOp& op, ExtValue a, ExtValue b);

}  // namespace unineq
