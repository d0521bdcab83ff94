#include "unineq/binary_op.hpp"

#include <algorithm>
#include <cmath>

namespace unineq {
namespace {

constexpr OpFlags kTNormFlags = OpFlag::Nondecreasing | OpFlag::AnnihilatorZero | OpFlag::Commutative |
                                OpFlag::Associative | OpFlag::BoundedAboveByMin;
constexpr OpFlags kTConormFlags =
    OpFlag::Nondecreasing | OpFlag::Commutative | OpFlag::Associative | OpFlag::BoundedBelowByMax;

void require_neutral_in_cap(double e, Cap cap, const char* what) {
  if (std::isnan(e) || !(e > 0.0) || e > unineq::cap_value(cap)) {
    throw InputError(std::string(what) + ": neutral element must lie in (0, cap], got " + format_value(e));
  }
}

}  // namespace

BinaryOp::BinaryOp() : neutral_(kInf), flags_(kTNormFlags), name_("min") {}

BinaryOp BinaryOp::min(Cap cap) {
  BinaryOp op;
  op.kind_ = OpKind::Min;
  op.cap_ = cap;
  op.neutral_ = unineq::cap_value(cap);
  op.flags_ = kTNormFlags;
  op.name_ = "min";
  return op;
}

BinaryOp BinaryOp::prod(Cap cap) {
  BinaryOp op = min(cap);
  op.kind_ = OpKind::Prod;
  op.neutral_ = 1.0;
  op.flags_ = OpFlag::Nondecreasing | OpFlag::AnnihilatorZero | OpFlag::Commutative | OpFlag::Associative;
  if (cap == Cap::Unit) op.flags_ = kTNormFlags;
  op.name_ = "prod";
  return op;
}

BinaryOp BinaryOp::smallest_with_neutral(double e, Cap cap) {
  require_neutral_in_cap(e, cap, "smallest");
  BinaryOp op = min(cap);
  op.kind_ = OpKind::SmallestWithNeutral;
  op.neutral_ = e;
  op.flags_ = OpFlag::Nondecreasing | OpFlag::AnnihilatorZero | OpFlag::Commutative;
  op.name_ = "smallest";
  return op;
}

BinaryOp BinaryOp::greatest_with_neutral(double e, Cap cap) {
  require_neutral_in_cap(e, cap, "greatest");
  BinaryOp op = min(cap);
  op.kind_ = OpKind::GreatestWithNeutral;
  op.neutral_ = e;
  op.flags_ = OpFlag::Nondecreasing | OpFlag::AnnihilatorZero | OpFlag::Commutative;
  op.name_ = "greatest";
  return op;
}

BinaryOp BinaryOp::lukasiewicz() {
  BinaryOp op = min(Cap::Unit);
  op.kind_ = OpKind::Lukasiewicz;
  op.name_ = "lukasiewicz";
  return op;
}

BinaryOp BinaryOp::drastic() {
  BinaryOp op = min(Cap::Unit);
  op.kind_ = OpKind::Drastic;
  op.name_ = "drastic";
  return op;
}

BinaryOp BinaryOp::max(Cap cap) {
  BinaryOp op;
  op.kind_ = OpKind::Max;
  op.cap_ = cap;
  op.neutral_ = 0.0;
  op.flags_ = kTConormFlags;
  op.name_ = "max";
  return op;
}

BinaryOp BinaryOp::sum() {
  BinaryOp op = max(Cap::Extended);
  op.kind_ = OpKind::Sum;
  op.name_ = "sum";
  return op;
}

BinaryOp BinaryOp::probabilistic_sum() {
  BinaryOp op = max(Cap::Unit);
  op.kind_ = OpKind::ProbabilisticSum;
  op.name_ = "probsum";
  return op;
}

BinaryOp BinaryOp::lukasiewicz_conorm() {
  BinaryOp op = max(Cap::Unit);
  op.kind_ = OpKind::LukasiewiczConorm;
  op.name_ = "luk_conorm";
  return op;
}

BinaryOp BinaryOp::table(std::vector<double> nodes, std::vector<double> values, std::optional<double> neutral,
                         OpFlags flags, Cap cap, std::string name) {
  if (nodes.empty()) throw InputError("table op: no nodes");
  if (values.size() != nodes.size() * nodes.size()) {
    throw InputError("table op: expected " + std::to_string(nodes.size() * nodes.size()) + " values, got " +
                     std::to_string(values.size()));
  }
  if (!std::is_sorted(nodes.begin(), nodes.end()) ||
      std::adjacent_find(nodes.begin(), nodes.end()) != nodes.end()) {
    throw InputError("table op: nodes must be strictly ascending");
  }
  for (double x : nodes) require_nonnegative(x, "table op node");
  for (double v : values) require_nonnegative(v, "table op value");
  BinaryOp op;
  op.kind_ = OpKind::Table;
  op.cap_ = cap;
  op.neutral_ = neutral;
  op.flags_ = flags;
  op.name_ = std::move(name);
  op.table_ = std::make_shared<const TableData>(TableData{std::move(nodes), std::move(values)});
  return op;
}

BinaryOp BinaryOp::closure(std::function<double(double, double)> fn, std::optional<double> neutral, OpFlags flags,
                           Cap cap, std::string name) {
  if (!fn) throw InputError("closure op: empty function");
  BinaryOp op;
  op.kind_ = OpKind::Closure;
  op.cap_ = cap;
  op.neutral_ = neutral;
  op.flags_ = flags;
  op.name_ = std::move(name);
  op.fn_ = std::make_shared<const std::function<double(double, double)>>(std::move(fn));
  return op;
}

std::size_t BinaryOp::TableData::nearest(double x) const {
  auto it = std::lower_bound(nodes.begin(), nodes.end(), x);
  if (it == nodes.end()) return nodes.size() - 1;
  const auto hi = static_cast<std::size_t>(it - nodes.begin());
  if (hi == 0) return 0;
  // ties snap to the lower node
  return (x - nodes[hi - 1] <= nodes[hi] - x) ? hi - 1 : hi;
}

double BinaryOp::operator()(double a, double b) const {
  switch (kind_) {
    case OpKind::Min:
      return std::min(a, b);
    case OpKind::Prod:
      return ext_mul(a, b);
    case OpKind::SmallestWithNeutral: {
      const double e = *neutral_;
      if (a < e && b < e) return 0.0;
      if (a >= e && b >= e) return std::max(a, b);
      return std::min(a, b);
    }
    case OpKind::GreatestWithNeutral: {
      const double e = *neutral_;
      const double lo = std::min(a, b);
      if (lo == 0.0 || (a <= e && b <= e)) return lo;
      if (a > e && b > e) return kInf;
      return std::max(a, b);
    }
    case OpKind::Lukasiewicz:
      return std::max(a + b - 1.0, 0.0);
    case OpKind::Drastic:
      if (a == 1.0) return b;
      if (b == 1.0) return a;
      return 0.0;
    case OpKind::Max:
      return std::max(a, b);
    case OpKind::Sum:
      return a + b;
    case OpKind::ProbabilisticSum:
      return a + b - a * b;
    case OpKind::LukasiewiczConorm:
      return std::min(a + b, 1.0);
    case OpKind::Table: {
      const std::size_t n = table_->nodes.size();
      return table_->values[table_->nearest(a) * n + table_->nearest(b)];
    }
    case OpKind::Closure:
      return (*fn_)(a, b);
  }
  return 0.0;
}

bool BinaryOp::same_as(const BinaryOp& other) const {
  if (kind_ != other.kind_ || cap_ != other.cap_ || neutral_ != other.neutral_ || name_ != other.name_) return false;
  if (kind_ == OpKind::Table) {
    return table_->nodes == other.table_->nodes && table_->values == other.table_->values;
  }
  return true;
}

const std::vector<double>& BinaryOp::table_nodes() const {
  static const std::vector<double> empty;
  return table_ ? table_->nodes : empty;
}

const std::vector<double>& BinaryOp::table_values() const {
  static const std::vector<double> empty;
  return table_ ? table_->values : empty;
}

ExtValue eval_op(const BinaryOp& op, ExtValue a, ExtValue b) {
  if (!op.in_domain(a.value()) || !op.in_domain(b.value())) {
    throw InputError("op " + op.name() + ": arguments (" + format_value(a.value()) + ", " + format_value(b.value()) +
                     ") exceed domain cap " + format_value(op.cap_value()));
  }
  return ExtValue(op(a.value(), b.value()));
}

}  // namespace unineq
