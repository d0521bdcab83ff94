#include "unineq/op_properties.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>

#include "unineq/extval.hpp"

namespace unineq {
namespace {

constexpr std::string_view kKnown[] = {"nondecreasing",        "annihilator_zero",     "neutral",     "commutative",
                                       "bounded_above_by_min", "bounded_below_by_max", "associative"};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

double parse_number(std::string_view s) {
  s = trim(s);
  if (s == "inf") return kInf;
  double v = 0.0;
  auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size()) {
    throw InputError("bad number in property list: '" + std::string(s) + "'");
  }
  return v;
}

std::vector<double> domain_points(const BinaryOp& op, const GridSpec& grid) {
  std::vector<double> pts;
  for (double x : grid.points()) {
    if (op.in_domain(x)) pts.push_back(x);
  }
  return pts;
}

std::vector<double> pick(const std::vector<double>& pts, std::span<const std::size_t> idx) {
  std::vector<double> w;
  w.reserve(idx.size());
  for (std::size_t i : idx) w.push_back(pts[i]);
  return w;
}

PropertyCheck run_check(std::string property, const std::vector<double>& pts, std::size_t arity,
                        const std::function<bool(const double*)>& holds, Exec exec) {
  PropertyCheck check;
  check.property = std::move(property);
  std::vector<std::size_t> extents(arity, pts.size());
  auto hit = first_violation(
      extents,
      [&](std::span<const std::size_t> idx) {
        double args[4];
        for (std::size_t k = 0; k < idx.size(); ++k) args[k] = pts[idx[k]];
        return holds(args);
      },
      exec);
  if (hit) {
    check.passed = false;
    check.witness = pick(pts, *hit);
  }
  return check;
}

PropertyCheck check_one(const BinaryOp& op, const OpProperty& prop, const std::vector<double>& pts, Exec exec) {
  const double t = kPropertyTol;
  if (prop.name == "nondecreasing") {
    // adjacent steps in each argument; witness (a, a_next, b)
    std::vector<double> lower(pts.begin(), pts.empty() ? pts.end() : pts.end() - 1);
    auto next = [&](double a) { return *std::upper_bound(pts.begin(), pts.end(), a); };
    PropertyCheck c;
    c.property = prop.label();
    if (pts.size() < 2) return c;
    std::vector<std::size_t> extents{lower.size(), pts.size()};
    auto hit = first_violation(
        extents,
        [&](std::span<const std::size_t> idx) {
          const double a = lower[idx[0]], a2 = next(a), b = pts[idx[1]];
          return approx_le(op(a, b), op(a2, b), t) && approx_le(op(b, a), op(b, a2), t);
        },
        exec);
    if (hit) {
      const double a = lower[(*hit)[0]];
      c.passed = false;
      c.witness = {a, next(a), pts[(*hit)[1]]};
    }
    return c;
  }
  if (prop.name == "annihilator_zero") {
    return run_check(prop.label(), pts, 1, [&](const double* x) { return op(x[0], 0.0) == 0.0 && op(0.0, x[0]) == 0.0; },
                     exec);
  }
  if (prop.name == "neutral") {
    const auto e = prop.neutral ? prop.neutral : op.neutral();
    if (!e || !op.in_domain(*e)) {
      PropertyCheck c;
      c.property = prop.label();
      c.passed = false;
      c.detail = e ? "neutral element outside the domain" : "op declares no neutral element";
      return c;
    }
    return run_check(prop.label(), pts, 1,
                     [&](const double* x) { return approx_eq(op(x[0], *e), x[0], t) && approx_eq(op(*e, x[0]), x[0], t); },
                     exec);
  }
  if (prop.name == "commutative") {
    return run_check(prop.label(), pts, 2, [&](const double* x) { return approx_eq(op(x[0], x[1]), op(x[1], x[0]), t); },
                     exec);
  }
  if (prop.name == "bounded_above_by_min") {
    return run_check(prop.label(), pts, 2,
                     [&](const double* x) { return approx_le(op(x[0], x[1]), std::min(x[0], x[1]), t); }, exec);
  }
  if (prop.name == "bounded_below_by_max") {
    return run_check(prop.label(), pts, 2,
                     [&](const double* x) { return approx_le(std::max(x[0], x[1]), op(x[0], x[1]), t); }, exec);
  }
  if (prop.name == "associative") {
    return run_check(prop.label(), pts, 3,
                     [&](const double* x) {
                       const double l = op(op(x[0], x[1]), x[2]);
                       const double r = op(x[0], op(x[1], x[2]));
                       if (l == r) return true;
                       return approx_eq(std::min(l, op.cap_value()), std::min(r, op.cap_value()), 1e-9);
                     },
                     exec);
  }
  throw InputError("unknown property '" + prop.name + "'");
}

}  // namespace

std::string OpProperty::label() const {
  if (name == "neutral" && neutral) return "neutral(" + format_value(*neutral) + ")";
  return name;
}

std::vector<OpProperty> parse_properties(std::string_view list) {
  std::vector<OpProperty> out;
  while (!list.empty()) {
    // split on commas outside parentheses
    std::size_t depth = 0, cut = list.size();
    for (std::size_t i = 0; i < list.size(); ++i) {
      if (list[i] == '(') ++depth;
      if (list[i] == ')' && depth > 0) --depth;
      if (list[i] == ',' && depth == 0) {
        cut = i;
        break;
      }
    }
    std::string_view item = trim(list.substr(0, cut));
    list = cut < list.size() ? list.substr(cut + 1) : std::string_view{};
    if (item.empty()) continue;
    OpProperty p;
    if (auto open = item.find('('); open != std::string_view::npos) {
      if (item.back() != ')') throw InputError("malformed property '" + std::string(item) + "'");
      p.name = std::string(trim(item.substr(0, open)));
      p.neutral = parse_number(item.substr(open + 1, item.size() - open - 2));
      if (p.name != "neutral") throw InputError("only neutral takes an argument, got '" + std::string(item) + "'");
    } else {
      p.name = std::string(item);
    }
    if (std::find(std::begin(kKnown), std::end(kKnown), p.name) == std::end(kKnown)) {
      throw InputError("unknown property '" + p.name + "'");
    }
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<OpProperty> declared_properties(const BinaryOp& op) {
  std::vector<OpProperty> out;
  const std::pair<OpFlag, const char*> table[] = {
      {OpFlag::Nondecreasing, "nondecreasing"},
      {OpFlag::AnnihilatorZero, "annihilator_zero"},
      {OpFlag::Commutative, "commutative"},
      {OpFlag::Associative, "associative"},
      {OpFlag::BoundedAboveByMin, "bounded_above_by_min"},
      {OpFlag::BoundedBelowByMax, "bounded_below_by_max"},
  };
  for (auto [flag, name] : table) {
    if (op.has(flag)) out.push_back({name, std::nullopt});
  }
  if (op.neutral()) out.push_back({"neutral", op.neutral()});
  return out;
}

PropertyReport verify_op_properties(const BinaryOp& op, std::span<const OpProperty> properties, const GridSpec& grid,
                                    Exec exec) {
  const auto pts = domain_points(op, grid);
  PropertyReport report;
  report.grid = GridSpec(pts).describe();
  for (const auto& prop : properties) report.add(check_one(op, prop, pts, exec));
  return report;
}

PropertyReport check_domination(const BinaryOp& a, const BinaryOp& b, const GridSpec& grid, Exec exec) {
  if (a.cap() != b.cap()) throw InputError("domination: ops must share a domain cap");
  const auto pts = domain_points(a, grid);
  PropertyReport report;
  report.grid = GridSpec(pts).describe();
  report.add(run_check(a.name() + " dominates " + b.name(), pts, 4,
                       [&](const double* x) {
                         const double l = a(b(x[0], x[1]), b(x[2], x[3]));
                         const double r = b(a(x[0], x[2]), a(x[1], x[3]));
                         return approx_le(r, l, kPropertyTol);
                       },
                       exec));
  return report;
}

PropertyReport check_distributivity(const MonotoneTransform& phi, const BinaryOp& star, Distributivity mode,
                                    const GridSpec& grid, Exec exec) {
  const auto pts = domain_points(star, grid);
  PropertyReport report;
  report.grid = GridSpec(pts).describe();
  const bool sub = mode == Distributivity::Sub;
  report.add(run_check(std::string(sub ? "subdistributive " : "superdistributive ") + phi.describe() + " over " +
                           star.name(),
                       pts, 2,
                       [&](const double* x) {
                         const double px = phi(x[0]), py = phi(x[1]);
                         if (!star.in_domain(px) || !star.in_domain(py)) return false;
                         const double l = phi(star(x[0], x[1]));
                         const double r = star(px, py);
                         return sub ? approx_le(l, r, kPropertyTol) : approx_le(r, l, kPropertyTol);
                       },
                       exec));
  return report;
}

}  // namespace unineq
