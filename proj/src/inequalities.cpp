#include "unineq/inequalities.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <set>

#include "unineq/extval.hpp"
#include "unineq/integrals.hpp"
#include "unineq/op_properties.hpp"

namespace unineq {

namespace {

struct CatalogEntry {
  TheoremId id;
  std::string_view name;
};

constexpr std::array<CatalogEntry, 18> kCatalog{{
    {TheoremId::Thm31, "thm31"},
    {TheoremId::Thm32, "thm32"},
    {TheoremId::Thm41, "thm41"},
    {TheoremId::Thm42H, "thm42_h"},
    {TheoremId::Chebyshev, "chebyshev"},
    {TheoremId::Holder, "holder"},
    {TheoremId::Minkowski, "minkowski"},
    {TheoremId::StarGeneral, "star_general"},
    {TheoremId::SeminormedGeneral, "seminormed_general"},
    {TheoremId::RevChebyshev, "rev_chebyshev"},
    {TheoremId::RevHolder, "rev_holder"},
    {TheoremId::RevMinkowski, "rev_minkowski"},
    {TheoremId::RevSeminormed, "rev_seminormed"},
    {TheoremId::Thm33, "thm33"},
    {TheoremId::Jensen, "jensen"},
    {TheoremId::RevJensen, "rev_jensen"},
    {TheoremId::Lyapunov, "lyapunov"},
    {TheoremId::RevTransform, "rev_transform"},
}};

bool is_power_family(TheoremId id) {
  switch (id) {
    case TheoremId::Thm32:
    case TheoremId::StarGeneral:
    case TheoremId::Chebyshev:
    case TheoremId::Holder:
    case TheoremId::Minkowski:
    case TheoremId::SeminormedGeneral:
      return true;
    default:
      return false;
  }
}

// reverse theorems with the omega*xi <= 1 side condition
bool has_reverse_exponent_bound(TheoremId id) {
  switch (id) {
    case TheoremId::Thm42H:
    case TheoremId::RevChebyshev:
    case TheoremId::RevHolder:
    case TheoremId::RevMinkowski:
    case TheoremId::RevSeminormed:
      return true;
    default:
      return false;
  }
}

// unit-interval corollaries stated for normalized measures
bool needs_unit_class(TheoremId id) {
  switch (id) {
    case TheoremId::SeminormedGeneral:
    case TheoremId::RevChebyshev:
    case TheoremId::RevHolder:
    case TheoremId::RevMinkowski:
    case TheoremId::RevSeminormed:
      return true;
    default:
      return false;
  }
}

std::set<std::string> allowed_exponents(TheoremId id, std::size_t n) {
  switch (id) {
    case TheoremId::Thm32:
    case TheoremId::Thm42H:
    case TheoremId::StarGeneral: {
      std::set<std::string> s;
      for (std::size_t j = 0; j <= n; ++j) {
        s.insert("xi" + std::to_string(j));
        s.insert("omega" + std::to_string(j));
      }
      return s;
    }
    case TheoremId::Holder:
    case TheoremId::RevHolder:
      return {"p", "q"};
    case TheoremId::Minkowski:
      return {"s"};
    case TheoremId::RevMinkowski:
      return {"k"};
    case TheoremId::SeminormedGeneral:
    case TheoremId::RevSeminormed:
      return {"alpha", "lambda", "beta", "upsilon", "gamma", "tau"};
    case TheoremId::Lyapunov:
      return {"r", "s"};
    default:
      return {};
  }
}

Leg power_leg(double xi, double omega) { return {MonotoneTransform::power(xi), MonotoneTransform::power(omega), false}; }

Leg inverse_leg(const MonotoneTransform& u) { return {u, u, true}; }

IntegralValue integrate(TheoremId id, const BinaryOp& op, const Measure& m, const Function& f) {
  if (is_reverse(id)) return semiconormed_integral(op, m, f);
  if (id == TheoremId::SeminormedGeneral) return seminormed_integral(op, m, f);
  return universal_integral(op, m, f);
}

double finite_data_max(const std::vector<Function>& fs) {
  double top = 0.0;
  for (const auto& f : fs) {
    if (const auto* ff = std::get_if<FiniteFunction>(&f)) {
      for (double v : ff->values())
        if (std::isfinite(v)) top = std::max(top, v);
    } else {
      const double v = max_value(f);
      if (std::isfinite(v)) top = std::max(top, v);
    }
  }
  return top;
}

double a_range(const TheoremInstance& inst) {
  return inst.op.cap() == Cap::Unit ? 1.0 : std::max(1.0, finite_data_max(inst.functions));
}

GridSpec c_grid_for(const BinaryOp& op, const Measure& m, std::size_t count) {
  if (op.cap() == Cap::Unit) return GridSpec::uniform(0.0, 1.0, count);
  const double mx = total(m);
  if (std::isinf(mx)) return GridSpec::for_cap(kInf, op.neutral(), count);
  return GridSpec::uniform(0.0, mx, count);
}

std::optional<double> checked_apply(const BinaryOp& op, double a, double b) {
  if (!op.in_domain(a) || !op.in_domain(b)) return std::nullopt;
  return op(a, b);
}

// Evaluates both sides of the scalar condition at one point; nullopt when a
// value leaves the op's domain.
struct ScalarSides {
  double lhs = 0.0;
  std::vector<double> rhs;
};

std::optional<ScalarSides> scalar_sides(const InequalityForm& form, const BinaryOp& op, std::span<const double> a,
                                        double c) {
  const std::size_t n = a.size();
  std::vector<double> args(n);
  for (std::size_t i = 0; i < n; ++i) args[i] = form.psi[i](a[i]);
  ScalarSides out;
  try {
    const auto l = checked_apply(op, form.legs[0].pre(form.H(args)), c);
    if (!l) return std::nullopt;
    out.lhs = form.legs[0].apply_post(*l);
    for (std::size_t i = 0; i < n; ++i) {
      const auto r = checked_apply(op, form.legs[i + 1].pre(a[i]), c);
      if (!r) return std::nullopt;
      auto mod = args;
      mod[i] = form.psi[i](form.legs[i + 1].apply_post(*r));
      out.rhs.push_back(form.H(mod));
    }
  } catch (const InputError&) {
    return std::nullopt;
  }
  return out;
}

bool scalar_holds(const ScalarSides& s, bool reverse) {
  for (double r : s.rhs) {
    const bool ok = reverse ? approx_le(s.lhs, r, kPropertyTol) : approx_le(r, s.lhs, kPropertyTol);
    if (!ok) return false;
  }
  return true;
}

PropertyCheck flag_check(std::string name, bool passed, std::string detail = {}) {
  PropertyCheck c;
  c.property = std::move(name);
  c.passed = passed;
  if (!passed) c.detail = std::move(detail);
  return c;
}

void add_prefixed(PropertyReport& report, const PropertyReport& part, const std::string& prefix, bool required = true) {
  for (auto c : part.checks) {
    c.property = prefix + c.property;
    c.required = required;
    report.add(std::move(c));
  }
}

struct Evaluated {
  IntegralValue lhs;
  std::vector<IntegralValue> rhs;
};

Evaluated evaluate(const TheoremInstance& inst, const InequalityForm& form) {
  const std::size_t n = inst.functions.size();
  std::vector<Function> inner(n);
  for (std::size_t i = 0; i < n; ++i) inner[i] = transformed(inst.functions[i], form.psi[i]);
  Evaluated ev;
  const Function combined = apply_pointwise(form.H, inner);
  ev.lhs = integrate(inst.theorem, inst.op, inst.measure, transformed(combined, form.legs[0].pre));
  for (std::size_t i = 0; i < n; ++i)
    ev.rhs.push_back(integrate(inst.theorem, inst.op, inst.measure, transformed(inst.functions[i], form.legs[i + 1].pre)));
  return ev;
}

PropertyReport hypotheses(const TheoremInstance& inst, const InequalityForm& form, const Evaluated& ev, Exec exec) {
  const TheoremId id = inst.theorem;
  const std::size_t n = inst.functions.size();
  const bool reverse = is_reverse(id);
  const bool multi = !is_single_function(id);
  const double A = a_range(inst);
  const auto& op = inst.op;
  PropertyReport report;

  // operation class
  if (reverse) {
    const bool ok = op.has(OpFlag::Nondecreasing) && op.neutral() && *op.neutral() == 0.0;
    report.add(flag_check("op_pseudo_addition", ok, "op must be nondecreasing with neutral 0"));
    const std::vector<OpProperty> props{{"nondecreasing", {}}, {"neutral", 0.0}};
    add_prefixed(report, verify_op_properties(op, props, GridSpec::for_cap(op.cap_value(), 0.0, 21), exec), "op_");
  } else {
    const auto e = op.neutral();
    bool ok = op.has(OpFlag::Nondecreasing) && op.has(OpFlag::AnnihilatorZero) && e && *e > 0.0;
    report.add(flag_check("op_pseudo_multiplication", ok, "op must be nondecreasing with annihilator 0 and neutral e > 0"));
    std::vector<OpProperty> props{{"nondecreasing", {}}, {"annihilator_zero", {}}};
    if (e) props.push_back({"neutral", *e});
    if (id == TheoremId::SeminormedGeneral) props.push_back({"bounded_above_by_min", {}});
    add_prefixed(report, verify_op_properties(op, props, GridSpec::for_cap(op.cap_value(), e, 21), exec), "op_");
    if (id == TheoremId::SeminormedGeneral)
      report.add(flag_check("op_semicopula", op.cap() == Cap::Unit && e && *e == 1.0,
                            "op must act on [0,1] with neutral 1"));
    if (inst.require_smallest_op)
      report.add(flag_check("op_smallest", op.kind() == OpKind::SmallestWithNeutral,
                            "op is not the smallest pseudo-multiplication"));
  }

  if (multi && n >= 2) {
    PropertyCheck c;
    c.property = "comonotone_system";
    for (std::size_t i = 0; i < n && c.passed; ++i)
      for (std::size_t j = i + 1; j < n && c.passed; ++j) {
        const auto r = is_comonotone(inst.functions[i], inst.functions[j]);
        if (!r.comonotone) {
          c.passed = false;
          c.witness = {static_cast<double>(i), static_cast<double>(j)};
          if (r.witness) {
            c.witness.push_back(static_cast<double>(r.witness->first));
            c.witness.push_back(static_cast<double>(r.witness->second));
          }
          c.detail = "functions " + std::to_string(i) + " and " + std::to_string(j) + " are not comonotone";
        }
      }
    report.add(std::move(c));
  }

  if (multi) {
    const double hcap = form.H.kind() == Aggregator::Kind::Binary ? std::min(A, form.H.star().cap_value()) : A;
    add_prefixed(report, check_H_monotone(form.H, GridSpec::uniform(0.0, hcap, 21), exec), "");
    if (form.H.arity() >= 2) {
      const auto mode = reverse ? HBound::BelowByMax : HBound::AboveByMin;
      add_prefixed(report, check_H_boundedness(form.H, mode, GridSpec::uniform(0.0, hcap, 21), exec), "H_", false);
    }
  }

  if (!reverse && multi) {
    PropertyCheck c;
    c.property = "b_op_mX_le_b";
    const double mx = total(inst.measure);
    auto bs = GridSpec::uniform(0.0, A, 101);
    if (op.cap() == Cap::Extended) bs = bs.with(std::array{kInf});
    for (double b : bs.points()) {
      const auto v = checked_apply(op, b, mx);
      if (!v || !approx_le(*v, b, kPropertyTol)) {
        c.passed = false;
        c.witness = {b, mx};
        c.detail = v ? "b (x) m(X) exceeds b" : "m(X) lies outside the op domain";
        break;
      }
    }
    report.add(std::move(c));
  }

  {
    PropertyCheck c;
    c.property = "finite_inner_integrals";
    if (id == TheoremId::RevTransform) {
      if (!std::isfinite(ev.lhs.value)) {
        c.passed = false;
        c.witness = {0.0};
      }
    } else {
      for (std::size_t i = 0; i < ev.rhs.size(); ++i)
        if (!std::isfinite(ev.rhs[i].value)) {
          c.passed = false;
          c.witness = {static_cast<double>(i + 1)};
          break;
        }
    }
    if (!c.passed) c.detail = "an inner integral is infinite";
    report.add(std::move(c));
  }

  if (is_power_family(id)) {
    PropertyCheck c;
    c.property = "exponent_condition";
    for (std::size_t i = 0; i < n && c.passed; ++i) {
      const double prod = form.legs[i + 1].pre.exponent() * form.legs[i + 1].post.exponent();
      const double top = std::max(finite_data_max({inst.functions[i]}), 1e-300);
      const auto xs = GridSpec::uniform(0.0, top, 101);
      for (double x : xs.points()) {
        if (!approx_le(x, std::pow(x, 1.0 / prod), kPropertyTol)) {
          c.passed = false;
          c.witness = {static_cast<double>(i + 1), x};
          c.detail = "x^(1/(xi*omega)) < x for function " + std::to_string(i + 1);
          break;
        }
      }
    }
    report.add(std::move(c));
  }
  if (has_reverse_exponent_bound(id)) {
    PropertyCheck c;
    c.property = "exponent_condition";
    for (std::size_t i = 0; i < n; ++i) {
      const double prod = form.legs[i + 1].pre.exponent() * form.legs[i + 1].post.exponent();
      if (prod > 1.0 + kPropertyTol) {
        c.passed = false;
        c.witness = {static_cast<double>(i + 1), prod};
        c.detail = "xi*omega > 1 for function " + std::to_string(i + 1);
        break;
      }
    }
    report.add(std::move(c));
  }

  if (needs_unit_class(id)) {
    report.add(flag_check("measure_normalized", approx_eq(total(inst.measure), 1.0, kPropertyTol), "m(X) != 1"));
    bool unit = true;
    for (const auto& f : inst.functions) unit = unit && is_unit_scale(f);
    report.add(flag_check("unit_scale", unit, "a function exceeds 1"));
  }

  if (id == TheoremId::Jensen || id == TheoremId::RevJensen) {
    const bool jensen = id == TheoremId::Jensen;
    PropertyCheck c;
    c.property = jensen ? "phi_le_identity" : "phi_ge_identity";
    c.required = false;
    const auto xs = GridSpec::uniform(0.0, A, 101);
    for (double x : xs.points()) {
      const double y = inst.phi(x);
      if (!(jensen ? approx_le(y, x, kPropertyTol) : approx_le(x, y, kPropertyTol))) {
        c.passed = false;
        c.witness = {x};
        break;
      }
    }
    report.add(std::move(c));
    const auto dist = check_distributivity(inst.phi, op, jensen ? Distributivity::Sub : Distributivity::Super,
                                           GridSpec::uniform(0.0, A, 21), exec);
    for (auto d : dist.checks) {
      if (d.detail.empty()) d.detail = d.property;
      d.property = jensen ? "phi_subdistributive" : "phi_superdistributive";
      d.required = false;
      report.add(std::move(d));
    }
  }

  const std::size_t k = points_per_axis(n + 1);
  const auto a_grid = GridSpec::uniform(0.0, A, k);
  const auto c_grid = c_grid_for(op, inst.measure, k);
  auto scalar = check_scalar_condition(form, op, a_grid, c_grid, exec);
  add_prefixed(report, scalar, "");
  report.grid = scalar.grid;
  return report;
}

bool exact_instance(const TheoremInstance& inst, const InequalityForm& form) {
  for (const auto& f : inst.functions)
    if (!std::holds_alternative<FiniteFunction>(f)) return false;
  if (!inst.op.is_lattice()) return false;
  if (form.H.arity() > 1 && !form.H.is_lattice()) return false;
  for (const auto& leg : form.legs)
    if (!leg.is_identity()) return false;
  for (const auto& p : form.psi)
    if (!p.is_identity()) return false;
  return true;
}

}  // namespace

const std::vector<TheoremId>& theorem_catalog() {
  static const std::vector<TheoremId> ids = [] {
    std::vector<TheoremId> v;
    for (const auto& e : kCatalog) v.push_back(e.id);
    return v;
  }();
  return ids;
}

std::string_view theorem_name(TheoremId id) {
  for (const auto& e : kCatalog)
    if (e.id == id) return e.name;
  return "?";
}

TheoremId parse_theorem(std::string_view name) {
  for (const auto& e : kCatalog)
    if (e.name == name) return e.id;
  throw InputError("unknown theorem id '" + std::string(name) + "'");
}

bool is_reverse(TheoremId id) {
  switch (id) {
    case TheoremId::Thm41:
    case TheoremId::Thm42H:
    case TheoremId::RevChebyshev:
    case TheoremId::RevHolder:
    case TheoremId::RevMinkowski:
    case TheoremId::RevSeminormed:
    case TheoremId::RevTransform:
      return true;
    default:
      return false;
  }
}

bool is_nary(TheoremId id) {
  return id == TheoremId::Thm31 || id == TheoremId::Thm32 || id == TheoremId::Thm41 || id == TheoremId::Thm42H;
}

bool is_single_function(TheoremId id) {
  switch (id) {
    case TheoremId::Thm33:
    case TheoremId::Jensen:
    case TheoremId::RevJensen:
    case TheoremId::Lyapunov:
    case TheoremId::RevTransform:
      return true;
    default:
      return false;
  }
}

bool is_two_function(TheoremId id) { return !is_nary(id) && !is_single_function(id); }

std::string_view direction_symbol(Direction d) { return d == Direction::GreaterEqual ? ">=" : "<="; }

InequalityForm resolve_form(const TheoremInstance& inst) {
  const TheoremId id = inst.theorem;
  const std::size_t n = inst.functions.size();
  if (n == 0) throw InputError("instance has no functions");
  if (is_single_function(id) && n != 1) throw InputError(std::string(theorem_name(id)) + " takes exactly one function");
  if (is_two_function(id) && n != 2) throw InputError(std::string(theorem_name(id)) + " takes exactly two functions");

  const auto allowed = allowed_exponents(id, n);
  for (const auto& [name, value] : inst.exponents) {
    if (!allowed.count(name))
      throw InputError("exponent '" + name + "' is not used by " + std::string(theorem_name(id)));
    if (!(value > 0.0) || !std::isfinite(value)) throw InputError("exponent '" + name + "' must be finite and positive");
  }
  const auto ex = [&](const std::string& name) {
    const auto it = inst.exponents.find(name);
    return it == inst.exponents.end() ? 1.0 : it->second;
  };

  InequalityForm form;
  form.reverse = is_reverse(id);
  if (is_single_function(id)) {
    form.H = Aggregator::min(1);
  } else {
    form.H = inst.H;
    if (form.H.arity() != n) throw InputError("H arity does not match the number of functions");
  }
  form.psi.assign(n, MonotoneTransform::identity());

  switch (id) {
    case TheoremId::Thm31:
    case TheoremId::Thm41: {
      if (!inst.U.empty() && inst.U.size() != n + 1) throw InputError("U needs n + 1 transforms");
      if (!inst.psi.empty() && inst.psi.size() != n) throw InputError("psi needs n transforms");
      for (std::size_t j = 0; j <= n; ++j)
        form.legs.push_back(inverse_leg(inst.U.empty() ? MonotoneTransform::identity() : inst.U[j]));
      if (!inst.psi.empty()) form.psi = inst.psi;
      break;
    }
    case TheoremId::Thm32:
    case TheoremId::Thm42H:
    case TheoremId::StarGeneral:
      for (std::size_t j = 0; j <= n; ++j)
        form.legs.push_back(power_leg(ex("xi" + std::to_string(j)), ex("omega" + std::to_string(j))));
      break;
    case TheoremId::Chebyshev:
    case TheoremId::RevChebyshev:
      form.legs.assign(3, power_leg(1.0, 1.0));
      break;
    case TheoremId::Holder:
    case TheoremId::RevHolder:
      form.legs = {power_leg(1.0, 1.0), power_leg(ex("p"), 1.0 / ex("p")), power_leg(ex("q"), 1.0 / ex("q"))};
      break;
    case TheoremId::Minkowski:
      form.legs.assign(3, power_leg(ex("s"), 1.0 / ex("s")));
      break;
    case TheoremId::RevMinkowski:
      form.legs.assign(3, power_leg(ex("k"), 1.0 / ex("k")));
      break;
    case TheoremId::SeminormedGeneral:
    case TheoremId::RevSeminormed:
      form.legs = {power_leg(ex("alpha"), ex("lambda")), power_leg(ex("beta"), ex("upsilon")),
                   power_leg(ex("gamma"), ex("tau"))};
      break;
    case TheoremId::Thm33:
    case TheoremId::RevTransform:
      form.legs = {inverse_leg(inst.phi1), inverse_leg(inst.phi2)};
      break;
    case TheoremId::Jensen:
      form.legs = {Leg{inst.phi, MonotoneTransform::identity(), false}, Leg{MonotoneTransform::identity(), inst.phi, false}};
      break;
    case TheoremId::RevJensen:
      form.legs = {Leg{MonotoneTransform::identity(), inst.phi, false}, Leg{inst.phi, MonotoneTransform::identity(), false}};
      break;
    case TheoremId::Lyapunov:
      form.legs = {power_leg(ex("s"), 1.0 / ex("s")), power_leg(ex("r"), 1.0 / ex("r"))};
      break;
  }
  return form;
}

PropertyReport check_scalar_condition(const InequalityForm& form, const BinaryOp& op, const GridSpec& a_grid,
                                      const GridSpec& c_grid, Exec exec) {
  const std::size_t n = form.H.arity();
  if (form.legs.size() != n + 1 || form.psi.size() != n) throw InputError("malformed inequality form");
  if (a_grid.empty() || c_grid.empty()) throw InputError("scalar condition needs nonempty grids");
  std::vector<std::size_t> extents(n, a_grid.size());
  extents.push_back(c_grid.size());
  const auto point = [&](std::span<const std::size_t> idx) {
    std::vector<double> a(n);
    for (std::size_t i = 0; i < n; ++i) a[i] = a_grid[idx[i]];
    return std::pair{a, c_grid[idx[n]]};
  };
  const auto pred = [&](std::span<const std::size_t> idx) {
    const auto [a, c] = point(idx);
    const auto sides = scalar_sides(form, op, a, c);
    return sides && scalar_holds(*sides, form.reverse);
  };
  PropertyCheck check;
  check.property = "scalar_condition";
  if (const auto bad = first_violation(extents, pred, exec)) {
    const auto [a, c] = point(*bad);
    check.passed = false;
    check.witness = a;
    check.witness.push_back(c);
    const auto sides = scalar_sides(form, op, a, c);
    if (!sides) {
      check.detail = "a value leaves the op domain";
    } else {
      double worst = sides->rhs[0];
      for (double r : sides->rhs) worst = form.reverse ? std::min(worst, r) : std::max(worst, r);
      check.detail = "lhs " + format_value(sides->lhs) + (form.reverse ? " > " : " < ") + format_value(worst);
    }
  }
  PropertyReport report;
  report.grid = "a in " + a_grid.describe() + "^" + std::to_string(n) + ", c in " + c_grid.describe();
  report.add(std::move(check));
  return report;
}

PropertyReport check_hypotheses(const TheoremInstance& instance, Exec exec) {
  const auto form = resolve_form(instance);
  return hypotheses(instance, form, evaluate(instance, form), exec);
}

InequalityVerdict verify(const TheoremInstance& instance, const VerifyOptions& options) {
  if (!(options.extra_tol >= 0.0) || std::isinf(options.extra_tol)) throw InputError("tolerance must be finite and >= 0");
  const auto form = resolve_form(instance);
  const auto ev = evaluate(instance, form);

  InequalityVerdict v;
  v.theorem = instance.theorem;
  v.direction = form.reverse ? Direction::LessEqual : Direction::GreaterEqual;
  v.lhs_integral = ev.lhs.value;
  v.lhs = form.legs[0].apply_post(ev.lhs.value);
  std::vector<double> args(ev.rhs.size());
  double tol_sum = ev.lhs.tol;
  for (std::size_t i = 0; i < ev.rhs.size(); ++i) {
    v.rhs_integrals.push_back(ev.rhs[i].value);
    args[i] = form.psi[i](form.legs[i + 1].apply_post(ev.rhs[i].value));
    tol_sum += ev.rhs[i].tol;
  }
  v.rhs = form.H(args);
  v.margin = (v.lhs == v.rhs) ? 0.0 : v.lhs - v.rhs;
  v.tol = (exact_instance(instance, form) ? 0.0 : kVerdictTol + tol_sum) + options.extra_tol;
  v.holds = form.reverse ? v.margin <= v.tol : v.margin >= -v.tol;

  if (options.skip_hypotheses) {
    v.hypotheses_checked = false;
    v.hypotheses_met = false;
    v.report.certificate = "skipped";
  } else {
    v.report = hypotheses(instance, form, ev, options.exec);
    v.hypotheses_met = v.report.passed();
  }
  return v;
}

InequalityVerdict verify_nary_H(const TheoremInstance& instance, const VerifyOptions& options) {
  if (!is_nary(instance.theorem)) throw InputError(std::string(theorem_name(instance.theorem)) + " is not an n-ary theorem");
  return verify(instance, options);
}

InequalityVerdict verify_two_function(const TheoremInstance& instance, const VerifyOptions& options) {
  if (!is_two_function(instance.theorem))
    throw InputError(std::string(theorem_name(instance.theorem)) + " is not a two-function theorem");
  return verify(instance, options);
}

InequalityVerdict verify_single_function(const TheoremInstance& instance, const VerifyOptions& options) {
  if (!is_single_function(instance.theorem))
    throw InputError(std::string(theorem_name(instance.theorem)) + " is not a single-function theorem");
  return verify(instance, options);
}

}  // namespace unineq
