#include "unineq/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "unineq/extval.hpp"

namespace unineq::io {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw InputError(msg); }

const json& field(const json& j, const char* key, const char* what) {
  if (!j.is_object()) fail(std::string(what) + " must be a JSON object");
  auto it = j.find(key);
  if (it == j.end()) fail(std::string(what) + " is missing \"" + key + "\"");
  return *it;
}

std::string read_string(const json& j, const char* what) {
  if (!j.is_string()) fail(std::string(what) + " must be a string");
  return j.get<std::string>();
}

std::vector<double> read_numbers(const json& j, const char* what) {
  if (!j.is_array()) fail(std::string(what) + " must be an array");
  std::vector<double> out;
  out.reserve(j.size());
  for (const auto& v : j) out.push_back(read_number(v, what));
  return out;
}

json numbers(std::span<const double> xs) {
  json a = json::array();
  for (double x : xs) a.push_back(number(x));
  return a;
}

std::size_t read_count(const json& j, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() < 0) fail(std::string(what) + " must be a nonnegative integer");
  return j.get<std::size_t>();
}

Cap read_cap(const json& j) {
  if (j.is_string() && j.get<std::string>() == "inf") return Cap::Extended;
  if (j.is_number() && j.get<double>() == 1.0) return Cap::Unit;
  fail("op cap must be 1 or \"inf\"");
}

json cap_json(Cap c) { return c == Cap::Unit ? json(1) : json("inf"); }

const std::pair<OpFlag, const char*> kFlagNames[] = {
    {OpFlag::Nondecreasing, "nondecreasing"},
    {OpFlag::AnnihilatorZero, "annihilator_zero"},
    {OpFlag::Commutative, "commutative"},
    {OpFlag::Associative, "associative"},
    {OpFlag::BoundedAboveByMin, "bounded_above_by_min"},
    {OpFlag::BoundedBelowByMax, "bounded_below_by_max"},
};

}  // namespace

json number(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (std::isnan(v)) return nullptr;
  return v;
}

double read_number(const json& j, const char* what) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string() && j.get<std::string>() == "inf") return kInf;
  fail(std::string(what) + ": expected a number or \"inf\"");
}

json to_json(const BinaryOp& op) {
  json j;
  switch (op.kind()) {
    case OpKind::Min: j["kind"] = "min"; break;
    case OpKind::Prod: j["kind"] = "prod"; break;
    case OpKind::SmallestWithNeutral: j["kind"] = "smallest"; break;
    case OpKind::GreatestWithNeutral: j["kind"] = "greatest"; break;
    case OpKind::Lukasiewicz: j["kind"] = "lukasiewicz"; break;
    case OpKind::Drastic: j["kind"] = "drastic"; break;
    case OpKind::Max: j["kind"] = "max"; break;
    case OpKind::Sum: j["kind"] = "sum"; break;
    case OpKind::ProbabilisticSum: j["kind"] = "probsum"; break;
    case OpKind::LukasiewiczConorm: j["kind"] = "luk_conorm"; break;
    case OpKind::Table: {
      j["kind"] = "table";
      j["name"] = op.name();
      j["nodes"] = numbers(op.table_nodes());
      j["values"] = numbers(op.table_values());
      json flags = json::array();
      for (const auto& [flag, name] : kFlagNames)
        if (op.has(flag)) flags.push_back(name);
      j["flags"] = flags;
      break;
    }
    case OpKind::Closure: fail("op \"" + op.name() + "\" has no JSON form");
  }
  j["neutral"] = op.neutral() ? number(*op.neutral()) : json(nullptr);
  j["cap"] = cap_json(op.cap());
  return j;
}

BinaryOp read_op(const json& j) {
  const auto kind = read_string(field(j, "kind", "op"), "op kind");
  const Cap cap = j.contains("cap") ? read_cap(j["cap"]) : Cap::Extended;
  std::optional<double> neutral;
  if (j.contains("neutral") && !j["neutral"].is_null()) neutral = read_number(j["neutral"], "op neutral");

  if (kind == "smallest" || kind == "greatest") {
    if (!neutral) fail("op \"" + kind + "\" needs a neutral element");
    return kind == "smallest" ? BinaryOp::smallest_with_neutral(*neutral, cap)
                              : BinaryOp::greatest_with_neutral(*neutral, cap);
  }
  if (kind == "table") {
    OpFlags flags = 0;
    if (j.contains("flags")) {
      for (const auto& f : j["flags"]) {
        const auto name = read_string(f, "op flag");
        bool known = false;
        for (const auto& [flag, fname] : kFlagNames)
          if (name == fname) flags |= static_cast<unsigned>(flag), known = true;
        if (!known) fail("unknown op flag \"" + name + "\"");
      }
    }
    return BinaryOp::table(read_numbers(field(j, "nodes", "table op"), "table nodes"),
                           read_numbers(field(j, "values", "table op"), "table values"), neutral, flags, cap,
                           j.contains("name") ? read_string(j["name"], "op name") : "table");
  }

  BinaryOp op;
  if (kind == "min") op = BinaryOp::min(cap);
  else if (kind == "prod") op = BinaryOp::prod(cap);
  else if (kind == "max") op = BinaryOp::max(cap);
  else if (kind == "lukasiewicz") op = BinaryOp::lukasiewicz();
  else if (kind == "drastic") op = BinaryOp::drastic();
  else if (kind == "sum") op = BinaryOp::sum();
  else if (kind == "probsum") op = BinaryOp::probabilistic_sum();
  else if (kind == "luk_conorm") op = BinaryOp::lukasiewicz_conorm();
  else fail("unknown op kind \"" + kind + "\"");

  if (j.contains("cap") && op.cap() != cap) fail("op \"" + kind + "\" does not support that cap");
  if (neutral && op.neutral() != neutral) fail("op \"" + kind + "\" has a fixed neutral element");
  return op;
}

json to_json(const MonotoneTransform& t) {
  switch (t.kind()) {
    case MonotoneTransform::Kind::Identity: return {{"kind", "identity"}};
    case MonotoneTransform::Kind::Power: return {{"kind", "power"}, {"p", number(t.exponent())}};
    case MonotoneTransform::Kind::PowerProfileExact: return {{"kind", "power_exact"}, {"p", number(t.exponent())}};
    case MonotoneTransform::Kind::Affine:
      return {{"kind", "affine"}, {"a", number(t.slope())}, {"b", number(t.offset())}};
    case MonotoneTransform::Kind::Composition: {
      json parts = json::array();
      for (const auto& p : t.parts()) parts.push_back(to_json(p));
      return {{"kind", "composition"}, {"parts", parts}};
    }
  }
  return {};
}

MonotoneTransform read_transform(const json& j) {
  const auto kind = read_string(field(j, "kind", "transform"), "transform kind");
  if (kind == "identity") return MonotoneTransform::identity();
  if (kind == "power") return MonotoneTransform::power(read_number(field(j, "p", "power transform"), "p"));
  if (kind == "power_exact")
    return MonotoneTransform::power_profile_exact(read_number(field(j, "p", "power transform"), "p"));
  if (kind == "affine")
    return MonotoneTransform::affine(read_number(field(j, "a", "affine transform"), "a"),
                                     read_number(field(j, "b", "affine transform"), "b"));
  if (kind == "composition") {
    const auto& parts = field(j, "parts", "composition");
    if (!parts.is_array()) fail("composition parts must be an array");
    std::vector<MonotoneTransform> out;
    for (const auto& p : parts) out.push_back(read_transform(p));
    return MonotoneTransform::composition(std::move(out));
  }
  fail("unknown transform kind \"" + kind + "\"");
}

json to_json(const Measure& m) {
  if (const auto* f = std::get_if<FiniteMonotoneMeasure>(&m)) {
    json table;
    for (std::size_t mask = 0; mask < f->table().size(); ++mask) table[std::to_string(mask)] = number(f->table()[mask]);
    return {{"type", "finite"}, {"n", f->n()}, {"table", table}};
  }
  return {{"type", "distorted_lebesgue"}, {"distortion", to_json(std::get<DistortedLebesgue>(m).distortion)}};
}

Measure read_measure(const json& j) {
  const auto type = read_string(field(j, "type", "measure"), "measure type");
  if (type == "distorted_lebesgue" || type == "lebesgue") {
    if (!j.contains("distortion")) return DistortedLebesgue{};
    return DistortedLebesgue(read_transform(j["distortion"]));
  }
  if (type != "finite") fail("unknown measure type \"" + type + "\"");
  const std::size_t n = read_count(field(j, "n", "finite measure"), "measure n");
  if (n == 0 || n > kMaxGroundSet) fail("measure n must lie in 1.." + std::to_string(kMaxGroundSet));
  const std::size_t size = std::size_t{1} << n;
  const auto& t = field(j, "table", "finite measure");
  std::vector<double> table(size);
  if (t.is_array()) {
    if (t.size() != size) fail("measure table needs 2^n entries");
    table = read_numbers(t, "measure table");
  } else if (t.is_object()) {
    std::vector<bool> seen(size, false);
    for (const auto& [key, value] : t.items()) {
      std::size_t mask = 0;
      std::size_t used = 0;
      try {
        mask = std::stoull(key, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != key.size() || mask >= size) fail("measure table key \"" + key + "\" is not a subset mask");
      table[mask] = read_number(value, "measure table");
      seen[mask] = true;
    }
    for (std::size_t mask = 0; mask < size; ++mask)
      if (!seen[mask]) fail("measure table is missing subset " + std::to_string(mask));
  } else {
    fail("measure table must be an object or array");
  }
  FiniteMonotoneMeasure m(n, std::move(table));
  const auto report = validate_measure(m);
  for (const auto& c : report.checks)
    if (!c.passed) fail("measure table is not a monotone measure: " + c.property + (c.detail.empty() ? "" : " (" + c.detail + ")"));
  return m;
}

json to_json(const Function& f) {
  if (const auto* ff = std::get_if<FiniteFunction>(&f)) return {{"type", "finite"}, {"values", numbers(ff->values())}};
  const auto& c = std::get<ContinuousFunction>(f);
  if (c.base == PiecewiseLinear() && c.outer.kind() == MonotoneTransform::Kind::PowerProfileExact)
    return {{"type", "power"}, {"p", number(c.outer.exponent())}};
  json j{{"type", "pwl"}, {"x", numbers(c.base.x())}, {"y", numbers(c.base.y())}};
  if (!c.outer.is_identity()) j["outer"] = to_json(c.outer);
  return j;
}

Function read_function(const json& j) {
  const auto type = read_string(field(j, "type", "function"), "function type");
  if (type == "finite") return FiniteFunction(read_numbers(field(j, "values", "finite function"), "function values"));
  if (type == "power") return ContinuousFunction::power(read_number(field(j, "p", "power function"), "p"));
  if (type == "pwl") {
    ContinuousFunction c{PiecewiseLinear(read_numbers(field(j, "x", "pwl function"), "pwl x"),
                                         read_numbers(field(j, "y", "pwl function"), "pwl y")),
                         {}};
    if (j.contains("outer")) c.outer = read_transform(j["outer"]);
    return c;
  }
  fail("unknown function type \"" + type + "\"");
}

json to_json(const Aggregator& h) {
  switch (h.kind()) {
    case Aggregator::Kind::Min: return {{"kind", "min"}, {"arity", h.arity()}};
    case Aggregator::Kind::Max: return {{"kind", "max"}, {"arity", h.arity()}};
    case Aggregator::Kind::Prod: return {{"kind", "prod"}, {"arity", h.arity()}};
    case Aggregator::Kind::WeightedMean: return {{"kind", "mean"}, {"weights", numbers(h.weights())}};
    case Aggregator::Kind::Binary: return {{"kind", "binary"}, {"op", to_json(h.star())}};
    case Aggregator::Kind::Table:
      return {{"kind", "table"}, {"arity", h.arity()}, {"nodes", numbers(h.nodes())}, {"values", numbers(h.values())}};
  }
  return {};
}

Aggregator read_aggregator(const json& j) {
  const auto kind = read_string(field(j, "kind", "H"), "H kind");
  if (kind == "min" || kind == "max" || kind == "prod") {
    const auto arity = read_count(field(j, "arity", "H"), "H arity");
    if (kind == "min") return Aggregator::min(arity);
    if (kind == "max") return Aggregator::max(arity);
    return Aggregator::prod(arity);
  }
  if (kind == "mean") return Aggregator::weighted_mean(read_numbers(field(j, "weights", "mean H"), "weights"));
  if (kind == "binary") return Aggregator::binary(read_op(field(j, "op", "binary H")));
  if (kind == "table")
    return Aggregator::table(read_count(field(j, "arity", "table H"), "H arity"),
                             read_numbers(field(j, "nodes", "table H"), "H nodes"),
                             read_numbers(field(j, "values", "table H"), "H values"));
  fail("unknown H kind \"" + kind + "\"");
}

json to_json(const PropertyReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks) {
    json jc{{"property", c.property}, {"passed", c.passed}, {"required", c.required}};
    if (!c.witness.empty()) jc["witness"] = numbers(c.witness);
    if (!c.detail.empty()) jc["detail"] = c.detail;
    checks.push_back(std::move(jc));
  }
  json j{{"passed", r.passed()}, {"certificate", r.certificate}};
  if (!r.grid.empty()) j["grid"] = r.grid;
  j["checks"] = std::move(checks);
  return j;
}

json to_json(const IntegralValue& v) {
  return {{"value", number(v.value)}, {"tol", number(v.tol)}, {"candidates", v.candidates}};
}

json to_json(const InequalityVerdict& v) {
  return {{"theorem", std::string(theorem_name(v.theorem))},
          {"lhs", number(v.lhs)},
          {"rhs", number(v.rhs)},
          {"direction", std::string(direction_symbol(v.direction))},
          {"margin", number(v.margin)},
          {"holds", v.holds},
          {"tol", number(v.tol)},
          {"hypotheses_met", v.hypotheses_met},
          {"hypotheses_checked", v.hypotheses_checked},
          {"lhs_integral", number(v.lhs_integral)},
          {"rhs_integrals", numbers(v.rhs_integrals)},
          {"hypotheses", to_json(v.report)}};
}

json to_json(const TheoremInstance& inst) {
  json j;
  j["theorem"] = std::string(theorem_name(inst.theorem));
  j["op"] = to_json(inst.op);
  j["measure"] = to_json(inst.measure);
  json fs = json::array();
  for (const auto& f : inst.functions) fs.push_back(to_json(f));
  j["functions"] = fs;
  j["H"] = to_json(inst.H);
  const auto transforms = [](const std::vector<MonotoneTransform>& ts) {
    json a = json::array();
    for (const auto& t : ts) a.push_back(to_json(t));
    return a;
  };
  if (!inst.U.empty()) j["U"] = transforms(inst.U);
  if (!inst.psi.empty()) j["psi"] = transforms(inst.psi);
  if (!inst.phi.is_identity()) j["phi"] = to_json(inst.phi);
  if (!inst.phi1.is_identity()) j["phi1"] = to_json(inst.phi1);
  if (!inst.phi2.is_identity()) j["phi2"] = to_json(inst.phi2);
  if (!inst.exponents.empty()) {
    json e;
    for (const auto& [k, v] : inst.exponents) e[k] = number(v);
    j["exponents"] = e;
  }
  if (inst.require_smallest_op) j["require_smallest_op"] = true;
  return j;
}

TheoremInstance read_instance(const json& j, std::optional<TheoremId> fallback) {
  if (!j.is_object()) fail("instance must be a JSON object");
  TheoremInstance inst;
  if (j.contains("theorem")) inst.theorem = parse_theorem(read_string(j["theorem"], "theorem"));
  else if (fallback) inst.theorem = *fallback;
  else fail("instance is missing \"theorem\"");
  const bool reverse = is_reverse(inst.theorem);

  inst.measure = read_measure(field(j, "measure", "instance"));
  const auto& fs = field(j, "functions", "instance");
  if (!fs.is_array() || fs.empty()) fail("instance functions must be a nonempty array");
  for (const auto& f : fs) inst.functions.push_back(read_function(f));

  inst.op = j.contains("op") ? read_op(j["op"]) : (reverse ? BinaryOp::max() : BinaryOp::min());
  if (j.contains("H") && j.contains("star")) fail("instance may give \"H\" or \"star\", not both");
  if (j.contains("H")) inst.H = read_aggregator(j["H"]);
  else if (j.contains("star")) inst.H = Aggregator::binary(read_op(j["star"]));
  else if (is_two_function(inst.theorem)) inst.H = Aggregator::binary(reverse ? BinaryOp::max() : BinaryOp::min());
  else if (is_nary(inst.theorem)) inst.H = reverse ? Aggregator::max(fs.size()) : Aggregator::min(fs.size());

  const auto transforms = [&](const char* key) {
    std::vector<MonotoneTransform> out;
    if (!j.contains(key)) return out;
    if (!j[key].is_array()) fail(std::string(key) + " must be an array");
    for (const auto& t : j[key]) out.push_back(read_transform(t));
    return out;
  };
  inst.U = transforms("U");
  inst.psi = transforms("psi");
  if (j.contains("phi")) inst.phi = read_transform(j["phi"]);
  if (j.contains("phi1")) inst.phi1 = read_transform(j["phi1"]);
  if (j.contains("phi2")) inst.phi2 = read_transform(j["phi2"]);
  if (j.contains("exponents")) {
    if (!j["exponents"].is_object()) fail("exponents must be an object");
    for (const auto& [k, v] : j["exponents"].items()) inst.exponents[k] = read_number(v, "exponent");
  }
  if (j.contains("require_smallest_op")) {
    if (!j["require_smallest_op"].is_boolean()) fail("require_smallest_op must be a boolean");
    inst.require_smallest_op = j["require_smallest_op"].get<bool>();
  }
  return inst;
}

json parse(const std::string& text, const std::string& source) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    fail("malformed JSON in " + source + ": " + e.what());
  }
}

json load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse(ss.str(), path);
}

std::string digest(const json& j) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : j.dump()) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace unineq::io
