#include "unineq/harness.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <set>

#include "unineq/extval.hpp"
#include "unineq/integrals.hpp"
#include "unineq/op_properties.hpp"

namespace unineq {

namespace {

using io::json;

[[noreturn]] void fail(const std::string& msg) { throw InputError(msg); }

ValueRange read_range(const json& j, const std::string& what) {
  ValueRange r;
  if (j.is_number() || j.is_string()) {
    r.lo = r.hi = io::read_number(j, what.c_str());
  } else if (j.is_array() && j.size() == 2) {
    r.lo = io::read_number(j[0], what.c_str());
    r.hi = io::read_number(j[1], what.c_str());
    if (!(r.lo <= r.hi)) fail(what + ": range must satisfy lo <= hi");
  } else if (j.is_object() && j.contains("choices") && j["choices"].is_array() && !j["choices"].empty()) {
    for (const auto& c : j["choices"]) r.choices.push_back(io::read_number(c, what.c_str()));
  } else {
    fail(what + ": expected a number, [lo, hi] or {\"choices\": [...]}");
  }
  return r;
}

json range_json(const ValueRange& r) {
  if (!r.choices.empty()) {
    json c = json::array();
    for (double x : r.choices) c.push_back(io::number(x));
    return {{"choices", c}};
  }
  return json::array({io::number(r.lo), io::number(r.hi)});
}

std::vector<BinaryOp> read_ops(const json& j, const char* what) {
  if (!j.is_array() || j.empty()) fail(std::string(what) + " must be a nonempty array");
  std::vector<BinaryOp> out;
  for (const auto& o : j) out.push_back(io::read_op(o));
  return out;
}

json ops_json(const std::vector<BinaryOp>& ops) {
  json a = json::array();
  for (const auto& o : ops) a.push_back(io::to_json(o));
  return a;
}

std::string type_of(const json& j, const char* what) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_object() && j.contains("type") && j["type"].is_string()) return j["type"].get<std::string>();
  fail(std::string(what) + " must be a string or an object with \"type\"");
}

bool needs_normalized(TheoremId id) {
  return id == TheoremId::SeminormedGeneral || (is_reverse(id) && id != TheoremId::RevTransform);
}

std::size_t arity_of(const CampaignConfig& c) {
  if (is_single_function(c.theorem)) return 1;
  if (is_two_function(c.theorem)) return 2;
  return c.functions;
}

std::vector<BinaryOp> default_ops(TheoremId id) { return {is_reverse(id) ? BinaryOp::max() : BinaryOp::min()}; }

// stars whose boundedness matches the theorem direction, when hypotheses are respected
std::vector<BinaryOp> usable_stars(const CampaignConfig& c) {
  auto pool = c.star_pool.empty() ? default_ops(c.theorem) : c.star_pool;
  if (!c.respect_hypotheses) return pool;
  const OpProperty bound{is_reverse(c.theorem) ? "bounded_below_by_max" : "bounded_above_by_min", {}};
  std::vector<BinaryOp> out;
  for (const auto& s : pool) {
    const auto grid = GridSpec::for_cap(s.cap_value(), s.neutral(), 21);
    if (verify_op_properties(s, std::span(&bound, 1), grid).passed()) out.push_back(s);
  }
  if (out.empty()) fail("no star in the pool satisfies " + bound.name);
  return out;
}

bool same_verdict(const InequalityVerdict& a, const InequalityVerdict& b) {
  const auto eq = [](double x, double y) { return x == y || (std::isnan(x) && std::isnan(y)); };
  return a.holds == b.holds && a.hypotheses_met == b.hypotheses_met && eq(a.lhs, b.lhs) && eq(a.rhs, b.rhs) &&
         eq(a.margin, b.margin);
}

// drop one element at a time while the violation persists
std::optional<std::pair<TheoremInstance, InequalityVerdict>> shrink(const CampaignConfig& config,
                                                                  const TheoremInstance& start,
                                                                  const VerifyOptions& opts) {
  if (!std::holds_alternative<FiniteMonotoneMeasure>(start.measure)) return std::nullopt;
  TheoremInstance cur = start;
  std::optional<std::pair<TheoremInstance, InequalityVerdict>> best;
  bool progress = true;
  while (progress) {
    progress = false;
    const auto& m = std::get<FiniteMonotoneMeasure>(cur.measure);
    if (m.n() <= 1) break;
    for (std::size_t i = 0; i < m.n(); ++i) {
      TheoremInstance next = cur;
      try {
        next.measure = m.restricted(i);
        for (auto& f : next.functions) f = std::get<FiniteFunction>(f).restricted(i);
        auto v = verify(next, opts);
        if (!is_violation(config, v)) continue;
        cur = next;
        best.emplace(std::move(next), std::move(v));
        progress = true;
        break;
      } catch (const InputError&) {
        // a zero total after restriction is not a valid measure
      }
    }
  }
  return best;
}

}  // namespace

double ValueRange::draw(Rng& rng) const {
  if (!choices.empty()) return choices[rng.index(choices.size())];
  if (lo == hi) return lo;
  return hi - (hi - lo) * rng.uniform();
}

CampaignConfig read_config(const json& j, std::optional<TheoremId> theorem) {
  if (!j.is_object()) fail("campaign config must be a JSON object");
  static const std::set<std::string> known{"seed",        "trials",     "theorem",       "carrier",
                                           "measure_family", "op_pool", "star_pool",     "H",
                                           "functions",   "exponent_ranges", "respect_hypotheses", "scale",
                                           "normalize",   "shrink",     "tol",           "parallel",
                                           "max_violation_records"};
  for (const auto& [k, v] : j.items())
    if (!known.count(k)) fail("unknown campaign config key \"" + k + "\"");

  CampaignConfig c;
  if (theorem) c.theorem = *theorem;
  else if (j.contains("theorem") && j["theorem"].is_string()) c.theorem = parse_theorem(j["theorem"].get<std::string>());
  else fail("campaign config needs a theorem");

  if (j.contains("seed")) {
    if (!j["seed"].is_number_unsigned() && !j["seed"].is_number_integer()) fail("seed must be an integer");
    if (j["seed"].is_number_integer() && j["seed"].get<long long>() < 0) fail("seed must be nonnegative");
    c.seed = j["seed"].get<std::uint64_t>();
  }
  const auto count = [&](const char* key, std::size_t& out) {
    if (!j.contains(key)) return;
    if (!j[key].is_number_integer() || j[key].get<long long>() < 0) fail(std::string(key) + " must be a nonnegative integer");
    out = j[key].get<std::size_t>();
  };
  const auto flag = [&](const char* key, bool& out) {
    if (!j.contains(key)) return;
    if (!j[key].is_boolean()) fail(std::string(key) + " must be a boolean");
    out = j[key].get<bool>();
  };
  count("trials", c.trials);
  count("functions", c.functions);
  count("max_violation_records", c.max_violation_records);
  flag("respect_hypotheses", c.respect_hypotheses);
  flag("normalize", c.normalize);
  flag("shrink", c.shrink);
  bool parallel = true;
  flag("parallel", parallel);
  c.exec = parallel ? Exec::Parallel : Exec::Serial;
  if (j.contains("tol")) c.extra_tol = io::read_number(j["tol"], "tol");

  if (j.contains("carrier")) {
    const auto& cj = j["carrier"];
    const auto type = type_of(cj, "carrier");
    if (type == "finite") {
      c.carrier = Carrier::Finite;
      if (cj.is_object() && cj.contains("n_range")) {
        const auto r = read_range(cj["n_range"], "n_range");
        if (!r.choices.empty() || r.lo < 1 || r.hi > kMaxGroundSet || r.lo != std::floor(r.lo) || r.hi != std::floor(r.hi))
          fail("n_range must be [lo, hi] integers within 1.." + std::to_string(kMaxGroundSet));
        c.n_min = static_cast<std::size_t>(r.lo);
        c.n_max = static_cast<std::size_t>(r.hi);
      }
    } else if (type == "lebesgue_power") {
      c.carrier = Carrier::LebesguePower;
      if (cj.is_object() && cj.contains("p_range")) c.function_p = read_range(cj["p_range"], "p_range");
    } else {
      fail("unknown carrier \"" + type + "\"");
    }
  }
  if (j.contains("measure_family")) {
    const auto& mj = j["measure_family"];
    const auto type = type_of(mj, "measure_family");
    if (type == "random_table") c.measure_family = MeasureFamily::RandomTable;
    else if (type == "counting") c.measure_family = MeasureFamily::Counting;
    else if (type == "distorted") {
      c.measure_family = MeasureFamily::Distorted;
      if (mj.is_object() && mj.contains("p_range")) c.distortion_p = read_range(mj["p_range"], "distortion p_range");
    } else {
      fail("unknown measure family \"" + type + "\"");
    }
  }
  if (j.contains("op_pool")) c.op_pool = read_ops(j["op_pool"], "op_pool");
  if (j.contains("star_pool")) c.star_pool = read_ops(j["star_pool"], "star_pool");
  if (j.contains("H")) c.H = io::read_aggregator(j["H"]);
  if (j.contains("scale")) {
    const auto s = j["scale"].is_string() ? j["scale"].get<std::string>() : "";
    if (s == "unit") c.scale = Scale::Unit;
    else if (s == "extended") c.scale = Scale::Extended;
    else fail("scale must be \"unit\" or \"extended\"");
  }
  if (j.contains("exponent_ranges")) {
    if (!j["exponent_ranges"].is_object()) fail("exponent_ranges must be an object");
    for (const auto& [k, v] : j["exponent_ranges"].items()) c.exponent_ranges[k] = read_range(v, "exponent " + k);
  }

  if (c.n_min > c.n_max) fail("n_range is empty");
  if (c.functions == 0) fail("functions must be positive");
  if (c.carrier == Carrier::LebesguePower && !is_single_function(c.theorem))
    fail("the lebesgue_power carrier supports single-function theorems only");
  if (c.carrier == Carrier::LebesguePower && c.measure_family == MeasureFamily::Counting)
    fail("counting measures need a finite carrier");
  if (c.H && is_nary(c.theorem) && c.H->arity() != c.functions) fail("H arity must equal functions");
  return c;
}

json to_json(const CampaignConfig& c) {
  json j;
  j["theorem"] = std::string(theorem_name(c.theorem));
  j["seed"] = c.seed;
  j["trials"] = c.trials;
  if (c.carrier == Carrier::Finite)
    j["carrier"] = {{"type", "finite"}, {"n_range", json::array({c.n_min, c.n_max})}};
  else
    j["carrier"] = {{"type", "lebesgue_power"}, {"p_range", range_json(c.function_p)}};
  switch (c.measure_family) {
    case MeasureFamily::RandomTable: j["measure_family"] = {{"type", "random_table"}}; break;
    case MeasureFamily::Counting: j["measure_family"] = {{"type", "counting"}}; break;
    case MeasureFamily::Distorted:
      j["measure_family"] = {{"type", "distorted"}, {"p_range", range_json(c.distortion_p)}};
      break;
  }
  j["op_pool"] = ops_json(c.op_pool.empty() ? default_ops(c.theorem) : c.op_pool);
  if (is_two_function(c.theorem)) j["star_pool"] = ops_json(c.star_pool.empty() ? default_ops(c.theorem) : c.star_pool);
  if (c.H) j["H"] = io::to_json(*c.H);
  if (is_nary(c.theorem)) j["functions"] = c.functions;
  json e = json::object();
  for (const auto& [k, r] : c.exponent_ranges) e[k] = range_json(r);
  j["exponent_ranges"] = e;
  j["respect_hypotheses"] = c.respect_hypotheses;
  j["scale"] = c.scale == Scale::Unit ? "unit" : "extended";
  j["normalize"] = c.normalize;
  j["shrink"] = c.shrink;
  j["tol"] = io::number(c.extra_tol);
  j["max_violation_records"] = c.max_violation_records;
  return j;
}

FiniteMonotoneMeasure random_measure(Rng& rng, std::size_t n, bool normalize) {
  if (n == 0 || n > kMaxGroundSet) fail("measure size out of range");
  const std::size_t size = std::size_t{1} << n;
  std::vector<double> draws(size);
  for (auto& d : draws) d = rng.uniform();
  std::sort(draws.begin(), draws.end());

  std::vector<std::uint32_t> masks(size);
  std::iota(masks.begin(), masks.end(), 0u);
  std::stable_sort(masks.begin(), masks.end(),
                   [](std::uint32_t a, std::uint32_t b) { return std::popcount(a) < std::popcount(b); });
  std::vector<double> table(size);
  for (std::size_t k = 0; k < size; ++k) table[masks[k]] = draws[k];
  table[0] = 0.0;
  for (std::uint32_t mask = 1; mask < size; ++mask)
    for (std::uint32_t rest = mask; rest; rest &= rest - 1) {
      const std::uint32_t sub = mask & ~(rest & (~rest + 1));
      table[mask] = std::max(table[mask], table[sub]);
    }
  if (!(table.back() > 0.0)) table.back() = 1.0;
  FiniteMonotoneMeasure m(n, std::move(table));
  return normalize ? m.normalized() : m;
}

TheoremInstance gen_instance(const CampaignConfig& c, std::size_t trial) {
  Rng rng(derive_seed(c.seed, trial));
  TheoremInstance inst;
  inst.theorem = c.theorem;
  const bool reverse = is_reverse(c.theorem);
  const auto ops = c.op_pool.empty() ? default_ops(c.theorem) : c.op_pool;
  inst.op = ops[rng.index(ops.size())];
  const std::size_t k = arity_of(c);
  const bool normalize = c.normalize || needs_normalized(c.theorem);

  if (c.carrier == Carrier::Finite) {
    const std::size_t n = rng.range(c.n_min, c.n_max);
    switch (c.measure_family) {
      case MeasureFamily::RandomTable: inst.measure = random_measure(rng, n, normalize); break;
      case MeasureFamily::Counting: {
        const auto m = FiniteMonotoneMeasure::counting(n);
        inst.measure = normalize ? m.normalized() : m;
        break;
      }
      case MeasureFamily::Distorted: {
        const auto g = MonotoneTransform::power(c.distortion_p.draw(rng));
        std::vector<double> table(std::size_t{1} << n);
        for (std::size_t mask = 0; mask < table.size(); ++mask)
          table[mask] = g(static_cast<double>(std::popcount(mask)) / static_cast<double>(n));
        inst.measure = FiniteMonotoneMeasure(n, std::move(table));
        break;
      }
    }
    for (auto& f : make_comonotone_system(rng.next(), n, k, c.scale)) inst.functions.emplace_back(std::move(f));
  } else {
    if (c.measure_family == MeasureFamily::Distorted)
      inst.measure = DistortedLebesgue(MonotoneTransform::power(c.distortion_p.draw(rng)));
    else
      inst.measure = DistortedLebesgue{};
    inst.functions = {ContinuousFunction::power(c.function_p.draw(rng))};
  }

  if (is_two_function(c.theorem)) {
    const auto stars = usable_stars(c);
    inst.H = Aggregator::binary(stars[rng.index(stars.size())]);
  } else if (is_nary(c.theorem)) {
    inst.H = c.H ? *c.H : (reverse ? Aggregator::max(k) : Aggregator::min(k));
  }

  for (const auto& [key, range] : c.exponent_ranges) {
    if (key == "phi") inst.phi = MonotoneTransform::power(range.draw(rng));
    else if (key == "phi1") inst.phi1 = MonotoneTransform::power(range.draw(rng));
    else if (key == "phi2") inst.phi2 = MonotoneTransform::power(range.draw(rng));
    else if (key == "xi_i" || key == "omega_i") {
      const std::string stem = key.substr(0, key.size() - 2);
      for (std::size_t i = 1; i <= k; ++i) inst.exponents[stem + std::to_string(i)] = range.draw(rng);
    } else {
      inst.exponents[key] = range.draw(rng);
    }
  }
  if (c.theorem == TheoremId::Lyapunov && c.respect_hypotheses && inst.exponents.count("r") &&
      inst.exponents.count("s") && inst.exponents["r"] > inst.exponents["s"])
    std::swap(inst.exponents["r"], inst.exponents["s"]);
  return inst;
}

bool is_violation(const CampaignConfig& c, const InequalityVerdict& v) {
  return !v.holds && (v.hypotheses_met || !c.respect_hypotheses);
}

CampaignReport run_campaign(const CampaignConfig& c) {
  CampaignReport report;
  report.config = c;
  report.trials = c.trials;
  if (is_two_function(c.theorem)) usable_stars(c);  // fail fast on an unusable pool

  const VerifyOptions opts{c.extra_tol, false, Exec::Serial};
  std::vector<char> met(c.trials, 0), failed(c.trials, 0), violated(c.trials, 0);
  std::vector<double> margins(c.trials, 0.0);
  std::vector<std::string> errors(c.trials);
  const auto run_one = [&](std::size_t t) {
    try {
      const auto v = verify(gen_instance(c, t), opts);
      met[t] = v.hypotheses_met;
      failed[t] = !v.holds;
      violated[t] = is_violation(c, v);
      margins[t] = v.margin;
    } catch (const std::exception& e) {
      errors[t] = e.what();
    }
  };
  const auto trials = static_cast<std::ptrdiff_t>(c.trials);
  if (c.exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic, 8)
    for (std::ptrdiff_t t = 0; t < trials; ++t) run_one(static_cast<std::size_t>(t));
  } else {
    for (std::ptrdiff_t t = 0; t < trials; ++t) run_one(static_cast<std::size_t>(t));
  }
  for (std::size_t t = 0; t < c.trials; ++t)
    if (!errors[t].empty()) fail("trial " + std::to_string(t) + ": " + errors[t]);

  for (std::size_t t = 0; t < c.trials; ++t) {
    report.hypothesis_pass_count += met[t];
    report.failed_verdicts += failed[t];
    if (!violated[t]) continue;
    const auto inst = gen_instance(c, t);
    const auto inst_json = io::to_json(inst);
    report.index.push_back({t, margins[t], io::digest(inst_json)});
    if (report.violations.size() >= c.max_violation_records) continue;

    Violation v;
    v.trial = t;
    v.instance = inst;
    v.verdict = verify(inst, opts);
    v.digest = report.index.back().digest;
    const auto again = verify(gen_instance(c, t), opts);
    const auto reloaded = verify(io::read_instance(io::parse(inst_json.dump(), "instance")), opts);
    v.reverified = v.verdict.margin == margins[t] && same_verdict(v.verdict, again) &&
                   same_verdict(v.verdict, reloaded) && is_violation(c, reloaded);
    if (c.shrink) {
      if (auto s = shrink(c, inst, opts)) {
        v.shrunk = std::move(s->first);
        v.shrunk_verdict = std::move(s->second);
      }
    }
    report.violations.push_back(std::move(v));
  }
  return report;
}

void write_jsonl(const CampaignReport& r, std::ostream& out) {
  json header{{"record", "header"},
              {"prng", std::string(kPrngId)},
              {"seed", r.config.seed},
              {"trials", r.trials},
              {"theorem", std::string(theorem_name(r.config.theorem))},
              {"config", to_json(r.config)}};
  out << header.dump() << '\n';
  for (const auto& v : r.violations) {
    json rec{{"record", "violation"},
             {"trial", v.trial},
             {"margin", io::number(v.verdict.margin)},
             {"digest", v.digest},
             {"reverified", v.reverified},
             {"verdict", io::to_json(v.verdict)},
             {"instance", io::to_json(v.instance)}};
    if (v.shrunk) {
      const auto& m = std::get<FiniteMonotoneMeasure>(v.shrunk->measure);
      rec["shrunk"] = {{"n", m.n()},
                       {"margin", io::number(v.shrunk_verdict->margin)},
                       {"verdict", io::to_json(*v.shrunk_verdict)},
                       {"instance", io::to_json(*v.shrunk)}};
    }
    out << rec.dump() << '\n';
  }
  json index = json::array();
  for (const auto& e : r.index) index.push_back({{"trial", e.trial}, {"margin", io::number(e.margin)}, {"digest", e.digest}});
  json summary{{"record", "summary"},
               {"trials", r.trials},
               {"hypothesis_pass_count", r.hypothesis_pass_count},
               {"failed_verdicts", r.failed_verdicts},
               {"violations", r.index.size()},
               {"violation_index", index},
               {"status", r.clean() ? "no_violation" : "violation"}};
  out << summary.dump() << '\n';
}

bool FixtureReport::passed() const {
  for (const auto& v : values)
    if (!v.passed) return false;
  for (const auto& [name, ok] : checks)
    if (!ok) return false;
  return true;
}

FixtureReport reproduce_paper() {
  FixtureReport r;
  const Measure lebesgue = DistortedLebesgue{};
  const auto value = [&](std::string name, const Function& f, double expected, double tol) {
    const double got = sugeno(lebesgue, f).value;
    r.values.push_back({std::move(name), got, expected, tol, std::abs(got - expected) <= tol});
  };
  value("sugeno_sqrt_x", ContinuousFunction::power(0.5), (std::sqrt(5.0) - 1.0) / 2.0, 1e-9);
  value("sugeno_one", ContinuousFunction::constant(1.0), 1.0, 0.0);
  value("sugeno_x", ContinuousFunction::power(1.0), 0.5, 1e-12);

  TheoremInstance inst;
  inst.theorem = TheoremId::Thm32;
  inst.op = BinaryOp::min();
  inst.measure = lebesgue;
  inst.functions = {ContinuousFunction::power(1.0), ContinuousFunction::constant(1.0)};
  inst.H = Aggregator::min(2);
  inst.exponents = {{"xi0", 1.0}, {"omega0", 1.0}, {"xi1", 0.5}, {"omega1", 1.0}, {"xi2", 0.5}, {"omega2", 1.0}};
  r.verdict = verify(inst);
  const auto* ex = r.verdict.report.find("exponent_condition");
  r.checks = {{"holds_false", !r.verdict.holds},
              {"margin", std::abs(r.verdict.margin - (-0.11803399)) <= 1e-8},
              {"exponent_condition_flagged", ex && !ex->passed}};
  return r;
}

json to_json(const FixtureReport& r) {
  json values = json::array();
  for (const auto& v : r.values)
    values.push_back({{"name", v.name},
                      {"value", io::number(v.value)},
                      {"expected", io::number(v.expected)},
                      {"tol", io::number(v.tol)},
                      {"passed", v.passed}});
  json checks = json::array();
  for (const auto& [name, ok] : r.checks) checks.push_back({{"name", name}, {"passed", ok}});
  return {{"fixture", "worked_example"},
          {"values", values},
          {"verdict", io::to_json(r.verdict)},
          {"checks", checks},
          {"passed", r.passed()}};
}

}  // namespace unineq
