#include "unineq/cli.hpp"

#include <CLI11.hpp>
#include <sstream>

#include "unineq/extval.hpp"
#include "unineq/harness.hpp"
#include "unineq/integrals.hpp"
#include "unineq/json_io.hpp"
#include "unineq/op_properties.hpp"

namespace unineq::cli {

namespace {

using io::json;

// inline JSON or a path to a JSON file
json load_arg(const std::string& arg) {
  const auto first = arg.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (arg[first] == '{' || arg[first] == '[')) return io::parse(arg, "argument");
  return io::load_file(arg);
}

std::string catalog_text() {
  std::string s = "Theorem ids:";
  for (auto id : theorem_catalog()) s += "\n  " + std::string(theorem_name(id));
  s += "\n\nExit codes: 0 success or no violation, 1 violation or fixture mismatch, 2 input error.";
  return s;
}

void error_record(std::ostream& err, const std::string& kind, const std::string& message) {
  err << json{{"error", kind}, {"message", message}}.dump() << '\n';
}

struct IntegrateArgs {
  std::string instance, integral, op;
  std::optional<double> e;
  double tol = kRefineTol;
  std::size_t function = 0;
};

int run_integrate(const IntegrateArgs& a, std::ostream& out) {
  const auto doc = load_arg(a.instance);
  if (!doc.is_object() || !doc.contains("measure") || !doc.contains("functions") || !doc["functions"].is_array())
    throw InputError("instance needs \"measure\" and \"functions\"");
  const auto m = io::read_measure(doc["measure"]);
  if (a.function >= doc["functions"].size()) throw InputError("--function index out of range");
  const auto f = io::read_function(doc["functions"][a.function]);
  const auto op = [&]() {
    if (!a.op.empty()) return io::read_op(load_arg(a.op));
    if (doc.contains("op")) return io::read_op(doc["op"]);
    throw InputError("integral \"" + a.integral + "\" needs --op or an instance op");
  };
  if (!(a.tol > 0.0)) throw InputError("--tol must be positive");

  IntegralValue v;
  if (a.integral == "sugeno") v = sugeno(m, f);
  else if (a.integral == "shilkret") v = shilkret(m, f);
  else if (a.integral == "universal") v = universal_integral(op(), m, f, a.tol);
  else if (a.integral == "seminormed") v = seminormed_integral(op(), m, f, a.tol);
  else if (a.integral == "semiconormed") v = semiconormed_integral(op(), m, f, a.tol);
  else if (a.integral == "smallest-e") {
    if (!a.e) throw InputError("smallest-e needs --e");
    v = smallest_e_integral(m, f, *a.e);
  } else {
    throw InputError("unknown integral \"" + a.integral + "\"");
  }
  json j{{"integral", a.integral}};
  j.update(io::to_json(v));
  out << j.dump(2) << '\n';
  return kOk;
}

}  // namespace

int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Universal integrals and the inequalities built on them", "unineq"};
  app.footer(catalog_text());
  app.require_subcommand(1);

  IntegrateArgs ia;
  auto* integrate = app.add_subcommand("integrate", "Evaluate one integral of an instance's function");
  integrate->add_option("--instance", ia.instance, "Instance JSON file")->required();
  integrate->add_option("--integral", ia.integral, "sugeno|shilkret|universal|seminormed|semiconormed|smallest-e")
      ->required();
  integrate->add_option("--op", ia.op, "Op JSON file or inline JSON");
  integrate->add_option("--e", ia.e, "Neutral element for smallest-e");
  integrate->add_option("--tol", ia.tol, "Refinement tolerance on continuous carriers");
  integrate->add_option("--function", ia.function, "Index into the instance's functions");

  std::string theorem, instance;
  double tol = 0.0;
  bool skip = false, parallel = false;
  auto* verify_cmd = app.add_subcommand("verify", "Evaluate one inequality and its hypotheses");
  verify_cmd->add_option("--theorem", theorem, "Theorem id")->required();
  verify_cmd->add_option("--instance", instance, "Instance JSON file")->required();
  verify_cmd->add_option("--tol", tol, "Extra tolerance added to the verdict tolerance");
  verify_cmd->add_flag("--skip-hypotheses", skip, "Evaluate both sides only");
  verify_cmd->add_flag("--parallel", parallel, "Run grid checks in parallel");

  std::string config;
  std::optional<std::size_t> trials;
  std::optional<std::uint64_t> seed;
  auto* falsify = app.add_subcommand("falsify", "Run a randomized falsification campaign (JSON lines)");
  falsify->add_option("--theorem", theorem, "Theorem id")->required();
  falsify->add_option("--config", config, "Campaign config JSON file")->required();
  falsify->add_option("--trials", trials, "Override the configured trial count");
  falsify->add_option("--seed", seed, "Override the configured seed");

  std::string op, properties = "nondecreasing,annihilator_zero,neutral";
  std::size_t grid = 101;
  auto* check_op = app.add_subcommand("check-op", "Grid-check algebraic properties of an op");
  check_op->add_option("--op", op, "Op JSON file or inline JSON")->required();
  check_op->add_option("--properties", properties, "Comma-separated property list");
  check_op->add_option("--grid", grid, "Points on the base grid");
  check_op->add_flag("--parallel", parallel, "Run grid checks in parallel");

  auto* reproduce = app.add_subcommand("reproduce-paper", "Recompute the worked example and its violated verdict");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    error_record(err, "usage", e.what());
    return kInputError;
  }

  try {
    if (integrate->parsed()) return run_integrate(ia, out);

    if (verify_cmd->parsed()) {
      const auto id = parse_theorem(theorem);
      auto doc = load_arg(instance);
      auto inst = io::read_instance(doc, id);
      if (doc.is_object() && doc.contains("theorem") && inst.theorem != id)
        throw InputError("instance theorem \"" + doc["theorem"].get<std::string>() + "\" differs from --theorem");
      inst.theorem = id;
      if (!(tol >= 0.0)) throw InputError("--tol must be nonnegative");
      const auto v = verify(inst, {tol, skip, parallel ? Exec::Parallel : Exec::Serial});
      out << io::to_json(v).dump(2) << '\n';
      return v.holds ? kOk : kViolation;
    }

    if (falsify->parsed()) {
      auto cfg = read_config(load_arg(config), parse_theorem(theorem));
      if (trials) cfg.trials = *trials;
      if (seed) cfg.seed = *seed;
      const auto report = run_campaign(cfg);
      std::ostringstream buf;
      write_jsonl(report, buf);
      out << buf.str();
      return report.clean() ? kOk : kViolation;
    }

    if (check_op->parsed()) {
      const auto o = io::read_op(load_arg(op));
      if (grid < 2) throw InputError("--grid needs at least 2 points");
      const auto props = parse_properties(properties);
      const auto report = verify_op_properties(o, props, GridSpec::for_cap(o.cap_value(), o.neutral(), grid),
                                               parallel ? Exec::Parallel : Exec::Serial);
      json j{{"op", io::to_json(o)}};
      j.update(io::to_json(report));
      out << j.dump(2) << '\n';
      return report.passed() ? kOk : kViolation;
    }

    if (reproduce->parsed()) {
      const auto r = reproduce_paper();
      out << to_json(r).dump(2) << '\n';
      return r.passed() ? kOk : kViolation;
    }
  } catch (const InputError& e) {
    error_record(err, "input", e.what());
    return kInputError;
  } catch (const json::exception& e) {
    error_record(err, "schema", e.what());
    return kInputError;
  } catch (const std::exception& e) {
    error_record(err, "internal", e.what());
    return kInputError;
  }
  return kInputError;
}

}  // namespace unineq::cli
