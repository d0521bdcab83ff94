#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "unineq/inequalities.hpp"
#include "unineq/json_io.hpp"
#include "unineq/rng.hpp"

namespace unineq {

/// Draws from (lo, hi], or from `choices` when nonempty.
struct ValueRange {
  double lo = 1.0;
  double hi = 1.0;
  std::vector<double> choices;
  double draw(Rng& rng) const;
};

enum class Carrier { Finite, LebesguePower };
enum class MeasureFamily { RandomTable, Counting, Distorted };

/// Exponent keys are passed to the instance as-is, except:
///   xi_i / omega_i   apply to every xi1..xin / omega1..omegan
///   phi, phi1, phi2  draw power transforms x^p for the phi fields
struct CampaignConfig {
  std::uint64_t seed = 0;
  std::size_t trials = 0;
  TheoremId theorem = TheoremId::Chebyshev;
  Carrier carrier = Carrier::Finite;
  std::size_t n_min = 1;
  std::size_t n_max = 8;
  MeasureFamily measure_family = MeasureFamily::RandomTable;
  ValueRange distortion_p;
  ValueRange function_p{0.25, 4.0, {}};
  std::vector<BinaryOp> op_pool;
  std::vector<BinaryOp> star_pool;
  std::optional<Aggregator> H;
  std::size_t functions = 2;
  std::map<std::string, ValueRange> exponent_ranges;
  bool respect_hypotheses = true;
  Scale scale = Scale::Unit;
  bool normalize = true;
  bool shrink = true;
  double extra_tol = 0.0;
  Exec exec = Exec::Parallel;
  /// Violations past this many are counted and indexed but not detailed or shrunk.
  std::size_t max_violation_records = 100;
};

/// `theorem` overrides the config's own "theorem" field.
CampaignConfig read_config(const io::json& j, std::optional<TheoremId> theorem = std::nullopt);
io::json to_json(const CampaignConfig& config);

/// Sorted uniform draws assigned by subset cardinality, then repaired upward.
FiniteMonotoneMeasure random_measure(Rng& rng, std::size_t n, bool normalize);

/// Deterministic in (config, trial).
TheoremInstance gen_instance(const CampaignConfig& config, std::size_t trial);

/// Hypothesis-passing (or any, when hypotheses are not respected) failed verdict.
bool is_violation(const CampaignConfig& config, const InequalityVerdict& v);

struct Violation {
  std::size_t trial = 0;
  TheoremInstance instance;
  InequalityVerdict verdict;
  std::string digest;
  /// Regenerating the trial and reloading the instance from JSON both reproduce the verdict.
  bool reverified = false;
  std::optional<TheoremInstance> shrunk;
  std::optional<InequalityVerdict> shrunk_verdict;
};

struct ViolationEntry {
  std::size_t trial = 0;
  double margin = 0.0;
  std::string digest;
};

struct CampaignReport {
  CampaignConfig config;
  std::size_t trials = 0;
  std::size_t hypothesis_pass_count = 0;
  std::size_t failed_verdicts = 0;
  /// Every violation in trial order.
  std::vector<ViolationEntry> index;
  /// The first max_violation_records of them, in full.
  std::vector<Violation> violations;
  bool clean() const { return index.empty(); }
};

CampaignReport run_campaign(const CampaignConfig& config);

/// Header record, one record per violation, summary record.
void write_jsonl(const CampaignReport& report, std::ostream& out);

struct FixtureValue {
  std::string name;
  double value = 0.0;
  double expected = 0.0;
  double tol = 0.0;
  bool passed = false;
};

struct FixtureReport {
  std::vector<FixtureValue> values;
  InequalityVerdict verdict;
  std::vector<std::pair<std::string, bool>> checks;
  bool passed() const;
};

/// The worked example: three Sugeno values and the violated verdict.
FixtureReport reproduce_paper();
io::json to_json(const FixtureReport& report);

}  // namespace unineq
