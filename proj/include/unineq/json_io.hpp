#pragma once

#include <json.hpp>
#include <optional>
#include <string>

#include "unineq/aggregator.hpp"
#include "unineq/binary_op.hpp"
#include "unineq/function.hpp"
#include "unineq/grid.hpp"
#include "unineq/inequalities.hpp"
#include "unineq/integrals.hpp"
#include "unineq/measure.hpp"
#include "unineq/transform.hpp"

namespace unineq::io {

using json = nlohmann::ordered_json;

// Every reader throws InputError on schema violations.

json number(double v);
double read_number(const json& j, const char* what);

json to_json(const BinaryOp& op);
BinaryOp read_op(const json& j);

json to_json(const MonotoneTransform& t);
MonotoneTransform read_transform(const json& j);

json to_json(const Measure& m);
Measure read_measure(const json& j);

json to_json(const Function& f);
Function read_function(const json& j);

json to_json(const Aggregator& h);
Aggregator read_aggregator(const json& j);

json to_json(const PropertyReport& r);
json to_json(const IntegralValue& v);
json to_json(const InequalityVerdict& v);

/// A missing "theorem" falls back to `fallback`; with neither, InputError.
json to_json(const TheoremInstance& inst);
TheoremInstance read_instance(const json& j, std::optional<TheoremId> fallback = std::nullopt);

/// Parses text, mapping parse errors to InputError.
json parse(const std::string& text, const std::string& source);
json load_file(const std::string& path);

/// 64-bit FNV-1a of the compact dump, as 16 hex digits.
std::string digest(const json& j);

}  // namespace unineq::io
