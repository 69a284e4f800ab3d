#pragma once

// JSON and CSV encodings of polytopes, fans, chains and reports.
//
// Polytope JSON: {"vertices": [[x, y], ...]} in any order, hull applied on
// read; Empty is {"vertices": []}. Integers are JSON numbers when they fit
// in 64 bits and decimal strings otherwise (both accepted on read).
// Rationals are "num/den" strings. Objects are emitted with sorted keys.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "polyadj/adjunction.hpp"
#include "polyadj/enumeration.hpp"
#include "polyadj/fan.hpp"
#include "polyadj/inequalities.hpp"
#include "polyadj/invariants.hpp"
#include "polyadj/lattice.hpp"

namespace polyadj::io {

using json = nlohmann::json;

struct ParseError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

json to_json(const Integer& v);
Integer integer_from_json(const json& j);

json to_json(const LatticePoint& p);
json to_json(const LatticePolytope& p);
LatticePolytope polytope_from_json(const json& j);
LatticePolytope read_polytope(const std::string& path);

json to_json(const InvariantRecord& r);
json to_json(const Fan& f);
json to_json(const ToricSurface& t);
json to_json(const IntersectionNumbers& in);
json to_json(const EndgameCase& e);
json to_json(const AdjunctionChain& c);
json to_json(const Comparison& c);
json to_json(const LemmaStep& s);
json to_json(const InequalityReport& r);
/// Timing is omitted when include_timing is false.
json to_json(const VerificationSummary& s, bool include_timing);

struct RunManifest {
  std::string tool_version;
  std::string subcommand;
  std::vector<std::string> arguments;
  std::optional<std::uint64_t> seed;
  unsigned jobs = 1;
  std::string started;
  std::string finished;
  std::string run_id;
};

json to_json(const RunManifest& m);

/// Deterministic id (FNV-1a, hex) of a tool version, subcommand and arguments.
std::string run_id(const std::string& tool_version, const std::string& subcommand,
                   const std::vector<std::string>& arguments);

/// Pretty-printed with a trailing newline.
std::string dump(const json& j);

std::vector<std::string> csv_columns();
std::string csv_header();
/// One LF-terminated row; `polygon` is the canonical form.
std::string csv_row(const std::string& run_id, const LatticePolytope& polygon, const InequalityReport& r);

/// Parses a CSV written by csv_header/csv_row into rows of named fields.
std::vector<std::vector<std::pair<std::string, std::string>>> parse_csv(const std::string& text);

}  // namespace polyadj::io
