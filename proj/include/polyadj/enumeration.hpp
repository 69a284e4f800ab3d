#pragma once

// Polygon corpora (exhaustive box enumeration up to unimodular equivalence,
// seeded random polygons) and the verification harness that runs every
// check of the library over them.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "polyadj/inequalities.hpp"
#include "polyadj/lattice.hpp"

namespace polyadj {

/// Canonical forms of all 2-dimensional lattice polygons with vertices in
/// [0, n]^2, one per unimodular class, sorted. Requires 1 <= n <= 6.
std::vector<LatticePolytope> enumerate_box(int n, unsigned jobs = 1);

/// Hull of 3..8 pseudo-random points of [0, coord_bound]^2, redrawn until
/// 2-dimensional. Deterministic in (seed, coord_bound).
LatticePolytope random_polygon(std::uint64_t seed, std::int64_t coord_bound);

struct BoxCorpus {
  int n = 1;
};
struct RandomCorpus {
  std::uint64_t seed = 0;
  std::size_t count = 0;
  std::int64_t coord_bound = 10;
};

struct CorpusSpec {
  std::variant<BoxCorpus, RandomCorpus> mode;
  bool dedup = true;
};

/// Materializes the corpus, sorted by canonical form. Random corpora are
/// canonicalized and, with dedup, made unique.
std::vector<LatticePolytope> build_corpus(const CorpusSpec& spec, unsigned jobs = 1);

struct Violation {
  std::string polygon;  // canonical form, compact string
  std::string check;
  std::string detail;

  friend bool operator==(const Violation&, const Violation&) = default;
};

/// Extra per-polygon check hook; returns a failure detail or nullopt.
using ExtraCheck = std::function<std::optional<std::string>(const LatticePolytope&, const InequalityReport&)>;

struct PolygonResult {
  LatticePolytope polygon;  // canonical form
  std::optional<InequalityReport> report;
  std::vector<Violation> violations;
  std::optional<std::string> classification_error;
  std::map<std::string, std::size_t> checks_run;
};

/// Runs every check on one polygon (dim 2).
PolygonResult verify_polygon(const LatticePolytope& p, const ExtraCheck& extra = {});

struct VerificationSummary {
  std::size_t total = 0;
  std::map<std::string, std::size_t> by_endgame;
  std::vector<Violation> violations;
  std::vector<std::string> classification_errors;
  /// "main", "scott", "lemma" -> canonical forms of the equality cases, sorted.
  std::map<std::string, std::vector<std::string>> equality_cases;
  /// Number of evaluations per check name.
  std::map<std::string, std::size_t> checks_run;
  double elapsed_seconds = 0.0;

  bool ok() const { return violations.empty() && classification_errors.empty(); }
};

struct VerifyOptions {
  unsigned jobs = 1;
  ExtraCheck extra_check;
};

/// Verifies polygons in parallel; results are merged in input order.
std::vector<PolygonResult> verify_all(std::span<const LatticePolytope> polygons, const VerifyOptions& options = {});

VerificationSummary summarize(std::span<const PolygonResult> results);

VerificationSummary verify_corpus(const CorpusSpec& spec, const VerifyOptions& options = {});

}  // namespace polyadj
