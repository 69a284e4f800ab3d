#include "polyadj/enumeration.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <set>
#include <stdexcept>
#include <thread>

#include "polyadj/fan.hpp"

namespace polyadj {

// ---------------------------------------------------------------------------
// Box enumeration

namespace {

struct GridPoint {
  int x, y;
  friend auto operator<=>(const GridPoint&, const GridPoint&) = default;
};

long orient(const GridPoint& a, const GridPoint& b, const GridPoint& c) {
  return static_cast<long>(b.x - a.x) * (c.y - a.y) - static_cast<long>(b.y - a.y) * (c.x - a.x);
}

// Depth-first construction of strictly convex counter-clockwise vertex
// chains s = v0 < v1 < ... (lexicographic start), each new vertex turning
// left and increasing the angle seen from s.
class ChainBuilder {
 public:
  ChainBuilder(int n, std::set<LatticePolytope>& out) : n_(n), out_(out) {
    for (int x = 0; x <= n; ++x) {
      for (int y = 0; y <= n; ++y) grid_.push_back({x, y});
    }
  }

  void run(GridPoint start, GridPoint second) {
    chain_ = {start, second};
    extend();
  }

 private:
  void extend() {
    const GridPoint s = chain_.front();
    const GridPoint cur = chain_.back();
    const GridPoint prev = chain_[chain_.size() - 2];
    if (chain_.size() >= 3 && orient(prev, cur, s) > 0 && orient(cur, s, chain_[1]) > 0) emit();
    for (const auto& p : grid_) {
      if (!(s < p)) continue;
      if (orient(prev, cur, p) <= 0) continue;
      if (orient(s, cur, p) <= 0) continue;
      chain_.push_back(p);
      extend();
      chain_.pop_back();
    }
  }

  void emit() {
    // Translation normalization: keep only chains touching both axes.
    const bool touches_x_axis = std::any_of(chain_.begin(), chain_.end(), [](const GridPoint& g) { return g.y == 0; });
    if (!touches_x_axis) return;
    std::vector<LatticePoint> pts;
    pts.reserve(chain_.size());
    for (const auto& g : chain_) pts.emplace_back(g.x, g.y);
    out_.insert(canonical_form(hull(pts)));
  }

  int n_;
  std::set<LatticePolytope>& out_;
  std::vector<GridPoint> grid_;
  std::vector<GridPoint> chain_;
};

template <typename Fn>
void parallel_for(std::size_t count, unsigned jobs, Fn&& fn) {
  jobs = std::max(1u, jobs);
  if (jobs == 1 || count <= 1) {
    for (std::size_t k = 0; k < count; ++k) fn(k, 0u);
    return;
  }
  std::vector<std::thread> workers;
  for (unsigned w = 0; w < jobs; ++w) {
    workers.emplace_back([&, w] {
      for (std::size_t k = w; k < count; k += jobs) fn(k, w);
    });
  }
  for (auto& t : workers) t.join();
}

}  // namespace

std::vector<LatticePolytope> enumerate_box(int n, unsigned jobs) {
  if (n < 1 || n > 6) throw std::invalid_argument("enumerate_box: box size must be in [1, 6]");

  // The lexicographically smallest vertex has x = 0 after translation.
  std::vector<std::pair<GridPoint, GridPoint>> tasks;
  for (int sy = 0; sy <= n; ++sy) {
    for (int x = 0; x <= n; ++x) {
      for (int y = 0; y <= n; ++y) {
        const GridPoint s{0, sy}, p{x, y};
        if (s < p) tasks.emplace_back(s, p);
      }
    }
  }

  jobs = std::max(1u, jobs);
  std::vector<std::set<LatticePolytope>> found(jobs);
  parallel_for(tasks.size(), jobs, [&](std::size_t k, unsigned w) {
    ChainBuilder builder(n, found[w]);
    builder.run(tasks[k].first, tasks[k].second);
  });

  std::set<LatticePolytope> merged;
  for (auto& s : found) merged.merge(s);
  return {merged.begin(), merged.end()};
}

LatticePolytope random_polygon(std::uint64_t seed, std::int64_t coord_bound) {
  if (coord_bound < 1) throw std::invalid_argument("random_polygon: coord_bound must be >= 1");
  std::mt19937_64 rng(seed);
  const auto range = static_cast<std::uint64_t>(coord_bound) + 1;
  for (;;) {
    const std::size_t count = 3 + static_cast<std::size_t>(rng() % 6);
    std::vector<LatticePoint> pts;
    for (std::size_t k = 0; k < count; ++k) {
      const auto x = static_cast<std::int64_t>(rng() % range);
      const auto y = static_cast<std::int64_t>(rng() % range);
      pts.emplace_back(x, y);
    }
    LatticePolytope p = hull(pts);
    if (p.dim() == 2) return p;
  }
}

std::vector<LatticePolytope> build_corpus(const CorpusSpec& spec, unsigned jobs) {
  if (const auto* box = std::get_if<BoxCorpus>(&spec.mode)) return enumerate_box(box->n, jobs);
  const auto& rnd = std::get<RandomCorpus>(spec.mode);
  std::vector<LatticePolytope> out;
  out.reserve(rnd.count);
  for (std::size_t k = 0; k < rnd.count; ++k) {
    out.push_back(canonical_form(random_polygon(rnd.seed + k, rnd.coord_bound)));
  }
  std::sort(out.begin(), out.end());
  if (spec.dedup) out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Verification

namespace {

class Checker {
 public:
  explicit Checker(PolygonResult& result) : r_(result), name_(compact_string(result.polygon)) {}

  void expect(const std::string& check, bool ok, const std::string& detail = {}) {
    ++r_.checks_run[check];
    if (!ok) r_.violations.push_back({name_, check, detail});
  }

 private:
  PolygonResult& r_;
  std::string name_;
};

std::string cmp_detail(const Comparison& c) { return c.lhs.str() + " vs " + c.rhs.str(); }

// Removing an inserted ray must leave a non-unimodular cone.
bool resolution_minimal(const Fan& fan) {
  const std::size_t n = fan.size();
  for (std::size_t k = 0; k < n; ++k) {
    if (fan.original[k]) continue;
    if (cross(fan.rays[(k + n - 1) % n], fan.rays[(k + 1) % n]) == 1) return false;
  }
  return true;
}

std::vector<LatticeVector> by_angle(std::vector<LatticeVector> rays) {
  std::sort(rays.begin(), rays.end(), angle_less);
  return rays;
}

void check_fan(const LatticePolytope& p, const InequalityReport& rep, Checker& c) {
  const Fan coarse = normal_fan(p);
  const ToricSurface t = toric_surface(p);
  const auto in = intersection_numbers(t);
  c.expect("fan_HH_equals_d", in.HH == rep.inv.d, in.HH.str());
  c.expect("fan_HK_equals_minus_b", -in.HK == rep.inv.b, in.HK.str());
  c.expect("fan_K2_equals_KK", in.KK == t.K2);
  c.expect("fan_K2_plus_rho", t.K2 + t.rho == 10, t.K2.str() + " + " + std::to_string(t.rho));
  c.expect("fan_K2_rays", t.K2 == 12 - static_cast<long>(t.fan.size()));
  c.expect("fan_v_parameter", v_parameter(t) == rep.inv.v, v_parameter(t).str());
  c.expect("fan_resolve_smooth", is_smooth(t.fan));
  c.expect("fan_resolve_minimal", resolution_minimal(t.fan));
  c.expect("fan_resolve_idempotent", resolve(t.fan) == t.fan);
  int inserted = 0;
  for (bool o : t.fan.original) inserted += o ? 0 : 1;
  int mult_sum = 0;
  for (const auto& [v, m] : t.mults) mult_sum += m;
  c.expect("fan_mults_sum", mult_sum == inserted);

  const Rational facet = facet_level(p);
  c.expect("level_facet_upper_bound", rep.level <= facet, rep.level.str() + " vs " + facet.str());
  if (is_smooth(coarse)) c.expect("level_facet_equal_when_smooth", rep.level == facet);

  // H + K on the minimal resolution: nef, with polytope the interior hull,
  // and its minimal model is the minimal resolution of that hull.
  if (rep.inv.i >= 1) {
    const auto& p1 = rep.chain.polytopes[1];
    const auto adjoint = adjoint_surface(t);
    c.expect("adjoint_nef", adjoint.has_value() && adjoint->polytope == p1);
    if (adjoint && p1.dim() == 2) {
      const ToricSurface model = minimalize(*adjoint);
      const Fan expected = resolve(normal_fan(p1));
      c.expect("adjoint_minimal_model", by_angle(model.fan.rays) == by_angle(expected.rays));
    }
  }
}

void check_report(const InequalityReport& rep, Checker& c) {
  const auto& ch = rep.chain;
  c.expect("main_homog", rep.main_homog.holds, cmp_detail(rep.main_homog));
  c.expect("main_orig", rep.main_orig.holds, cmp_detail(rep.main_orig));
  c.expect("main_forms_agree", rep.forms_agree());
  if (rep.scott.applicable) c.expect("scott", rep.scott.cmp.holds, cmp_detail(rep.scott.cmp));
  c.expect("steps_floor_level", ch.steps_match_level(), std::to_string(ch.steps) + " vs " + ch.level.str());

  for (std::size_t k = 0; k < ch.polytopes.size(); ++k) {
    if (ch.polytopes[k].dim() != 2) continue;
    const Integer& den = ch.stage_levels[k].den();
    c.expect("level_denominator", den == 1 || den == 2 || den == 3, ch.stage_levels[k].str());
    if (k + 1 < ch.polytopes.size() && ch.polytopes[k + 1].dim() == 2) {
      c.expect("level_drop", ch.stage_levels[k + 1] == ch.stage_levels[k] - 1,
               ch.stage_levels[k].str() + " -> " + ch.stage_levels[k + 1].str());
    }
  }
  for (const auto& s : rep.onion_steps) c.expect("onion_identity", s.holds, "stage " + std::to_string(s.stage));
  for (const auto& a : rep.area_drops) {
    c.expect("area_drop_identity", a.identity, a.drop.str() + " vs " + a.boundary_sum.str());
    c.expect("area_drop_at_least_six", a.at_least_six, a.drop.str());
  }
  for (const auto& l : rep.lemma_steps) {
    const std::string at = "stage " + std::to_string(l.stage);
    c.expect("lemma_bound", l.bound.holds, at + ": " + cmp_detail(l.bound));
    c.expect("lemma_identity", l.identity, at);
    c.expect("lemma_equality_iff_p2", l.equality_iff_p2, at);
    c.expect("lemma_adjoint_nef", l.adjoint_nef, at);
    c.expect("lemma_b1_fan", l.b1_fan.has_value() && *l.b1_fan == l.b1, at);
  }
  if (rep.induction) c.expect("induction_replay", rep.induction->holds());
  if (rep.base_case.applicable) c.expect("base_case", rep.base_case.holds);
}

}  // namespace

PolygonResult verify_polygon(const LatticePolytope& p, const ExtraCheck& extra) {
  PolygonResult result;
  result.polygon = canonical_form(p);
  Checker c(result);
  try {
    result.report = check_all(p);
  } catch (const ClassificationError& e) {
    result.classification_error = compact_string(result.polygon) + ": " + e.what();
    return result;
  } catch (const std::logic_error& e) {
    c.expect("internal_consistency", false, e.what());
    return result;
  }
  const InequalityReport& rep = *result.report;

  c.expect("lattice_point_count", lattice_point_count(p) == rep.inv.n);
  try {
    check_report(rep, c);
    check_fan(p, rep, c);
  } catch (const std::logic_error& e) {
    c.expect("internal_consistency", false, e.what());
  }
  if (extra) {
    const auto failure = extra(p, rep);
    c.expect("extra_check", !failure.has_value(), failure.value_or(""));
  }
  return result;
}

std::vector<PolygonResult> verify_all(std::span<const LatticePolytope> polygons, const VerifyOptions& options) {
  std::vector<PolygonResult> results(polygons.size());
  parallel_for(polygons.size(), options.jobs,
               [&](std::size_t k, unsigned) { results[k] = verify_polygon(polygons[k], options.extra_check); });
  return results;
}

VerificationSummary summarize(std::span<const PolygonResult> results) {
  VerificationSummary s;
  s.total = results.size();
  s.equality_cases["main"];
  s.equality_cases["scott"];
  s.equality_cases["lemma"];
  for (const auto& r : results) {
    for (const auto& [name, count] : r.checks_run) s.checks_run[name] += count;
    s.violations.insert(s.violations.end(), r.violations.begin(), r.violations.end());
    if (r.classification_error) s.classification_errors.push_back(*r.classification_error);
    if (!r.report) continue;
    const auto& rep = *r.report;
    ++s.by_endgame[to_string(rep.chain.endgame.tag)];
    const std::string name = compact_string(r.polygon);
    if (rep.main_homog.equality) s.equality_cases["main"].push_back(name);
    if (rep.scott.applicable && rep.scott.cmp.equality) s.equality_cases["scott"].push_back(name);
    if (!rep.lemma_steps.empty() && rep.lemma_steps.front().stage == 0 && rep.lemma_steps.front().bound.equality) {
      s.equality_cases["lemma"].push_back(name);
    }
  }
  for (auto& [key, list] : s.equality_cases) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }
  return s;
}

VerificationSummary verify_corpus(const CorpusSpec& spec, const VerifyOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const auto polygons = build_corpus(spec, options.jobs);
  const auto results = verify_all(polygons, options);
  VerificationSummary s = summarize(results);
  s.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return s;
}

}  // namespace polyadj
