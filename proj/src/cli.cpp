#include "polyadj/cli.hpp"

#include <chrono>
#include <ctime>
#include <fstream>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "polyadj/io.hpp"
#include "polyadj/picard.hpp"

#ifndef POLYADJ_VERSION
#define POLYADJ_VERSION "dev"
#endif

namespace polyadj::cli {

namespace {

using io::json;

constexpr const char* kVersion = POLYADJ_VERSION;

std::string utc_now() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

// Arguments that can change results; output paths and worker count are
// dropped so they don't perturb run_id.
std::vector<std::string> identity_args(const std::vector<std::string>& args) {
  static const std::set<std::string> dropped{"--out", "--summary", "--jobs"};
  std::vector<std::string> out;
  for (std::size_t k = 0; k < args.size(); ++k) {
    const auto& a = args[k];
    const auto eq = a.find('=');
    if (dropped.count(a.substr(0, eq))) {
      if (eq == std::string::npos) ++k;
      continue;
    }
    out.push_back(a);
  }
  return out;
}

struct Context {
  std::string subcommand;
  std::vector<std::string> args;
  bool reproducible = false;
  unsigned jobs = 1;
  std::optional<std::uint64_t> seed;
  std::string started;

  io::RunManifest manifest() const {
    io::RunManifest m;
    m.tool_version = kVersion;
    m.subcommand = subcommand;
    m.arguments = args;
    m.seed = seed;
    m.jobs = jobs;
    m.started = reproducible ? "1970-01-01T00:00:00Z" : started;
    m.finished = reproducible ? "1970-01-01T00:00:00Z" : utc_now();
    m.run_id = io::run_id(kVersion, subcommand, identity_args(args));
    return m;
  }
};

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw io::ParseError("cannot write " + path);
  f << text;
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw io::ParseError("cannot open " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

LatticePolytope require_polygon(const std::string& path) {
  LatticePolytope p = io::read_polytope(path);
  if (p.dim() != 2) throw io::ParseError(path + ": polytope is not 2-dimensional");
  return p;
}

std::vector<std::size_t> parse_index_list(const std::string& text) {
  std::vector<std::size_t> out;
  if (text.empty()) return out;
  std::size_t start = 0;
  for (;;) {
    const auto comma = text.find(',', start);
    const Integer v = parse_integer(text.substr(start, comma - start));
    if (v < 1) throw io::ParseError("exceptional indices are 1-based");
    out.push_back(v.convert_to<std::size_t>());
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

// Named numeric columns for plot-data, from one CSV row.
std::optional<std::string> column_value(const std::vector<std::pair<std::string, std::string>>& row,
                                        const std::string& name) {
  auto get = [&](const std::string& key) -> std::optional<std::string> {
    for (const auto& [k, v] : row) {
      if (k == key) return v;
    }
    return std::nullopt;
  };
  if (name == "2i+7") {
    auto i = get("i");
    if (!i) return std::nullopt;
    return (2 * parse_integer(*i) + 7).str();
  }
  if (name == "l") {
    auto num = get("l_num");
    auto den = get("l_den");
    if (!num || !den) return std::nullopt;
    return Rational(parse_integer(*num), parse_integer(*den)).str();
  }
  return get(name);
}

std::string corpus_csv(const std::vector<LatticePolytope>& polygons, const std::vector<PolygonResult>& results,
                       const std::string& run) {
  std::string text = io::csv_header();
  for (std::size_t k = 0; k < polygons.size(); ++k) {
    if (!results[k].report) continue;
    text += io::csv_row(run, results[k].polygon, *results[k].report);
  }
  return text;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const Hooks& hooks) {
  CLI::App app{"Adjunction, level and inequality checks for lattice polygons"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", kVersion);

  Context ctx;
  ctx.started = utc_now();
  ctx.args = args;
  bool reproducible = false;
  app.add_flag("--reproducible", reproducible, "Fixed timestamps in manifests");

  std::string poly_path;
  std::string out_path;

  auto* analyze = app.add_subcommand("analyze", "Invariants and inequality report for a polygon");
  analyze->add_option("polygon", poly_path, "Polygon JSON file")->required();
  auto* chain_cmd = app.add_subcommand("chain", "Full adjunction chain of a polygon");
  chain_cmd->add_option("polygon", poly_path, "Polygon JSON file")->required();
  auto* fan_cmd = app.add_subcommand("fan", "Resolved normal fan, rho, K^2, multiplicities, v");
  fan_cmd->add_option("polygon", poly_path, "Polygon JSON file")->required();

  auto* picard_cmd = app.add_subcommand("picard", "Intersection calculator on Z^{1,r}");
  picard_cmd->require_subcommand(1);
  std::string class_a, class_b, exceptional_list;
  std::size_t rank = 1, times = 1;
  auto* p_numerics = picard_cmd->add_subcommand("numerics", "d, b, s of a class H");
  p_numerics->add_option("H", class_a, "Class \"d0;m1,...,mr\"")->required();
  auto* p_pair = picard_cmd->add_subcommand("pair", "Intersection number A.B");
  p_pair->add_option("A", class_a)->required();
  p_pair->add_option("B", class_b)->required();
  auto* p_blowup = picard_cmd->add_subcommand("blowup", "Blow up a lattice of the given rank");
  p_blowup->add_option("rank", rank)->required()->check(CLI::PositiveNumber);
  p_blowup->add_option("--times", times, "Number of blow-ups")->check(CLI::PositiveNumber);
  auto* p_contract = picard_cmd->add_subcommand("contract", "Contract H-orthogonal exceptional classes");
  p_contract->add_option("H", class_a)->required();
  p_contract->add_option("--exceptional", exceptional_list, "1-based indices, comma separated");
  auto* p_reflect = picard_cmd->add_subcommand("reflect", "Reflect a class in a root");
  p_reflect->add_option("A", class_a)->required();
  p_reflect->add_option("root", class_b)->required();

  int box = 0;
  unsigned jobs = 1;
  std::string summary_path;
  auto* enumerate = app.add_subcommand("enumerate", "Exhaustive box corpus as CSV");
  enumerate->add_option("--box", box, "Box size N (vertices in [0,N]^2)")->required()->check(CLI::Range(1, 6));
  enumerate->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  enumerate->add_option("--out", out_path, "CSV output file")->required();
  enumerate->add_option("--summary", summary_path, "Also write a JSON summary");

  std::uint64_t seed = 0;
  std::size_t count = 0;
  std::int64_t bound = 10;
  auto* verify = app.add_subcommand("verify", "Run every check over a corpus");
  auto* verify_box = verify->add_option("--box", box, "Box size N")->check(CLI::Range(1, 6));
  auto* verify_seed = verify->add_option("--random-seed", seed, "Random corpus seed");
  verify->add_option("--count", count, "Random corpus size")->needs(verify_seed);
  verify->add_option("--bound", bound, "Random corpus coordinate bound")->check(CLI::PositiveNumber);
  verify->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  verify->add_option("--out", out_path, "Summary JSON file (default stdout)");
  verify_box->excludes(verify_seed);

  std::string x_col, y_col, csv_path;
  auto* plot = app.add_subcommand("plot-data", "Two-column data from corpus rows");
  plot->add_option("--x", x_col, "Column for x")->required();
  plot->add_option("--y", y_col, "Column for y")->required();
  auto* plot_csv = plot->add_option("--csv", csv_path, "CSV from `enumerate`");
  auto* plot_box = plot->add_option("--box", box, "Compute the box corpus instead")->check(CLI::Range(1, 6));
  plot->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  plot->add_option("--out", out_path, "Output file (default stdout)");
  plot_csv->excludes(plot_box);

  std::vector<std::string> argv_storage{"polyadj"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_storage) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  ctx.reproducible = reproducible;
  ctx.jobs = jobs;

  try {
    if (*analyze) {
      ctx.subcommand = "analyze";
      const LatticePolytope p = require_polygon(poly_path);
      json doc{{"polygon", io::to_json(p)},
               {"canonical_form", io::to_json(canonical_form(p))},
               {"invariants", io::to_json(invariants(p))},
               {"report", io::to_json(check_all(p))}};
      doc["manifest"] = io::to_json(ctx.manifest());
      out << io::dump(doc);
      return 0;
    }
    if (*chain_cmd) {
      ctx.subcommand = "chain";
      const LatticePolytope p = require_polygon(poly_path);
      json doc = io::to_json(chain(p));
      doc["manifest"] = io::to_json(ctx.manifest());
      out << io::dump(doc);
      return 0;
    }
    if (*fan_cmd) {
      ctx.subcommand = "fan";
      const LatticePolytope p = require_polygon(poly_path);
      const ToricSurface t = toric_surface(p);
      json doc{{"normal_fan", io::to_json(normal_fan(p))},
               {"resolved", io::to_json(t)},
               {"rho", t.rho},
               {"K2", io::to_json(t.K2)},
               {"v", io::to_json(v_parameter(t))},
               {"intersection_numbers", io::to_json(intersection_numbers(t))}};
      doc["manifest"] = io::to_json(ctx.manifest());
      out << io::dump(doc);
      return 0;
    }
    if (*picard_cmd) {
      ctx.subcommand = "picard";
      json doc;
      if (*p_numerics) {
        const auto h = picard::DivisorClass::parse(class_a);
        const auto n = picard::numerics(h);
        doc = json{{"class", h.str()}, {"d", io::to_json(n.d)}, {"b", io::to_json(n.b)}, {"s", io::to_json(n.s)}};
      } else if (*p_pair) {
        const auto a = picard::DivisorClass::parse(class_a);
        const auto b = picard::DivisorClass::parse(class_b);
        const Integer pairing = picard::pair(a, b);
        doc = json{{"A", a.str()}, {"B", b.str()}, {"pairing", io::to_json(pairing)}};
      } else if (*p_blowup) {
        picard::PicardLattice lat(rank);
        for (std::size_t k = 0; k < times; ++k) lat = picard::blow_up(lat);
        const auto k_class = lat.canonical();
        const Integer k2 = picard::pair(k_class, k_class);
        doc = json{{"rank", lat.rank()},
                   {"K", k_class.str()},
                   {"K2", io::to_json(k2)},
                   {"K2_plus_rho", io::to_json(k2 + static_cast<long>(lat.rank()))}};
      } else if (*p_contract) {
        const auto h = picard::DivisorClass::parse(class_a);
        const auto idx = parse_index_list(exceptional_list);
        const auto rep = picard::contract(picard::PicardLattice(h.rank()), h, idx);
        doc = json{{"H", h.str()},
                   {"H1", rep.h1.str()},
                   {"b", io::to_json(rep.b)},
                   {"b1", io::to_json(rep.b1)},
                   {"s", io::to_json(rep.s)},
                   {"s1", io::to_json(rep.s1)},
                   {"rho1", rep.rho1},
                   {"lemma_identity", rep.lemma_identity},
                   {"genus_identity", rep.genus_identity}};
      } else if (*p_reflect) {
        const auto a = picard::DivisorClass::parse(class_a);
        const auto r = picard::DivisorClass::parse(class_b);
        const auto image = picard::reflect(a, r);
        doc = json{{"A", a.str()}, {"root", r.str()}, {"image", image.str()}};
      }
      doc["manifest"] = io::to_json(ctx.manifest());
      out << io::dump(doc);
      return 0;
    }
    if (*enumerate) {
      ctx.subcommand = "enumerate";
      const auto polygons = enumerate_box(box, jobs);
      const auto results = verify_all(polygons, {jobs, {}});
      const auto manifest = ctx.manifest();
      write_output(out_path, corpus_csv(polygons, results, manifest.run_id), out);
      if (!summary_path.empty()) {
        json doc{{"manifest", io::to_json(manifest)}, {"summary", io::to_json(summarize(results), false)}};
        write_output(summary_path, io::dump(doc), out);
      }
      return 0;
    }
    if (*verify) {
      ctx.subcommand = "verify";
      CorpusSpec spec;
      if (*verify_seed) {
        ctx.seed = seed;
        spec.mode = RandomCorpus{seed, count, bound};
      } else if (*verify_box) {
        spec.mode = BoxCorpus{box};
      } else {
        err << "verify: need --box N or --random-seed S --count C\n";
        return 2;
      }
      const VerificationSummary summary = verify_corpus(spec, {jobs, hooks.extra_check});
      json doc{{"manifest", io::to_json(ctx.manifest())}, {"summary", io::to_json(summary, !reproducible)}};
      write_output(out_path, io::dump(doc), out);
      if (!summary.ok()) {
        err << "verify: " << summary.violations.size() << " violation(s), " << summary.classification_errors.size()
            << " classification error(s)\n";
        return 1;
      }
      return 0;
    }
    if (*plot) {
      ctx.subcommand = "plot-data";
      std::string csv;
      if (!csv_path.empty()) {
        csv = read_file(csv_path);
      } else if (*plot_box) {
        const auto polygons = enumerate_box(box, jobs);
        csv = corpus_csv(polygons, verify_all(polygons, {jobs, {}}), ctx.manifest().run_id);
      } else {
        err << "plot-data: need --csv FILE or --box N\n";
        return 2;
      }
      std::string text = "# " + x_col + " " + y_col + "\n";
      for (const auto& row : io::parse_csv(csv)) {
        const auto x = column_value(row, x_col);
        const auto y = column_value(row, y_col);
        if (!x || !y) throw io::ParseError("plot-data: unknown column " + (!x ? x_col : y_col));
        text += *x + " " + *y + "\n";
      }
      write_output(out_path, text, out);
      return 0;
    }
  } catch (const io::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace polyadj::cli
