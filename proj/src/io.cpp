#include "polyadj/io.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

namespace polyadj::io {

json to_json(const Integer& v) {
  if (auto small = to_int64(v)) return *small;
  return v.str();
}

Integer integer_from_json(const json& j) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Integer(j.get<std::uint64_t>());
    return Integer(j.get<std::int64_t>());
  }
  if (j.is_string()) {
    try {
      return parse_integer(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what());
    }
  }
  throw ParseError("expected an integer, got " + j.dump());
}

json to_json(const LatticePoint& p) { return json::array({to_json(p.x), to_json(p.y)}); }

json to_json(const LatticePolytope& p) {
  json vs = json::array();
  for (const auto& v : p.vertices()) vs.push_back(to_json(v));
  return json{{"vertices", vs}};
}

LatticePolytope polytope_from_json(const json& j) {
  if (!j.is_object() || !j.contains("vertices") || !j["vertices"].is_array()) {
    throw ParseError("polytope JSON must be an object with a \"vertices\" array");
  }
  std::vector<LatticePoint> pts;
  for (const auto& v : j["vertices"]) {
    if (!v.is_array() || v.size() != 2) throw ParseError("each vertex must be a pair [x, y]");
    pts.emplace_back(integer_from_json(v[0]), integer_from_json(v[1]));
  }
  return hull(pts);
}

LatticePolytope read_polytope(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  try {
    return polytope_from_json(json::parse(in));
  } catch (const json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
}

json to_json(const InvariantRecord& r) {
  return json{{"a2", to_json(r.a2)}, {"i", to_json(r.i)}, {"b", to_json(r.b)}, {"n", to_json(r.n)},
              {"v", to_json(r.v)},   {"d", to_json(r.d)}, {"s", to_json(r.s)}};
}

json to_json(const Fan& f) {
  json rays = json::array();
  for (const auto& u : f.rays) rays.push_back(to_json(u));
  json flags = json::array();
  for (bool o : f.original) flags.push_back(o);
  return json{{"rays", rays}, {"original", flags}};
}

json to_json(const ToricSurface& t) {
  json support = json::array();
  for (const auto& h : t.support) support.push_back(to_json(h));
  json self = json::array();
  for (const auto& s : t.self_intersection) self.push_back(to_json(s));
  json mults = json::array();
  for (const auto& [vertex, m] : t.mults) mults.push_back(json{{"vertex", to_json(vertex)}, {"mult", m}});
  json out = to_json(t.fan);
  out["support"] = support;
  out["self_intersections"] = self;
  out["rho"] = t.rho;
  out["K2"] = to_json(t.K2);
  out["mults"] = mults;
  return out;
}

json to_json(const IntersectionNumbers& in) {
  return json{{"HH", to_json(in.HH)}, {"HK", to_json(in.HK)}, {"KK", to_json(in.KK)}};
}

json to_json(const EndgameCase& e) {
  json out{{"tag", to_string(e.tag)}};
  if (e.tag == Endgame::pencil) out["k"] = to_json(e.k);
  return out;
}

json to_json(const AdjunctionChain& c) {
  json stages = json::array();
  for (std::size_t k = 0; k < c.polytopes.size(); ++k) {
    stages.push_back(json{{"vertices", to_json(c.polytopes[k])["vertices"]},
                          {"dim", c.polytopes[k].dim()},
                          {"invariants", to_json(c.records[k])},
                          {"level", c.stage_levels[k].str()}});
  }
  return json{{"stages", stages}, {"steps", c.steps}, {"level", c.level.str()}, {"endgame", to_json(c.endgame)}};
}

json to_json(const Comparison& c) {
  return json{{"lhs", c.lhs.str()}, {"rhs", c.rhs.str()}, {"holds", c.holds}, {"equality", c.equality}};
}

json to_json(const LemmaStep& s) {
  json out{{"stage", s.stage},
           {"b", to_json(s.b)},
           {"b1", to_json(s.b1)},
           {"bound", to_json(s.bound)},
           {"adjoint_nef", s.adjoint_nef},
           {"identity", s.identity},
           {"equality_iff_p2", s.equality_iff_p2}};
  out["rho1"] = s.rho1 ? json(*s.rho1) : json(nullptr);
  out["b1_fan"] = s.b1_fan ? to_json(*s.b1_fan) : json(nullptr);
  return out;
}

json to_json(const InequalityReport& r) {
  json out;
  out["invariants"] = to_json(r.inv);
  out["level"] = r.level.str();
  out["steps"] = r.chain.steps;
  out["endgame"] = to_json(r.chain.endgame);
  json scott = to_json(r.scott.cmp);
  scott["applicable"] = r.scott.applicable;
  out["scott"] = scott;
  out["main_homog"] = to_json(r.main_homog);
  out["main_orig"] = to_json(r.main_orig);
  out["forms_agree"] = r.forms_agree();

  json lemma = json::array();
  for (const auto& s : r.lemma_steps) lemma.push_back(to_json(s));
  out["lemma_steps"] = lemma;

  json onion = json::array();
  for (const auto& s : r.onion_steps) {
    onion.push_back(json{{"stage", s.stage}, {"i", to_json(s.i)}, {"i1", to_json(s.i1)}, {"b1", to_json(s.b1)},
                         {"holds", s.holds}});
  }
  out["onion_steps"] = onion;

  json area = json::array();
  for (const auto& a : r.area_drops) {
    area.push_back(json{{"stage", a.stage},
                        {"drop", to_json(a.drop)},
                        {"boundary_sum", to_json(a.boundary_sum)},
                        {"two_dimensional", a.two_dimensional},
                        {"identity", a.identity},
                        {"at_least_six", a.at_least_six}});
  }
  out["area_drops"] = area;

  if (r.induction) {
    json lines = json::array();
    for (const auto& l : r.induction->lines) lines.push_back(l.str());
    out["induction"] = json{{"lines", lines}, {"holds", r.induction->holds()}};
  } else {
    out["induction"] = nullptr;
  }
  json base{{"applicable", r.base_case.applicable}};
  if (r.base_case.applicable) {
    base["K2"] = to_json(r.base_case.K2);
    base["adjoint_square"] = r.base_case.adjoint_square ? to_json(*r.base_case.adjoint_square) : json(nullptr);
    base["holds"] = r.base_case.holds;
  }
  out["base_case"] = base;
  return out;
}

json to_json(const VerificationSummary& s, bool include_timing) {
  json violations = json::array();
  for (const auto& v : s.violations) {
    violations.push_back(json{{"polygon", v.polygon}, {"check", v.check}, {"detail", v.detail}});
  }
  json out{{"total", s.total},
           {"by_endgame", s.by_endgame},
           {"violations", violations},
           {"classification_errors", s.classification_errors},
           {"equality_cases", s.equality_cases},
           {"checks_run", s.checks_run},
           {"ok", s.ok()}};
  if (include_timing) out["elapsed_seconds"] = s.elapsed_seconds;
  return out;
}

json to_json(const RunManifest& m) {
  json out{{"tool_version", m.tool_version}, {"subcommand", m.subcommand}, {"arguments", m.arguments},
           {"jobs", m.jobs},                 {"started", m.started},       {"finished", m.finished},
           {"run_id", m.run_id}};
  out["seed"] = m.seed ? json(*m.seed) : json(nullptr);
  return out;
}

std::string run_id(const std::string& tool_version, const std::string& subcommand,
                   const std::vector<std::string>& arguments) {
  std::uint64_t h = 1469598103934665603ULL;
  auto feed = [&h](const std::string& s) {
    for (unsigned char c : s) {
      h ^= c;
      h *= 1099511628211ULL;
    }
    h ^= 0xff;
    h *= 1099511628211ULL;
  };
  feed(tool_version);
  feed(subcommand);
  for (const auto& a : arguments) feed(a);
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::vector<std::string> csv_columns() {
  return {"run_id", "polygon", "i",      "b",      "n",      "v",       "d",     "s",
          "l_num",  "l_den",   "scott_ok", "scott_eq", "main_ok", "main_eq", "steps", "endgame"};
}

std::string csv_header() {
  std::string out;
  for (const auto& c : csv_columns()) {
    if (!out.empty()) out += ',';
    out += c;
  }
  return out + "\n";
}

std::string csv_row(const std::string& run_id, const LatticePolytope& polygon, const InequalityReport& r) {
  auto flag = [](bool b) { return std::string(b ? "1" : "0"); };
  const std::string scott_ok = r.scott.applicable ? flag(r.scott.cmp.holds) : "na";
  const std::string scott_eq = r.scott.applicable ? flag(r.scott.cmp.equality) : "na";
  const std::vector<std::string> fields{run_id,
                                        compact_string(polygon),
                                        r.inv.i.str(),
                                        r.inv.b.str(),
                                        r.inv.n.str(),
                                        r.inv.v.str(),
                                        r.inv.d.str(),
                                        r.inv.s.str(),
                                        r.level.num().str(),
                                        r.level.den().str(),
                                        scott_ok,
                                        scott_eq,
                                        flag(r.main_homog.holds),
                                        flag(r.main_homog.equality),
                                        std::to_string(r.chain.steps),
                                        to_string(r.chain.endgame.tag)};
  std::string out;
  for (const auto& f : fields) {
    if (!out.empty()) out += ',';
    out += f;
  }
  return out + "\n";
}

std::vector<std::vector<std::pair<std::string, std::string>>> parse_csv(const std::string& text) {
  auto split = [](const std::string& line) {
    std::vector<std::string> out;
    std::size_t start = 0;
    for (;;) {
      const auto comma = line.find(',', start);
      out.push_back(line.substr(start, comma - start));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    return out;
  };
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) throw ParseError("CSV has no header row");
  const auto header = split(line);
  std::vector<std::vector<std::pair<std::string, std::string>>> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto fields = split(line);
    if (fields.size() != header.size()) throw ParseError("CSV row has " + std::to_string(fields.size()) + " fields");
    std::vector<std::pair<std::string, std::string>> row;
    for (std::size_t k = 0; k < header.size(); ++k) row.emplace_back(header[k], fields[k]);
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace polyadj::io
