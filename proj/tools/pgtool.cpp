// pgtool: build, verify and inspect partial geometries on F_3^4.
//
// Every command prints one key-sorted JSON report on stdout.
// Exit codes: 0 ok, 1 verification or claim failure, 2 usage or I/O error.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "pg/claims.hpp"
#include "pg/cliques.hpp"
#include "pg/construction.hpp"
#include "pg/geometric_search.hpp"
#include "pg/graphs.hpp"
#include "pg/symmetry.hpp"

using nlohmann::json;
using namespace pg;

namespace {

constexpr const char *kVersion = "1.0.0";

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <class Count> json histogram(const std::map<int, Count> &h) {
  json out = json::object();
  for (auto [k, v] : h) out[std::to_string(k)] = v;
  return out;
}

json rational(const Rational &r) { return json::array({r.numerator(), r.denominator()}); }

json params(const PgParams &p) { return {{"s", p.s}, {"t", p.t}, {"alpha", p.alpha}, {"v", p.v}, {"b", p.b}}; }

IncidenceStructure load(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  try {
    return read_incidence(in);
  } catch (const FormatError &e) {
    throw UsageError(path + ": " + e.what());
  }
}

void save(const std::string &path, const IncidenceStructure &g) {
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write " + path);
  write_incidence(out, g);
  if (!out) throw UsageError("write failed: " + path);
}

Graph pick_graph(const IncidenceStructure &g, const std::string &which) {
  return which == "line" ? line_graph(g) : point_graph(g);
}

json srg_json(const Graph &graph) {
  const auto verdict = srg_check(graph);
  if (verdict.ok()) {
    const auto &p = *verdict.params;
    return {{"ok", true}, {"v", p.v}, {"k", p.k}, {"lambda", p.lambda}, {"mu", p.mu}};
  }
  json out{{"ok", false}, {"failure", verdict.failure}};
  if (verdict.witness)
    out["witness"] = {{"pair", {verdict.witness->first, verdict.witness->second}}, {"count", verdict.witness_count}};
  return out;
}

json pg_json(const IncidenceStructure &g) {
  const auto verdict = verify_pg(g);
  if (verdict.ok()) return {{"ok", true}, {"params", params(*verdict.params)}};
  json out{{"ok", false}, {"failure", verdict.failure}};
  if (verdict.witness)
    out["witness"] = {{"point", verdict.witness->first}, {"line", verdict.witness->second}, {"count", verdict.witness_count}};
  return out;
}

json generators_json(const std::vector<Permutation> &gens) {
  json out = json::array();
  for (const auto &p : gens) out.push_back(p.image());
  return out;
}

json orbit_sizes(const PermutationGroup &group) {
  json out = json::array();
  for (const auto &o : group.orbits()) out.push_back(o.size());
  return out;
}

std::vector<int> parse_expect(const std::string &text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(part, &used));
      if (used != part.size()) throw UsageError("");
    } catch (const std::exception &) {
      throw UsageError("--expect wants s,t,alpha");
    }
  }
  if (out.size() != 3) throw UsageError("--expect wants s,t,alpha");
  return out;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Partial geometry toolkit"};
  app.require_subcommand(1);
  bool timing = false;
  app.add_flag("--timing", timing, "Add elapsed_ms to the report");

  std::string geometry, out_path, file, file2, graph_kind = "point", expect, out_dir;
  int x = -1, y = -1, range = 81;
  bool list = false, all = false;

  auto *build = app.add_subcommand("build", "Write the incidence file of a geometry");
  build->add_option("--geometry", geometry)->required()->check(CLI::IsMember({"vls", "new"}));
  build->add_option("--out", out_path)->required();

  auto *verify = app.add_subcommand("verify", "Check pg axioms and strong regularity");
  verify->add_option("file", file)->required();
  verify->add_option("--expect", expect, "s,t,alpha");

  auto *srg = app.add_subcommand("srg", "Strongly regular parameters of the point or line graph");
  srg->add_option("file", file)->required();
  srg->add_option("--graph", graph_kind)->check(CLI::IsMember({"point", "line"}));

  auto *local = app.add_subcommand("local", "Common neighbours of a collinear pair");
  local->add_option("file", file)->required();
  local->add_option("--x", x)->required();
  local->add_option("--y", y)->required();

  auto *cliques = app.add_subcommand("cliques", "Maximal clique histogram");
  cliques->add_option("file", file)->required();
  cliques->add_option("--graph", graph_kind)->check(CLI::IsMember({"point", "line"}));
  cliques->add_flag("--list", list);

  auto *aut = app.add_subcommand("aut", "Automorphism group");
  aut->add_option("file", file)->required();
  aut->add_option("--graph", graph_kind, "incidence or point")->check(CLI::IsMember({"incidence", "point"}));

  auto *iso = app.add_subcommand("iso", "Isomorphism test");
  iso->add_option("file1", file)->required();
  iso->add_option("file2", file2)->required();

  auto *dual_cmd = app.add_subcommand("dual", "Dual structure and self-duality");
  dual_cmd->add_option("file", file)->required();
  dual_cmd->add_option("--out", out_path);

  auto *cover = app.add_subcommand("cover", "All geometries supported by the point graph");
  cover->add_option("file", file)->required();
  cover->add_flag("--list", list);

  auto *mms = app.add_subcommand("mms", "Star weightings and MMS counterexample search");
  mms->add_option("file", file)->required();
  mms->add_option("--range", range)->check(CLI::PositiveNumber);

  auto *report = app.add_subcommand("report", "Run every claim and write JSON per claim");
  report->add_flag("--all", all)->required();
  report->add_option("--out", out_dir)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return 2;
  }
  if (aut->parsed() && graph_kind == "point" && aut->count("--graph") == 0) graph_kind = "incidence";

  const auto start = std::chrono::steady_clock::now();
  json doc{{"version", kVersion}};
  json inputs = json::object();
  json results = json::object();
  int status = 0;

  try {
    if (build->parsed()) {
      doc["command"] = "build";
      inputs = {{"geometry", geometry}, {"out", out_path}};
      const auto g = geometry == "vls" ? build_vls() : build_new();
      save(out_path, g);
      results = {{"points", g.point_count()}, {"lines", g.line_count()}};
    } else if (verify->parsed()) {
      doc["command"] = "verify";
      inputs = {{"file", file}};
      const auto g = load(file);
      results["pg"] = pg_json(g);
      results["point_graph"] = srg_json(point_graph(g));
      results["line_graph"] = srg_json(line_graph(g));
      bool ok = results["pg"]["ok"] && results["point_graph"]["ok"] && results["line_graph"]["ok"];
      if (!expect.empty()) {
        const auto want = parse_expect(expect);
        inputs["expect"] = want;
        const auto verdict = verify_pg(g);
        const bool match = verdict.ok() && verdict.params->s == want[0] && verdict.params->t == want[1] &&
                           verdict.params->alpha == want[2];
        results["expect_match"] = match;
        ok = ok && match;
      }
      results["pass"] = ok;
      status = ok ? 0 : 1;
    } else if (srg->parsed()) {
      doc["command"] = "srg";
      inputs = {{"file", file}, {"graph", graph_kind}};
      results = srg_json(pick_graph(load(file), graph_kind));
      status = results["ok"] ? 0 : 1;
    } else if (local->parsed()) {
      doc["command"] = "local";
      inputs = {{"file", file}, {"x", x}, {"y", y}};
      const auto g = load(file);
      LocalConfig cfg;
      try {
        cfg = local_configuration(g, x, y);
      } catch (const std::exception &e) {
        throw UsageError(e.what());
      }
      json edges = json::array();
      for (auto [a, b] : cfg.induced_edges) edges.push_back({a, b});
      results = {{"A", cfg.A.members()}, {"B", cfg.B.members()}, {"z", cfg.z}, {"induced_edges", edges},
                 {"edge_count", cfg.induced_edges.size()}};
    } else if (cliques->parsed()) {
      doc["command"] = "cliques";
      inputs = {{"file", file}, {"graph", graph_kind}, {"list", list}};
      const auto g = load(file);
      const auto rep = max_cliques(pick_graph(g, graph_kind));
      results["histogram"] = histogram(rep.size_histogram);
      results["max_size"] = rep.max_size();
      if (graph_kind == "line") {
        const auto classes = classify_line_cliques(g, rep.of_size(g.line(0).size()));
        results["stars"] = classes.stars.size();
        results["non_stars"] = classes.non_stars.size();
      }
      if (list) {
        json all_cliques = json::array();
        for (const auto &c : rep.cliques) all_cliques.push_back(c.members());
        results["cliques"] = all_cliques;
      }
    } else if (aut->parsed()) {
      doc["command"] = "aut";
      inputs = {{"file", file}, {"graph", graph_kind}};
      const auto g = load(file);
      if (graph_kind == "incidence") {
        const auto a = aut_incidence(g);
        results = {{"order", a.points.order()},
                   {"point_orbit_sizes", orbit_sizes(a.points)},
                   {"line_orbit_sizes", orbit_sizes(a.lines)},
                   {"point_generators", generators_json(a.points.generators())},
                   {"line_generators", generators_json(a.lines.generators())}};
      } else {
        const auto group = aut_graph(point_graph(g));
        results = {{"order", group.order()},
                   {"orbit_sizes", orbit_sizes(group)},
                   {"generators", generators_json(group.generators())}};
      }
    } else if (iso->parsed()) {
      doc["command"] = "iso";
      inputs = {{"file1", file}, {"file2", file2}};
      const auto m = find_isomorphism(load(file), load(file2));
      results["isomorphic"] = m.has_value();
      if (m) results["point_map"] = m->point_map, results["line_map"] = m->line_map;
    } else if (dual_cmd->parsed()) {
      doc["command"] = "dual";
      inputs = {{"file", file}};
      const auto g = load(file);
      const auto d = dual(g);
      if (!out_path.empty()) {
        inputs["out"] = out_path;
        save(out_path, d);
      }
      results["dual_points"] = d.point_count();
      results["dual_lines"] = d.line_count();
      results["dual_pg"] = pg_json(d);
      const auto map = self_duality(g);
      results["self_dual"] = map.has_value();
      if (map) results["point_to_line"] = map->point_to_line, results["line_to_point"] = map->line_to_point;
    } else if (cover->parsed()) {
      doc["command"] = "cover";
      inputs = {{"file", file}, {"list", list}};
      const auto g = load(file);
      const auto search = all_geometries_on(point_graph(g));
      std::set<Certificate> classes;
      int valid = 0, iso_source = 0;
      json sols = json::array();
      for (std::size_t i = 0; i < search.solutions.size(); ++i) {
        const auto &s = search.solutions[i];
        classes.insert(canonical_form(incidence_graph(s)).certificate);
        valid += search.verdicts[i].ok();
        const bool same = is_isomorphic(s, g);
        iso_source += same;
        if (list) {
          json lines = json::array();
          for (const auto &l : s.lines()) lines.push_back(l.members());
          sols.push_back({{"lines", lines}, {"pg", pg_json(s)}, {"isomorphic_to_input", same}});
        }
      }
      results = {{"candidates", search.instance.cliques.size()},
                 {"edges", search.instance.universe.size()},
                 {"solutions", search.solutions.size()},
                 {"valid_partial_geometries", valid},
                 {"isomorphism_classes", classes.size()},
                 {"isomorphic_to_input", iso_source},
                 {"contains_input", std::find(search.solutions.begin(), search.solutions.end(), g) !=
                                        search.solutions.end()}};
      if (list) results["solution_list"] = sols;
    } else if (mms->parsed()) {
      doc["command"] = "mms";
      inputs = {{"file", file}, {"range", range}};
      const auto g = load(file);
      std::set<int> star_counts;
      for (int p = 0; p < g.point_count(); ++p) star_counts.insert(count_nonnegative_lines(g, star_weighting(g, p)).count);
      results["star_weighting_counts"] = star_counts;
      const auto classes = classify_line_cliques(g, max_cliques(line_graph(g)).of_size(g.line(0).size()));
      results["non_star_cliques"] = classes.non_stars.size();
      results["witness"] = nullptr;
      long tried = 0;
      bool exhausted = true;
      for (const auto &clique : classes.non_stars) {
        const auto search = mms_counterexample_search(g, clique, range);
        tried += search.weightings_tried;
        exhausted = exhausted && search.exhausted;
        if (!search.witness) continue;
        const auto &w = *search.witness;
        json cells = json::array();
        for (std::size_t i = 0; i < w.cells.size(); ++i)
          cells.push_back({{"points", w.cells[i].members()}, {"value", rational(w.cell_values[i])}});
        results["witness"] = {{"clique", clique.members()},
                              {"cells", cells},
                              {"nonnegative_lines", w.nonnegative.lines.members()},
                              {"nonnegative_count", w.nonnegative.count},
                              {"is_star", is_pencil(g, w.nonnegative.lines)},
                              {"below_star_size", w.below_star_size}};
        exhausted = false;
        break;
      }
      results["weightings_tried"] = tried;
      results["search_exhausted"] = exhausted;
    } else if (report->parsed()) {
      doc["command"] = "report";
      inputs = {{"all", all}, {"out", out_dir}};
      std::error_code ec;
      std::filesystem::create_directories(out_dir, ec);
      if (ec) throw UsageError("cannot create " + out_dir);
      const auto claims = run_all_claims();
      json summary = json::array();
      for (const auto &c : claims) {
        const json body{{"id", c.id}, {"title", c.title}, {"status", c.status}, {"details", c.details}};
        std::ofstream f(std::filesystem::path(out_dir) / (c.id + ".json"));
        if (!f) throw UsageError("cannot write into " + out_dir);
        f << body.dump(2) << '\n';
        summary.push_back({{"id", c.id}, {"title", c.title}, {"status", c.status}});
        if (!c.passed()) status = 1;
      }
      std::ofstream table(std::filesystem::path(out_dir) / "summary.txt");
      table << summary_table(claims);
      if (!table) throw UsageError("cannot write into " + out_dir);
      results = {{"claims", summary}, {"all_pass", status == 0}};
    }
  } catch (const UsageError &e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }

  doc["inputs"] = inputs;
  doc["results"] = results;
  if (timing)
    doc["elapsed_ms"] =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  std::cout << doc.dump(2) << '\n';
  return status;
}
