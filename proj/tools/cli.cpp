#include "cli.hpp"

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <unistd.h>
#include <optional>
#include <ostream>
#include <queue>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "flipcube/flipdist.hpp"
#include "flipcube/generators.hpp"
#include "flipcube/io.hpp"
#include "flipcube/quadgraph.hpp"

namespace flipcube::cli {

namespace {

using nlohmann::json;
namespace fs = std::filesystem;

std::uint64_t fnv1a(std::uint64_t h, const std::string& s) {
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

// Cache of emitted JSON keyed by command + input contents; entries must
// parse back as schema-1 documents or they are recomputed.
struct Cache {
  std::string dir;
  std::string key;

  static Cache make(bool enabled, const std::vector<std::string>& parts) {
    Cache c;
    if (!enabled) return c;
    if (const char* env = std::getenv("FLIPCUBE_CACHE")) {
      c.dir = env;
    } else if (const char* home = std::getenv("HOME")) {
      c.dir = std::string(home) + "/.cache/flipcube";
    } else {
      return c;
    }
    std::uint64_t h = 14695981039346656037ull;
    for (const auto& p : parts) {
      h = fnv1a(h, p);
      h = fnv1a(h, std::string(1, '\0'));
    }
    c.key = hex64(h);
    return c;
  }

  std::string path() const { return dir + "/" + key + ".json"; }

  std::optional<std::string> load() const {
    if (dir.empty()) return std::nullopt;
    std::error_code ec;
    if (!fs::exists(path(), ec)) return std::nullopt;
    try {
      std::string bytes = read_file(path());
      json doc = json::parse(bytes);
      if (!doc.contains("schema") || doc["schema"] != 1) return std::nullopt;
      return bytes;
    } catch (...) {
      return std::nullopt;  // corrupted entry: recompute and overwrite
    }
  }

  void store(const std::string& bytes) const {
    if (dir.empty()) return;
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) return;
    std::string tmp = path() + ".tmp" + std::to_string(::getpid());
    try {
      write_file(tmp, bytes);
      fs::rename(tmp, path(), ec);
      if (ec) fs::remove(tmp, ec);
    } catch (...) {
    }
  }
};

std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

std::string diagonal_name(const Edge& e) {
  return "d_" + std::to_string(e.a) + "_" + std::to_string(e.b);
}

std::string triangulation_name(const std::vector<Edge>& edges) {
  std::ostringstream ss;
  for (const Edge& e : edges) ss << e.a << ',' << e.b << ';';
  return "t_" + hex64(fnv1a(14695981039346656037ull, ss.str())).substr(0, 8);
}

std::string qg_dot(const QuadGraph& qg) {
  std::ostringstream ss;
  bool oriented = qg.orientation.has_value();
  ss << (oriented ? "digraph" : "graph") << " quadgraph {\n";
  for (const Edge& d : qg.vertices) ss << "  " << diagonal_name(d) << ";\n";
  for (size_t i = 0; i < qg.edges.size(); ++i) {
    auto [u, v] = qg.edges[i];
    if (oriented && (*qg.orientation)[i] == 1) std::swap(u, v);
    ss << "  " << diagonal_name(qg.vertices[u])
       << (oriented ? " -> " : " -- ") << diagonal_name(qg.vertices[v])
       << ";\n";
  }
  ss << "}\n";
  return ss.str();
}

std::string fg_dot(const FlipGraph& g) {
  std::ostringstream ss;
  ss << "graph flipgraph {\n";
  for (const auto& edges : g.vertices)
    ss << "  " << triangulation_name(edges) << ";\n";
  for (const auto& [u, v] : g.adjacency)
    ss << "  " << triangulation_name(g.vertices[u]) << " -- "
       << triangulation_name(g.vertices[v]) << ";\n";
  ss << "}\n";
  return ss.str();
}

bool bipartite(int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<std::vector<int>> adj(n);
  for (const auto& [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::vector<int> color(n, -1);
  for (int s = 0; s < n; ++s) {
    if (color[s] >= 0) continue;
    color[s] = 0;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int v : adj[u]) {
        if (color[v] < 0) {
          color[v] = color[u] ^ 1;
          q.push(v);
        } else if (color[v] == color[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

int exit_code_for(Errc code) {
  switch (code) {
    case Errc::BudgetExceeded:
      return kExitBudget;
    case Errc::Internal:
    case Errc::Disconnected:
      return 1;
    default:
      return kExitInput;
  }
}

struct Options {
  // generate
  std::string family;
  std::vector<long long> params;
  std::uint64_t seed = 0;
  std::string out_path;
  // shared
  std::string points_path;
  std::string dot_path;
  bool no_cache = false;
  bool general = false;
  bool no_orient = false;
  long long budget = 200000;
  // flipdist
  std::string tri1_path, tri2_path;
  std::string method = "exact";
};

json run_generate(const Options& opt, std::ostream&) {
  FamilySpec spec;
  spec.family = family_from_name(opt.family);
  spec.params = opt.params;
  spec.seed = opt.seed;
  PointSet ps = generate(spec);
  write_file(opt.out_path, format_points(ps));
  json doc;
  doc["schema"] = 1;
  doc["command"] = "generate";
  doc["family"] = family_name(spec.family);
  doc["params"] = spec.params;
  doc["n"] = ps.size();
  if (spec.family == Family::RandomGeneralPosition) doc["seed"] = spec.seed;
  return doc;
}

json run_pentagon(const PointSet& ps) {
  json doc;
  doc["schema"] = 1;
  doc["command"] = "pentagon";
  if (auto w = find_empty_pentagon(ps)) {
    doc["empty_pentagon"] = std::vector<int>(w->ids.begin(), w->ids.end());
  } else {
    doc["empty_pentagon"] = nullptr;
  }
  return doc;
}

json run_quadgraph(const Options& opt, const PointSet& ps,
                   std::string* dot_out) {
  bool pentagon_free = !find_empty_pentagon(ps).has_value();
  bool use_general = opt.general || !pentagon_free;
  QuadGraph qg = use_general
                     ? build_qg_general(ps, !opt.no_orient)
                     : build_qg_pentagon_free(ps, !opt.no_orient);
  int comps = 0;
  qg.component_ids(&comps);
  json doc;
  doc["schema"] = 1;
  doc["command"] = "quadgraph";
  doc["builder"] = use_general ? "general" : "fast";
  doc["pentagon_free"] = pentagon_free;
  doc["vertices"] = qg.vertices.size();
  doc["edges"] = qg.edges.size();
  doc["components"] = comps;
  doc["forest"] = qg.edges.size() == qg.vertices.size() - size_t(comps);
  if (qg.roots) {
    json roots = json::array();
    for (int r : *qg.roots)
      roots.push_back({qg.vertices[r].a, qg.vertices[r].b});
    doc["roots"] = roots;
  } else {
    doc["roots"] = nullptr;
  }
  if (dot_out) *dot_out = qg_dot(qg);
  return doc;
}

json run_triangulate(const Options& opt, const PointSet& ps) {
  Triangulation dt = delaunay(ps);
  if (!opt.out_path.empty()) write_file(opt.out_path, format_edges(dt.edges()));
  json doc;
  doc["schema"] = 1;
  doc["command"] = "triangulate";
  doc["n"] = ps.size();
  json edges = json::array();
  for (const Edge& e : dt.edges()) edges.push_back({e.a, e.b});
  doc["edges"] = edges;
  doc["faces"] = dt.faces().size();
  return doc;
}

json run_flipgraph(const Options& opt, const PointSet& ps,
                   std::string* dot_out) {
  FlipGraph g = enumerate_flip_graph(ps, opt.budget);
  json doc;
  doc["schema"] = 1;
  doc["command"] = "flipgraph";
  doc["vertices"] = g.vertices.size();
  doc["edges"] = g.adjacency.size();
  doc["bipartite"] =
      bipartite(static_cast<int>(g.vertices.size()), g.adjacency);
  if (g.vertices.size() <= 4096) {
    doc["partial_cube"] = is_partial_cube(g);
  } else {
    doc["partial_cube"] = nullptr;
  }
  if (dot_out) *dot_out = fg_dot(g);
  return doc;
}

json run_flipdist(const Options& opt, const PointSet& ps) {
  Triangulation t1(ps, load_edges(opt.tri1_path));
  Triangulation t2(ps, load_edges(opt.tri2_path));
  json doc;
  doc["schema"] = 1;
  doc["command"] = "flipdist";
  doc["method"] = opt.method;
  if (opt.method == "exact") {
    doc["distance"] = flip_distance_pentagon_free(t1, t2);
  } else if (opt.method == "cube") {
    CubeLabeler labeler(ps);
    doc["distance"] = hamming(labeler.label(t1), labeler.label(t2));
  } else if (opt.method == "matching") {
    QuadGraph qg = build_qg_general(ps, false);
    doc["lower_bound"] = matching_lower_bound(t1, t2, qg);
  } else if (opt.method == "astar") {
    doc["distance"] = astar_flip_distance(t1, t2, opt.budget);
  } else if (opt.method == "oracle") {
    doc["distance"] = flip_distance_exact_oracle(t1, t2, opt.budget);
  } else {
    throw CLI::ValidationError("--method",
                               "unknown method '" + opt.method + "'");
  }
  return doc;
}

json run_stats(const Options& opt, const PointSet& ps) {
  bool pentagon_free = !find_empty_pentagon(ps).has_value();
  QuadGraph qg = (pentagon_free && !opt.general)
                     ? build_qg_pentagon_free(ps, false)
                     : build_qg_general(ps, false);
  int comps = 0;
  qg.component_ids(&comps);
  json doc;
  doc["schema"] = 1;
  doc["command"] = "stats";
  doc["n"] = ps.size();
  doc["diagonals"] = qg.vertices.size();
  doc["empty_quadrilaterals"] = qg.edges.size();
  doc["pentagon_free"] = pentagon_free;
  doc["qg_components"] = comps;
  return doc;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
  Options opt;
  CLI::App app{"empty pentagons, quadrilateral graphs, and flip distances"};
  app.require_subcommand(1);

  auto* generate_cmd =
      app.add_subcommand("generate", "emit a point-set family");
  generate_cmd->add_option("family", opt.family, "family name")->required();
  generate_cmd->add_option("params", opt.params, "integer parameters");
  generate_cmd->add_option("--seed", opt.seed, "seed for the random family");
  generate_cmd->add_option("-o,--output", opt.out_path, "points file")
      ->required();

  auto add_points_cmd = [&](const char* name, const char* desc) {
    auto* cmd = app.add_subcommand(name, desc);
    cmd->add_option("points", opt.points_path, "point-set file")->required();
    cmd->add_flag("--no-cache", opt.no_cache, "bypass the result cache");
    return cmd;
  };

  auto* pentagon_cmd =
      add_points_cmd("pentagon", "find an empty convex pentagon");
  auto* quadgraph_cmd =
      add_points_cmd("quadgraph", "build the quadrilateral graph");
  quadgraph_cmd->add_option("--dot", opt.dot_path, "write graph as DOT");
  quadgraph_cmd->add_flag("--general", opt.general,
                          "force the brute-force builder");
  quadgraph_cmd->add_flag("--no-orient", opt.no_orient,
                          "skip Delaunay orientation of the forest");
  auto* triangulate_cmd =
      add_points_cmd("triangulate", "Delaunay triangulation");
  triangulate_cmd->add_option("-o,--output", opt.out_path,
                              "triangulation file");
  auto* flipgraph_cmd =
      add_points_cmd("flipgraph", "enumerate the flip graph");
  flipgraph_cmd->add_option("--dot", opt.dot_path, "write graph as DOT");
  flipgraph_cmd->add_option("--budget", opt.budget, "vertex budget");
  auto* flipdist_cmd =
      add_points_cmd("flipdist", "flip distance between triangulations");
  flipdist_cmd->add_option("tri1", opt.tri1_path, "first triangulation")
      ->required();
  flipdist_cmd->add_option("tri2", opt.tri2_path, "second triangulation")
      ->required();
  flipdist_cmd->add_option("--method", opt.method,
                           "exact|cube|matching|astar|oracle");
  flipdist_cmd->add_option("--budget", opt.budget,
                           "search budget for oracle/astar");
  auto* stats_cmd = add_points_cmd("stats", "point-set summary");
  stats_cmd->add_flag("--general", opt.general,
                      "force the brute-force QG builder");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    json edoc;
    edoc["schema"] = 1;
    edoc["error"] = {{"code", "Usage"}, {"message", e.what()}};
    err << dump(edoc);
    return kExitUsage;
  }

  try {
    if (generate_cmd->parsed()) {
      out << dump(run_generate(opt, err));
      return 0;
    }

    std::string points_bytes = read_file(opt.points_path);
    std::istringstream points_in(points_bytes);
    PointSet ps = parse_points(points_in);

    std::string command;
    std::vector<std::string> key_parts;
    bool cacheable = false;
    if (pentagon_cmd->parsed()) {
      command = "pentagon";
      cacheable = true;
      key_parts = {command, points_bytes};
    } else if (quadgraph_cmd->parsed()) {
      command = "quadgraph";
      cacheable = opt.dot_path.empty();
      key_parts = {command, opt.general ? "g" : "", opt.no_orient ? "n" : "",
                   points_bytes};
    } else if (triangulate_cmd->parsed()) {
      command = "triangulate";
    } else if (flipgraph_cmd->parsed()) {
      command = "flipgraph";
      cacheable = opt.dot_path.empty();
      key_parts = {command, std::to_string(opt.budget), points_bytes};
    } else if (flipdist_cmd->parsed()) {
      command = "flipdist";
      cacheable = true;
      key_parts = {command, opt.method, std::to_string(opt.budget),
                   points_bytes, read_file(opt.tri1_path),
                   read_file(opt.tri2_path)};
    } else if (stats_cmd->parsed()) {
      command = "stats";
      cacheable = true;
      key_parts = {command, opt.general ? "g" : "", points_bytes};
    }

    Cache cache = Cache::make(cacheable && !opt.no_cache, key_parts);
    if (auto hit = cache.load()) {
      out << *hit;
      return 0;
    }

    json doc;
    std::string dot;
    std::string* dot_out = opt.dot_path.empty() ? nullptr : &dot;
    if (command == "pentagon") {
      doc = run_pentagon(ps);
    } else if (command == "quadgraph") {
      doc = run_quadgraph(opt, ps, dot_out);
    } else if (command == "triangulate") {
      doc = run_triangulate(opt, ps);
    } else if (command == "flipgraph") {
      doc = run_flipgraph(opt, ps, dot_out);
    } else if (command == "flipdist") {
      doc = run_flipdist(opt, ps);
    } else {
      doc = run_stats(opt, ps);
    }
    if (dot_out) write_file(opt.dot_path, dot);
    std::string bytes = dump(doc);
    cache.store(bytes);
    out << bytes;
    return 0;
  } catch (const CLI::ValidationError& e) {
    json edoc;
    edoc["schema"] = 1;
    edoc["error"] = {{"code", "Usage"}, {"message", e.what()}};
    err << dump(edoc);
    return kExitUsage;
  } catch (const Error& e) {
    json edoc;
    edoc["schema"] = 1;
    edoc["error"] = {{"code", errc_name(e.code())}, {"message", e.what()}};
    err << dump(edoc);
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    json edoc;
    edoc["schema"] = 1;
    edoc["error"] = {{"code", "Unknown"}, {"message", e.what()}};
    err << dump(edoc);
    return 1;
  }
}

}  // namespace flipcube::cli
