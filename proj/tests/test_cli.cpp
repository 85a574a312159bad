#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cli.hpp"
#include "flipcube/generators.hpp"
#include "flipcube/io.hpp"
#include "flipcube/triangulation.hpp"
#include "oracles.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace flipcube;

namespace {

struct RunResult {
  int code;
  std::string out;
  std::string err;

  json doc() const { return json::parse(out); }
  json err_doc() const { return json::parse(err); }
};

RunResult run_cli(const std::vector<std::string>& args) {
  std::vector<const char*> argv = {"flipcube"};
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

// Fresh scratch directory per binary run; the result cache is pointed here
// so tests never touch the real user cache.
struct Scratch {
  fs::path dir;

  Scratch() {
    dir = fs::temp_directory_path() /
          ("flipcube-test-" + std::to_string(::getpid()));
    fs::create_directories(dir);
    cache = dir / "cache";
    setenv("FLIPCUBE_CACHE", cache.c_str(), 1);
  }
  ~Scratch() { fs::remove_all(dir); }

  std::string file(const std::string& name) const { return (dir / name).string(); }
  fs::path cache;
};

Scratch& scratch() {
  static Scratch s;
  return s;
}

std::string write_grid_points() {
  std::string path = scratch().file("grid.pts");
  write_file(path, format_points(lattice(3, 3)));
  return path;
}

std::string write_hex_points() {
  std::string path = scratch().file("hex.pts");
  write_file(path, format_points(convex_ngon(6)));
  return path;
}

}  // namespace

TEST_CASE("generate writes a points file and a summary") {
  std::string out = scratch().file("gen.pts");
  RunResult r = run_cli({"generate", "lattice", "3", "3", "-o", out});
  REQUIRE(r.code == 0);
  json doc = r.doc();
  CHECK(doc["schema"] == 1);
  CHECK(doc["family"] == "lattice");
  CHECK(doc["n"] == 9);
  CHECK(load_points(out) == lattice(3, 3));
}

TEST_CASE("pentagon reports a witness or null") {
  SUBCASE("pentagon-free grid") {
    RunResult r = run_cli({"pentagon", write_grid_points(), "--no-cache"});
    REQUIRE(r.code == 0);
    CHECK(r.doc()["empty_pentagon"].is_null());
  }
  SUBCASE("hexagon witness") {
    RunResult r = run_cli({"pentagon", write_hex_points(), "--no-cache"});
    REQUIRE(r.code == 0);
    json w = r.doc()["empty_pentagon"];
    REQUIRE(w.is_array());
    REQUIRE(w.size() == 5);
    int ids[5];
    for (int i = 0; i < 5; ++i) ids[i] = w[i];
    CHECK(is_empty_kgon(convex_ngon(6), ids));
  }
}

TEST_CASE("quadgraph summary on the grid") {
  RunResult r = run_cli({"quadgraph", write_grid_points(), "--no-cache"});
  REQUIRE(r.code == 0);
  json doc = r.doc();
  CHECK(doc["builder"] == "fast");
  CHECK(doc["pentagon_free"] == true);
  CHECK(doc["vertices"] == 28);
  CHECK(doc["edges"] == 12);
  CHECK(doc["components"] == 16);
  CHECK(doc["forest"] == true);
  REQUIRE(doc["roots"].is_array());
  CHECK(doc["roots"].size() == 16);
  SUBCASE("--general gives the same numbers via the brute builder") {
    RunResult g =
        run_cli({"quadgraph", write_grid_points(), "--general", "--no-cache"});
    REQUIRE(g.code == 0);
    json gd = g.doc();
    CHECK(gd["builder"] == "general");
    CHECK(gd["vertices"] == doc["vertices"]);
    CHECK(gd["edges"] == doc["edges"]);
    CHECK(gd["roots"] == doc["roots"]);
  }
  SUBCASE("--no-orient drops roots") {
    RunResult n = run_cli(
        {"quadgraph", write_grid_points(), "--no-orient", "--no-cache"});
    REQUIRE(n.code == 0);
    CHECK(n.doc()["roots"].is_null());
  }
}

TEST_CASE("quadgraph falls back to the general builder on the hexagon") {
  RunResult r = run_cli({"quadgraph", write_hex_points(), "--no-cache"});
  REQUIRE(r.code == 0);
  json doc = r.doc();
  CHECK(doc["builder"] == "general");
  CHECK(doc["pentagon_free"] == false);
  CHECK(doc["vertices"] == 15);
  CHECK(doc["forest"] == false);
  CHECK(doc["roots"].is_null());
}

TEST_CASE("quadgraph --dot emits a digraph with diagonal names") {
  std::string dot = scratch().file("qg.dot");
  RunResult r =
      run_cli({"quadgraph", write_grid_points(), "--dot", dot, "--no-cache"});
  REQUIRE(r.code == 0);
  std::string text = read_file(dot);
  CHECK(text.find("digraph quadgraph {") == 0);
  CHECK(text.find("d_0_4") != std::string::npos);
  CHECK(text.find(" -> ") != std::string::npos);
  SUBCASE("--no-orient writes an undirected graph") {
    RunResult u = run_cli({"quadgraph", write_grid_points(), "--dot", dot,
                           "--no-orient", "--no-cache"});
    REQUIRE(u.code == 0);
    std::string undirected = read_file(dot);
    CHECK(undirected.find("graph quadgraph {") == 0);
    CHECK(undirected.find(" -- ") != std::string::npos);
  }
}

TEST_CASE("triangulate output re-validates as a triangulation") {
  std::string tri = scratch().file("grid.tri");
  RunResult r = run_cli({"triangulate", write_grid_points(), "-o", tri});
  REQUIRE(r.code == 0);
  json doc = r.doc();
  CHECK(doc["edges"].size() == 16);
  CHECK(doc["faces"] == 8);
  PointSet g = lattice(3, 3);
  Triangulation t(g, load_edges(tri));
  CHECK(t == delaunay(g));
}

TEST_CASE("flipgraph summary") {
  RunResult r = run_cli({"flipgraph", write_grid_points(), "--no-cache"});
  REQUIRE(r.code == 0);
  json doc = r.doc();
  CHECK(doc["vertices"] == 64);
  CHECK(doc["edges"] == 132);
  CHECK(doc["partial_cube"] == true);
  SUBCASE("pentagon makes it a non-partial-cube") {
    RunResult h = run_cli({"flipgraph", write_hex_points(), "--no-cache"});
    REQUIRE(h.code == 0);
    CHECK(h.doc()["vertices"] == 14);
    CHECK(h.doc()["partial_cube"] == false);
  }
  SUBCASE("budget overrun exits 4") {
    RunResult b = run_cli(
        {"flipgraph", write_grid_points(), "--budget", "5", "--no-cache"});
    CHECK(b.code == cli::kExitBudget);
    CHECK(b.err_doc()["error"]["code"] == "BudgetExceeded");
  }
  SUBCASE("--dot names triangulations by hash") {
    std::string dot = scratch().file("fg.dot");
    RunResult d =
        run_cli({"flipgraph", write_hex_points(), "--dot", dot, "--no-cache"});
    REQUIRE(d.code == 0);
    std::string text = read_file(dot);
    CHECK(text.find("graph flipgraph {") == 0);
    CHECK(text.find("t_") != std::string::npos);
  }
}

TEST_CASE("flipdist methods") {
  std::string hex = write_hex_points();
  std::string t1 = scratch().file("hex1.tri");
  std::string t2 = scratch().file("hex2.tri");
  write_file(t1, format_edges(oracles::hexagon_t1()));
  write_file(t2, format_edges(oracles::hexagon_t2()));
  SUBCASE("oracle and astar report 4") {
    for (const char* m : {"oracle", "astar"}) {
      CAPTURE(m);
      RunResult r =
          run_cli({"flipdist", hex, t1, t2, "--method", m, "--no-cache"});
      REQUIRE(r.code == 0);
      CHECK(r.doc()["distance"] == 4);
    }
  }
  SUBCASE("matching reports the lower bound 3") {
    RunResult r = run_cli(
        {"flipdist", hex, t1, t2, "--method", "matching", "--no-cache"});
    REQUIRE(r.code == 0);
    CHECK(r.doc()["lower_bound"] == 3);
    CHECK_FALSE(r.doc().contains("distance"));
  }
  SUBCASE("exact and cube reject the hexagon") {
    for (const char* m : {"exact", "cube"}) {
      CAPTURE(m);
      RunResult r =
          run_cli({"flipdist", hex, t1, t2, "--method", m, "--no-cache"});
      CHECK(r.code == cli::kExitInput);
      CHECK(r.err_doc()["error"]["code"] == "PentagonExists");
    }
  }
  SUBCASE("exact and cube agree on a pentagon-free set") {
    std::string grid = write_grid_points();
    std::string g1 = scratch().file("grid1.tri");
    std::string g2 = scratch().file("grid2.tri");
    PointSet g = lattice(3, 3);
    Triangulation dt = delaunay(g);
    Triangulation other = apply_flip(dt, flippable_edges(dt)[0]);
    write_file(g1, format_edges(dt.edges()));
    write_file(g2, format_edges(other.edges()));
    for (const char* m : {"exact", "cube", "oracle", "astar"}) {
      CAPTURE(m);
      RunResult r =
          run_cli({"flipdist", grid, g1, g2, "--method", m, "--no-cache"});
      REQUIRE(r.code == 0);
      CHECK(r.doc()["distance"] == 1);
    }
  }
  SUBCASE("unknown method is a usage error") {
    RunResult r =
        run_cli({"flipdist", hex, t1, t2, "--method", "nope", "--no-cache"});
    CHECK(r.code == cli::kExitUsage);
  }
}

TEST_CASE("stats summary") {
  RunResult r = run_cli({"stats", write_grid_points(), "--no-cache"});
  REQUIRE(r.code == 0);
  json doc = r.doc();
  CHECK(doc["n"] == 9);
  CHECK(doc["diagonals"] == 28);
  CHECK(doc["empty_quadrilaterals"] == 12);
  CHECK(doc["pentagon_free"] == true);
  CHECK(doc["qg_components"] == 16);
}

TEST_CASE("exit codes") {
  SUBCASE("missing subcommand is usage") {
    RunResult r = run_cli({});
    CHECK(r.code == cli::kExitUsage);
    CHECK(r.err_doc()["error"]["code"] == "Usage");
  }
  SUBCASE("unknown flag is usage") {
    RunResult r = run_cli({"stats", "--bogus", "x"});
    CHECK(r.code == cli::kExitUsage);
  }
  SUBCASE("missing input file is an input error") {
    RunResult r = run_cli({"stats", scratch().file("absent.pts")});
    CHECK(r.code == cli::kExitInput);
    CHECK(r.err_doc()["error"]["code"] == "Io");
  }
  SUBCASE("malformed points are an input error") {
    std::string bad = scratch().file("bad.pts");
    write_file(bad, "1 2\nnot numbers\n");
    RunResult r = run_cli({"stats", bad, "--no-cache"});
    CHECK(r.code == cli::kExitInput);
  }
  SUBCASE("help exits zero") {
    RunResult r = run_cli({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("generate") != std::string::npos);
  }
}

TEST_CASE("output is byte-deterministic") {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"stats", write_grid_points(), "--no-cache"},
        std::vector<std::string>{"quadgraph", write_grid_points(),
                                 "--no-cache"},
        std::vector<std::string>{"pentagon", write_hex_points(),
                                 "--no-cache"}}) {
    RunResult a = run_cli(args);
    RunResult b = run_cli(args);
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("result cache") {
  fs::remove_all(scratch().cache);
  std::string grid = write_grid_points();
  SUBCASE("second run is served the identical bytes") {
    RunResult miss = run_cli({"stats", grid});
    REQUIRE(miss.code == 0);
    REQUIRE(fs::exists(scratch().cache));
    size_t entries = std::distance(fs::directory_iterator(scratch().cache),
                                   fs::directory_iterator());
    CHECK(entries == 1);
    RunResult hit = run_cli({"stats", grid});
    CHECK(hit.out == miss.out);
    entries = std::distance(fs::directory_iterator(scratch().cache),
                            fs::directory_iterator());
    CHECK(entries == 1);
  }
  SUBCASE("different inputs use different keys") {
    run_cli({"stats", grid});
    run_cli({"stats", write_hex_points()});
    size_t entries = std::distance(fs::directory_iterator(scratch().cache),
                                   fs::directory_iterator());
    CHECK(entries == 2);
  }
  SUBCASE("a corrupted entry is recomputed and overwritten") {
    RunResult first = run_cli({"pentagon", grid});
    REQUIRE(first.code == 0);
    fs::path entry;
    for (const auto& f : fs::directory_iterator(scratch().cache))
      entry = f.path();
    write_file(entry.string(), "{ truncated");
    RunResult again = run_cli({"pentagon", grid});
    REQUIRE(again.code == 0);
    CHECK(again.out == first.out);
    CHECK(read_file(entry.string()) == first.out);
  }
  SUBCASE("--no-cache writes nothing") {
    fs::remove_all(scratch().cache);
    run_cli({"stats", grid, "--no-cache"});
    CHECK_FALSE(fs::exists(scratch().cache));
  }
}
