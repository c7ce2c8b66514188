#include <catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "girthforge/cli.hpp"
#include "girthforge/edge_list.hpp"
#include "girthforge/generators.hpp"

using namespace girthforge;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("girthforge_test_" + name)).string();
}

std::string write_graph(const std::string& name, const Graph& g) {
  const auto path = temp_path(name);
  std::ofstream(path) << to_edge_list(g);
  return path;
}

}  // namespace

TEST_CASE("verify reports free and violations") {
  const auto c5 = write_graph("c5.edges", cycle(5));
  auto ok = run({"verify", "--family", "even:4", "--in", c5});
  CHECK(ok.code == 0);
  CHECK(nlohmann::json::parse(ok.out)["status"] == "free");
  auto bad = run({"verify", "--family", "all:5", "--in", c5});
  CHECK(bad.code == 2);
  auto j = nlohmann::json::parse(bad.out);
  CHECK(j["status"] == "violation");
  CHECK(j["witness"].size() == 5);
}

TEST_CASE("extract edges on K7") {
  const auto k7 = write_graph("k7.edges", complete(7));
  auto res = run({"extract", "edges", "--r", "2", "--trials", "16", "--seed", "7", "--in", k7});
  REQUIRE(res.code == 0);
  auto j = nlohmann::json::parse(res.out);
  CHECK(j["output"]["edges"].get<int>() >= 6);
  CHECK(j["certificate"]["status"] == "pass");
  CHECK(j["certificate"]["family"] == "even:4");
  CHECK(j["schema_version"] == 1);
  CHECK(j["timing_ms"].is_null());
  auto odd = run({"extract", "edges", "--r", "2", "--odd-free", "--seed", "7", "--in", k7});
  CHECK(nlohmann::json::parse(odd.out)["certificate"]["family"] == "all:5");
}

TEST_CASE("extract writes the subgraph when asked") {
  const auto out = temp_path("k6_out.edges");
  auto res = run({"extract", "edges", "--gen", "complete:6", "--seed", "1", "--out", out});
  REQUIRE(res.code == 0);
  const Graph g = read_edge_list_file(out);
  CHECK(g.order() == 6);
  CHECK(g.size() == nlohmann::json::parse(res.out)["output"]["edges"].get<std::size_t>());
}

TEST_CASE("extract degree reports host fields and the degraded exit code") {
  auto res = run({"extract", "degree", "--gen", "complete:7", "--r", "2", "--trials", "2", "--seed", "3",
                  "--max-rounds", "20"});
  auto j = nlohmann::json::parse(res.out);
  CHECK(j.contains("host"));
  CHECK(j.contains("t"));
  CHECK(j.contains("rounds_used"));
  CHECK(j["certificate"]["status"] == "pass");
  CHECK(res.code == (j["degraded"].get<bool>() ? 3 : 0));
  auto c7 = run({"extract", "degree", "--gen", "cycle:7", "--r", "2", "--seed", "3"});
  CHECK(nlohmann::json::parse(c7.out)["output"]["edges"] == 7);
}

TEST_CASE("usage errors exit 1") {
  CHECK(run({}).code == 1);
  CHECK(run({"frobnicate"}).code == 1);
  CHECK(run({"extract", "edges"}).code == 1);
  CHECK(run({"extract", "edges", "--in", temp_path("missing.edges")}).code == 1);
  CHECK(run({"extract", "edges", "--gen", "complete:5", "--r", "1"}).code == 1);
  CHECK(run({"verify", "--family", "even:5", "--gen", "cycle:5"}).code == 1);
  CHECK(run({"host", "build", "--kind", "polarity", "--q", "4"}).code == 1);
  CHECK(run({"sweep", "--n", "20"}).code == 1);
  CHECK(run({"sweep", "--mode", "x", "--n", "1,2,3,4"}).code == 1);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("malformed edge lists are reported with their line") {
  const auto path = temp_path("bad.edges");
  std::ofstream(path) << "0 1\n1 2\n2 2\n";
  auto res = run({"verify", "--family", "even:4", "--in", path});
  CHECK(res.code == 1);
  CHECK(res.err.find("line 3") != std::string::npos);
}

TEST_CASE("host build writes the edge list and metadata") {
  const auto path = temp_path("pol3.edges");
  auto res = run({"host", "build", "--kind", "polarity", "--q", "3", "--out", path});
  REQUIRE(res.code == 0);
  auto j = nlohmann::json::parse(res.out);
  CHECK(j["vertices"] == 13);
  CHECK(j["edges"] == 24);
  CHECK(read_edge_list_file(path).size() == 24);
  std::ifstream meta(path + ".meta");
  std::stringstream text;
  text << meta.rdbuf();
  CHECK(text.str().find("certified_family: even:4") != std::string::npos);
  auto inc = run({"host", "build", "--kind", "incidence", "--q", "2"});
  CHECK(nlohmann::json::parse(inc.out)["girth"] == 6);
  auto greedy = run({"host", "build", "--kind", "greedy", "--n", "30", "--girth", "6", "--seed", "2"});
  CHECK(nlohmann::json::parse(greedy.out)["certified_family"] == "all:5");
}

TEST_CASE("oracle subcommands") {
  auto ex = run({"oracle", "--kind", "ex", "--gen", "complete_bipartite:3:3"});
  REQUIRE(ex.code == 0);
  CHECK(nlohmann::json::parse(ex.out)["value"] == 6);
  auto ch = run({"oracle", "--kind", "cherry", "--gen", "complete_bipartite:2:2", "--part-a", "2"});
  CHECK(nlohmann::json::parse(ch.out)["status"] == "violation");
  CHECK(run({"oracle", "--kind", "cherry", "--gen", "complete_bipartite:2:2"}).code == 1);
  CHECK(run({"oracle", "--kind", "ex", "--gen", "complete:9"}).code == 1);
}

TEST_CASE("sweep emits a versioned CSV with one row per point") {
  auto res = run({"sweep", "--mode", "f", "--r", "2", "--family-input", "complete", "--n", "20:50:10", "--trials", "4",
                  "--seed", "1"});
  REQUIRE(res.code == 0);
  std::istringstream lines(res.out);
  std::vector<std::string> rows;
  for (std::string line; std::getline(lines, line);) rows.push_back(line);
  REQUIRE(rows.size() == 7);
  CHECK(rows[0].rfind("# girthforge-sweep v1 mode=f", 0) == 0);
  CHECK(rows[1] == "point,variable,method,r,trials,best_edges,best_min_degree,certificate,wall_ms");
  CHECK(rows[2].rfind("20,190,", 0) == 0);
  CHECK(rows[2].back() == ',');
  CHECK(rows[6].find("slope=") != std::string::npos);
  CHECK(run({"sweep", "--mode", "f", "--n", "20"}).code == 1);
}

TEST_CASE("seed falls back to the environment and output is byte-identical") {
  const std::vector<std::string> cmd{"extract", "edges", "--gen", "random_gnm:40:120:3", "--r", "3", "--trials", "4"};
  ::setenv("GIRTHFORGE_SEED", "17", 1);
  auto a = run(cmd);
  ::unsetenv("GIRTHFORGE_SEED");
  auto with_flag = cmd;
  with_flag.insert(with_flag.end(), {"--seed", "17"});
  auto b = run(with_flag);
  CHECK(a.out == b.out);
  CHECK(nlohmann::json::parse(a.out)["seed"] == 17);
  CHECK(run(with_flag).out == b.out);
  ::setenv("GIRTHFORGE_SEED", "abc", 1);
  CHECK(run(cmd).code == 1);
  ::unsetenv("GIRTHFORGE_SEED");
}
