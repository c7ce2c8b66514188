#pragma once

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "girthforge/cycles.hpp"
#include "girthforge/degree_extract.hpp"
#include "girthforge/edge_extract.hpp"
#include "girthforge/edge_list.hpp"
#include "girthforge/generators.hpp"
#include "girthforge/hosts.hpp"
#include "girthforge/oracle.hpp"
#include "girthforge/report.hpp"
#include "girthforge/sweep.hpp"

namespace girthforge::cli {

enum Exit : int { ok = 0, usage = 1, certificate_failure = 2, degraded = 3 };

namespace detail {

struct Options {
  std::string in;
  std::string gen;
  std::string out;
  std::size_t r{2};
  std::size_t trials{16};
  std::optional<std::uint64_t> seed;
  std::string family;
  bool odd_free{false};
  std::size_t max_rounds{1000};
  bool timing{false};

  std::string kind;
  std::uint64_t q{0};
  std::size_t n{0};
  std::size_t girth{5};
  std::size_t part_a{0};
  bool part_a_set{false};

  std::string mode{"f"};
  std::string family_input{"complete"};
  std::string points;
  std::size_t clique_degree{4};
  std::size_t avg_degree{6};
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline std::uint64_t resolve_seed(const Options& o) {
  if (o.seed) return *o.seed;
  if (const char* env = std::getenv("GIRTHFORGE_SEED"); env && *env) {
    try {
      std::size_t used = 0;
      const auto v = std::stoull(env, &used);
      if (used == std::string(env).size()) return v;
    } catch (const std::exception&) {
    }
    throw UsageError(std::string("GIRTHFORGE_SEED is not an integer: '") + env + "'");
  }
  return 0;
}

inline Graph load_input(const Options& o) {
  if (!o.in.empty() && !o.gen.empty()) throw UsageError("use either --in or --gen, not both");
  if (!o.gen.empty()) return generate(o.gen);
  if (o.in.empty()) throw UsageError("--in PATH is required");
  std::ifstream in(o.in);
  if (!in) throw UsageError("cannot read " + o.in);
  return read_edge_list(in);
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot write " + path);
  f << text;
}

inline nlohmann::ordered_json witness_json(const CycleWitness& w) {
  auto j = nlohmann::ordered_json::array();
  for (Vertex v : w.vertices) j.push_back(v);
  return j;
}

inline void print(std::ostream& out, const nlohmann::ordered_json& j) { out << j.dump(2) << '\n'; }

inline int host_build(const Options& o, std::ostream& out) {
  HostGraph host;
  if (o.kind == "polarity") {
    host = polarity_graph(o.q);
  } else if (o.kind == "incidence") {
    host = incidence_graph_pg2(o.q);
  } else if (o.kind == "greedy") {
    host = greedy_high_girth(o.n, o.girth, resolve_seed(o));
  } else {
    throw UsageError("--kind must be polarity, incidence or greedy");
  }
  nlohmann::ordered_json j;
  j["schema_version"] = report_schema_version;
  j["label"] = host.label;
  j["vertices"] = host.order();
  j["edges"] = host.size();
  j["certified_family"] = host.certified_family ? host.certified_family->to_string() : "none";
  j["girth"] = girth_json(host.certified_girth);
  j["min_degree"] = host.min_degree;
  j["max_degree"] = host.graph.max_degree();
  j["part_a"] = host.part_a ? nlohmann::ordered_json(*host.part_a) : nlohmann::ordered_json(nullptr);
  if (!o.out.empty()) {
    write_file(o.out, to_edge_list(host.graph));
    std::ostringstream meta;
    write_host_metadata(meta, host);
    write_file(o.out + ".meta", meta.str());
  }
  print(out, j);
  return ok;
}

inline int extract_edges(const Options& o, std::ostream& out) {
  const Graph g = load_input(o);
  auto res = extract_even_cycle_free(g, o.r, o.trials, resolve_seed(o), o.odd_free);
  if (!o.out.empty()) write_file(o.out, to_edge_list(res.graph));
  print(out, to_json(res.report, o.timing));
  return ok;
}

inline int extract_degree(const Options& o, std::ostream& out, std::ostream& err) {
  const Graph g = load_input(o);
  DegreeExtractOptions opts;
  opts.max_rounds = o.max_rounds;
  auto res = extract_spanning_high_girth(g, o.r, resolve_seed(o), o.trials, opts);
  if (!o.out.empty()) write_file(o.out, to_edge_list(res.graph));
  print(out, to_json(res.report, o.timing));
  if (res.report.degraded.value_or(false)) {
    err << "degraded: resampling hit --max-rounds " << o.max_rounds << '\n';
    return degraded;
  }
  return ok;
}

inline int verify(const Options& o, std::ostream& out) {
  if (o.family.empty()) throw UsageError("--family is required");
  const auto family = ForbiddenFamily::parse(o.family);
  const Graph g = load_input(o);
  const auto verdict = check_family_free(g, family);
  nlohmann::ordered_json j;
  j["schema_version"] = report_schema_version;
  j["input"] = {{"n", g.order()}, {"m", g.size()}};
  j["family"] = family.to_string();
  j["girth"] = girth_json(girth(g));
  j["status"] = verdict.free() ? "free" : "violation";
  j["witness"] = verdict.witness ? witness_json(*verdict.witness) : nlohmann::ordered_json(nullptr);
  print(out, j);
  return verdict.free() ? ok : certificate_failure;
}

inline int oracle(const Options& o, std::ostream& out) {
  const Graph g = load_input(o);
  nlohmann::ordered_json j;
  j["schema_version"] = report_schema_version;
  j["input"] = {{"n", g.order()}, {"m", g.size()}};
  if (o.kind == "ex") {
    const auto family = ForbiddenFamily::parse(o.family.empty() ? "even:4" : o.family);
    const auto res = exact_ex(g, family);
    j["family"] = family.to_string();
    j["value"] = res.value;
    auto edges = nlohmann::ordered_json::array();
    for (EdgeId id : res.witness) edges.push_back({g.edge(id).u, g.edge(id).v});
    j["witness"] = edges;
    j["explored"] = res.explored;
  } else if (o.kind == "cherry") {
    if (!o.part_a_set) throw UsageError("--part-a is required for the cherry check");
    const auto verdict = cherry_check(g, o.part_a);
    j["cherries"] = verdict.cherries;
    j["bound"] = verdict.bound;
    j["status"] = verdict.holds() ? "holds" : "violation";
    j["witness"] = verdict.violation ? witness_json(*verdict.violation) : nlohmann::ordered_json(nullptr);
  } else {
    throw UsageError("--kind must be ex or cherry");
  }
  print(out, j);
  return ok;
}

inline int sweep(const Options& o, std::ostream& out, std::ostream& err) {
  SweepSpec spec;
  if (o.mode == "f")
    spec.mode = SweepMode::Edges;
  else if (o.mode == "h")
    spec.mode = SweepMode::Degree;
  else
    throw UsageError("--mode must be f or h");
  spec.family = o.family_input;
  spec.points = parse_points(o.points);
  spec.r = o.r;
  spec.trials = o.trials;
  spec.seed = resolve_seed(o);
  spec.clique_degree = o.clique_degree;
  spec.avg_degree = o.avg_degree;
  spec.max_rounds = o.max_rounds;
  const auto records = run_sweep(spec);
  const auto summary = fit_log_log(records, spec.mode);
  std::ostringstream csv;
  write_sweep_csv(csv, spec, records, summary, o.timing);
  if (!o.out.empty())
    write_file(o.out, csv.str());
  else
    out << csv.str();
  if (summary.slope) err << "slope " << *summary.slope << " over " << summary.fitted_points << " points\n";
  return ok;
}

}  // namespace detail

/// Runs one command line (without the program name). JSON and CSV go to `out`,
/// diagnostics to `err`.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  detail::Options o;
  CLI::App app{"girthforge: cycle-free and high-girth subgraph extraction", "girthforge"};
  app.require_subcommand(1);

  auto add_input = [&](CLI::App* cmd) {
    cmd->add_option("--in", o.in, "edge list file");
    cmd->add_option("--gen", o.gen, "generator spec, e.g. complete:12 or random_gnm:50:120:3");
  };
  auto add_seed = [&](CLI::App* cmd) {
    cmd->add_option("--seed", o.seed, "RNG seed (fallback: GIRTHFORGE_SEED, then 0)");
  };

  auto* host = app.add_subcommand("host", "host graph constructions");
  host->require_subcommand(1);
  auto* host_build = host->add_subcommand("build", "build and certify a host graph");
  host_build->add_option("--kind", o.kind, "polarity | incidence | greedy")->required();
  host_build->add_option("--q", o.q, "prime order of the projective plane");
  host_build->add_option("--n", o.n, "vertex count (greedy)");
  host_build->add_option("--girth", o.girth, "minimum girth (greedy)");
  host_build->add_option("--out", o.out, "edge list path; metadata goes to PATH.meta");
  add_seed(host_build);

  auto* extract = app.add_subcommand("extract", "run an extractor");
  extract->require_subcommand(1);
  auto* edges = extract->add_subcommand("edges", "large subgraph with no even cycle of length <= 2r");
  auto* degree = extract->add_subcommand("degree", "spanning subgraph with girth >= 2r+2");
  for (auto* cmd : {edges, degree}) {
    add_input(cmd);
    add_seed(cmd);
    cmd->add_option("--r", o.r, "cycle parameter, >= 2");
    cmd->add_option("--trials", o.trials, "independent trials");
    cmd->add_option("--out", o.out, "write the subgraph as an edge list");
    cmd->add_flag("--timing", o.timing, "fill timing_ms (breaks byte-identical output)");
  }
  edges->add_flag("--odd-free", o.odd_free, "also forbid odd cycles of length <= 2r+1");
  degree->add_option("--max-rounds", o.max_rounds, "resampling cap per trial");

  auto* verify = app.add_subcommand("verify", "check an edge list against a forbidden family");
  add_input(verify);
  verify->add_option("--family", o.family, "even:2r | all:L")->required();

  auto* oracle = app.add_subcommand("oracle", "exact ex() or the cherry check on a small graph");
  add_input(oracle);
  oracle->add_option("--kind", o.kind, "ex | cherry")->required();
  oracle->add_option("--family", o.family, "forbidden family for ex (default even:4)");
  oracle->add_option("--part-a", o.part_a, "size of part A for cherry (A = [0, part_a))")
      ->each([&](const std::string&) { o.part_a_set = true; });

  auto* sweep = app.add_subcommand("sweep", "parameter sweep as CSV");
  sweep->add_option("--mode", o.mode, "f (edges vs m) | h (min degree vs max degree)");
  sweep->add_option("--family-input", o.family_input, "complete | star | random_gnm | clique_apex | complete_bipartite");
  sweep->add_option("--n,--points", o.points, "start:stop:step or a comma list")->required();
  sweep->add_option("--r", o.r, "cycle parameter, >= 2");
  sweep->add_option("--trials", o.trials, "trials per point");
  sweep->add_option("--max-rounds", o.max_rounds, "resampling cap per trial (mode h)");
  sweep->add_option("--clique-degree", o.clique_degree, "min degree of clique_apex inputs");
  sweep->add_option("--avg-degree", o.avg_degree, "average degree of random_gnm inputs");
  sweep->add_option("--out", o.out, "write the CSV here instead of standard output");
  sweep->add_flag("--timing", o.timing, "fill the wall_ms column");
  add_seed(sweep);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? ok : usage;
  }

  try {
    if (*host_build) return detail::host_build(o, out);
    if (*edges) return detail::extract_edges(o, out);
    if (*degree) return detail::extract_degree(o, out, err);
    if (*verify) return detail::verify(o, out);
    if (*oracle) return detail::oracle(o, out);
    if (*sweep) return detail::sweep(o, out, err);
  } catch (const CertificateFailure& e) {
    err << "certificate failure: " << e.what() << '\n';
    return certificate_failure;
  } catch (const ParseError& e) {
    err << (o.in.empty() ? std::string("input") : o.in) << ": " << e.what() << '\n';
    return usage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return usage;
  }
  return usage;
}

}  // namespace girthforge::cli
