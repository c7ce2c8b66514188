// Acceptance run: one PASS/FAIL line per criterion, non-zero exit on any FAIL.

#include <array>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "girthforge.hpp"
#include "girthforge/cli.hpp"

using namespace girthforge;

namespace {

struct Verdict {
  bool pass{true};
  std::string detail;
};

// The shared input corpus for the extractor criteria.
std::vector<Graph> corpus(std::size_t count, std::uint64_t seed) {
  std::vector<Graph> out;
  Rng rng(seed);
  for (std::size_t i = 0; i < count; ++i) {
    switch (i % 4) {
      case 0: {
        const std::size_t n = 10 + uniform_below(rng, 191);
        const std::size_t pairs = n * (n - 1) / 2;
        const std::size_t m = std::min(pairs, n + uniform_below(rng, 3 * n));
        out.push_back(random_gnm(n, m, rng()));
        break;
      }
      case 1:
        out.push_back(complete(4 + uniform_below(rng, 37)));
        break;
      case 2:
        out.push_back(clique_apex(2 + uniform_below(rng, 5), 2 + uniform_below(rng, 10)));
        break;
      default:
        out.push_back(complete_bipartite(2 + uniform_below(rng, 20), 2 + uniform_below(rng, 20)));
        break;
    }
  }
  return out;
}

Verdict certification_soundness() {
  const auto graphs = corpus(130, 0xA11);
  std::size_t runs = 0, violations = 0;
  for (std::size_t i = 0; i < graphs.size(); ++i)
    for (std::size_t r : {2, 3})
      for (bool odd : {false, true}) {
        const auto res = extract_even_cycle_free(graphs[i], r, 4, mix_seed(1, i * 8 + r * 2 + odd), odd);
        const auto fam = odd ? ForbiddenFamily::all_up_to(2 * r + 1) : ForbiddenFamily::even_up_to(2 * r);
        ++runs;
        bool ok = check_family_free(res.graph, fam).free() && res.report.certified;
        for (const auto& e : res.graph.edges()) ok = ok && graphs[i].has_edge(e.u, e.v);
        violations += !ok;
      }
  return {violations == 0 && runs >= 500,
          std::to_string(runs) + " runs, " + std::to_string(violations) + " violations"};
}

Verdict girth_guarantee() {
  const auto graphs = corpus(150, 0xB22);
  std::size_t runs = 0, violations = 0, degraded = 0, nondegraded_violations = 0;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    if (graphs[i].empty()) continue;
    for (std::size_t r : {2, 3}) {
      const auto res = extract_spanning_high_girth(graphs[i], r, mix_seed(2, i * 4 + r), 2);
      ++runs;
      const bool is_degraded = res.report.degraded.value_or(false);
      degraded += is_degraded;
      const bool ok = girth(res.graph).at_least(2 * r + 2) && res.graph.order() == graphs[i].order();
      violations += !ok;
      nondegraded_violations += !ok && !is_degraded;
    }
  }
  char rate[32];
  std::snprintf(rate, sizeof rate, "%.1f%%", runs ? 100.0 * double(degraded) / double(runs) : 0.0);
  return {nondegraded_violations == 0 && violations == 0 && runs >= 300,
          std::to_string(runs) + " runs, " + std::to_string(violations) + " girth violations, degraded rate " + rate};
}

Verdict partition_guarantee() {
  std::size_t checks = 0, violations = 0;
  Rng rng(0xC33);
  for (std::size_t i = 0; i < 100; ++i) {
    const std::size_t n = 5 + uniform_below(rng, 146);
    const std::size_t pairs = n * (n - 1) / 2;
    const Graph g = random_gnm(n, std::min(pairs, uniform_below(rng, 4 * n) + 1), rng());
    for (std::size_t k : {3, 4, 5}) {
      const auto res = max_kpartite(g, k, mix_seed(3, i * 8 + k));
      for (Vertex v = 0; v < n; ++v) {
        const std::size_t d = g.degree(v);
        std::size_t out = 0;
        for (Vertex w : g.neighbors(v)) out += res.partition.parts[w] != res.partition.parts[v];
        const std::size_t need = ((k - 2) * d + (k - 2)) / (k - 1);
        violations += out < need || res.crossing.degree(v) != out;
        ++checks;
      }
      const std::size_t need_total = ((k - 2) * g.size() + (k - 2)) / (k - 1);
      violations += res.crossing.size() < need_total;
      ++checks;
    }
  }
  return {violations == 0, std::to_string(checks) + " checks, " + std::to_string(violations) + " violations"};
}

// Orthogonal pairs over normalized triples, counted without the library.
std::array<std::size_t, 3> plane_counts(std::uint64_t q) {
  std::vector<std::array<std::uint64_t, 3>> pts;
  for (std::uint64_t x = 0; x < q; ++x)
    for (std::uint64_t y = 0; y < q; ++y)
      for (std::uint64_t z = 0; z < q; ++z) {
        const std::uint64_t lead = x ? x : (y ? y : z);
        if (lead == 1) pts.push_back({x, y, z});
      }
  std::size_t edges = 0, absolute = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const auto& a = pts[i];
    absolute += (a[0] * a[0] + a[1] * a[1] + a[2] * a[2]) % q == 0;
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      edges += (a[0] * pts[j][0] + a[1] * pts[j][1] + a[2] * pts[j][2]) % q == 0;
  }
  return {pts.size(), edges, absolute};
}

Verdict host_certificates() {
  std::size_t failures = 0;
  for (std::uint64_t q : {2, 3, 5, 7, 11, 13}) {
    const auto pol = polarity_graph(q);
    const auto ref = plane_counts(q);
    std::size_t deg_q = 0;
    for (Vertex v = 0; v < pol.order(); ++v) deg_q += pol.graph.degree(v) == q;
    const bool pol_ok = pol.order() == q * q + q + 1 && pol.order() == ref[0] &&
                        pol.size() == q * (q + 1) * (q + 1) / 2 && pol.size() == ref[1] && deg_q == q + 1 &&
                        deg_q == ref[2] && check_family_free(pol.graph, ForbiddenFamily::even_up_to(4)).free();
    const auto inc = incidence_graph_pg2(q);
    const bool inc_ok = inc.graph.min_degree() == q + 1 && inc.graph.max_degree() == q + 1 &&
                        girth(inc.graph) == Girth::finite(6);
    failures += !pol_ok + !inc_ok;
  }
  return {failures == 0, "q in {2,3,5,7,11,13}, " + std::to_string(failures) + " failed certificates"};
}

Verdict oracle_dominance() {
  std::vector<std::pair<std::string, Graph>> graphs{{"K4", complete(4)},
                                                    {"K5", complete(5)},
                                                    {"K33", complete_bipartite(3, 3)},
                                                    {"C5", cycle(5)},
                                                    {"C6", cycle(6)}};
  Rng rng(0xD44);
  for (std::size_t i = 0; i < 50; ++i) {
    const std::size_t n = 5 + uniform_below(rng, 8);
    const std::size_t pairs = n * (n - 1) / 2;
    graphs.emplace_back("random", random_gnm(n, std::min<std::size_t>(pairs, 4 + uniform_below(rng, 17)), rng()));
  }
  const auto even4 = ForbiddenFamily::even_up_to(4);
  std::size_t violations = 0;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    const auto ex = exact_ex(graphs[i].second, even4).value;
    for (std::uint64_t s = 0; s < 4; ++s)
      violations += extract_even_cycle_free(graphs[i].second, 2, 8, mix_seed(5, i * 4 + s)).graph.size() > ex;
  }
  const bool anchors = exact_ex(complete(4), even4).value == 4 && exact_ex(cycle(5), even4).value == 5 &&
                       exact_ex(complete_bipartite(3, 3), even4).value == 6;
  return {violations == 0 && anchors, std::to_string(graphs.size()) + " graphs, " + std::to_string(violations) +
                                          " dominance violations, anchors " + (anchors ? "ok" : "wrong")};
}

Verdict scaling() {
  SweepSpec spec;
  spec.mode = SweepMode::Edges;
  spec.family = "complete";
  spec.points = {20, 30, 40, 50, 60, 70, 80};
  spec.r = 2;
  spec.trials = 32;
  spec.seed = 6;
  const auto records = run_sweep(spec);
  const auto fit = fit_log_log(records, spec.mode);
  const double slope = fit.slope.value_or(0.0);
  char buf[96];
  std::snprintf(buf, sizeof buf, "slope %.3f over %zu points (needs >= 0.55 over >= 6)", slope, fit.fitted_points);
  return {fit.slope && slope >= 0.55 && fit.fitted_points >= 6, buf};
}

Verdict cherry_bound() {
  Rng rng(0xE55);
  std::size_t runs = 0, violations = 0;
  while (runs < 100) {
    const std::size_t big = 4 + uniform_below(rng, 27);  // Delta
    const std::size_t lo = static_cast<std::size_t>(std::ceil(std::sqrt(double(big))));
    const std::size_t small = lo + uniform_below(rng, big - lo + 1);  // delta, delta^2 >= Delta
    const Graph g = complete_bipartite(big, small);  // A = [0, Delta) has degree delta
    const auto res = extract_spanning_high_girth(g, 2, mix_seed(7, runs), 2);
    ++runs;
    const bool c4_free = check_family_free(res.graph, ForbiddenFamily::even_up_to(4)).free();
    const auto verdict = cherry_check(res.graph, big);
    const auto cap = static_cast<std::size_t>(std::floor(2.0 * double(small) / std::sqrt(double(big)))) + 2;
    violations += !c4_free || !verdict.holds() || verdict.cherries > verdict.bound || res.report.output_min_degree > cap;
  }
  return {violations == 0, std::to_string(runs) + " runs, " + std::to_string(violations) + " violations"};
}

Verdict retention_floor() {
  // Edge u-v between classes 0 and 1; u has two more neighbors in class 1 and
  // v two more in class 0, so five mutually incident edges compete: p = 1/5.
  // A star with three leaves in one class gives p = 1/3 per edge.
  const Graph fixture(6, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}});
  const VertexColoring chi{{0, 1, 1, 1, 0, 0}, 2};
  const Graph s3 = star(3);
  const VertexColoring chi_s{{0, 1, 1, 1}, 2};
  const std::size_t trials = 2000;
  std::size_t kept = 0, kept_star = 0;
  for (std::size_t s = 0; s < trials; ++s) {
    Rng rng(mix_seed(8, s));
    kept += edge_retention(fixture, chi, EdgeWeights::uniform(fixture.size(), rng)).has_edge(0, 1);
    kept_star += edge_retention(s3, chi_s, EdgeWeights::uniform(s3.size(), rng)).has_edge(0, 1);
  }
  auto within = [&](std::size_t hits, double p) {
    const double sigma = std::sqrt(p * (1 - p) / double(trials));
    return std::abs(double(hits) / double(trials) - p) <= 3 * sigma;
  };
  const bool ok = within(kept, 0.2) && within(kept_star, 1.0 / 3.0);
  char buf[128];
  std::snprintf(buf, sizeof buf, "double star %.4f (exact 0.2000), star %.4f (exact 0.3333), %zu seeds",
                double(kept) / trials, double(kept_star) / trials, trials);
  return {ok, buf};
}

Verdict determinism() {
  const auto dir = std::filesystem::temp_directory_path() / "girthforge_acceptance";
  std::filesystem::create_directories(dir);
  const std::string k12 = (dir / "k12.edges").string();
  std::ofstream(k12) << to_edge_list(complete(12));
  const std::vector<std::vector<std::string>> commands{
      {"extract", "edges", "--in", k12, "--r", "2", "--trials", "16", "--seed", "7"},
      {"extract", "edges", "--gen", "random_gnm:150:600:4", "--r", "3", "--trials", "8", "--seed", "1"},
      {"extract", "edges", "--gen", "complete:30", "--r", "2", "--odd-free", "--seed", "9"},
      {"extract", "degree", "--gen", "clique_apex:4:6", "--r", "2", "--trials", "4", "--seed", "3"},
      {"extract", "degree", "--gen", "random_gnm:60:150:2", "--r", "3", "--trials", "2", "--seed", "5"},
      {"verify", "--family", "even:6", "--gen", "complete_bipartite:4:5"},
      {"oracle", "--kind", "ex", "--gen", "random_gnm:8:14:3"},
      {"oracle", "--kind", "cherry", "--gen", "complete_bipartite:3:4", "--part-a", "3"},
      {"host", "build", "--kind", "greedy", "--n", "300", "--girth", "7", "--seed", "11"},
      {"sweep", "--mode", "f", "--family-input", "random_gnm", "--n", "20:50:10", "--trials", "4", "--seed", "2"},
  };
  std::size_t same = 0;
  for (const auto& cmd : commands) {
    std::ostringstream out1, err1, out2, err2;
    const int c1 = cli::run(cmd, out1, err1);
    const int c2 = cli::run(cmd, out2, err2);
    same += c1 == c2 && out1.str() == out2.str() && !out1.str().empty();
  }
  return {same == commands.size(), std::to_string(same) + "/" + std::to_string(commands.size()) +
                                       " commands byte-identical"};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
      {"certification soundness", certification_soundness},
      {"girth guarantee", girth_guarantee},
      {"partition guarantee", partition_guarantee},
      {"host certificates", host_certificates},
      {"oracle dominance", oracle_dominance},
      {"scaling check", scaling},
      {"cherry bound", cherry_bound},
      {"retention probability", retention_floor},
      {"determinism", determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Stopwatch clock;
    Verdict v;
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    char secs[32];
    std::snprintf(secs, sizeof secs, "%.1fs", clock.elapsed_ms() / 1000.0);
    std::cout << (v.pass ? "PASS" : "FAIL") << "  " << (i + 1) << ". " << criteria[i].first << ": " << v.detail
              << " (" << secs << ")" << std::endl;
    failed += !v.pass;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed" << std::endl;
  return failed ? 1 : 0;
}
