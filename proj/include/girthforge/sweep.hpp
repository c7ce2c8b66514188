#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "girthforge/degree_extract.hpp"
#include "girthforge/edge_extract.hpp"
#include "girthforge/generators.hpp"

namespace girthforge {

enum class SweepMode { Edges, Degree };  // "f": best edge count vs m; "h": best min degree vs Delta

inline constexpr const char* sweep_csv_version = "girthforge-sweep v1";

struct SweepRecord {
  std::size_t point{0};     // generator parameter (n, or Delta for clique_apex)
  std::size_t variable{0};  // m in mode f, Delta in mode h
  std::string method;
  std::size_t r{2};
  std::size_t trials{1};
  std::size_t best_edges{0};
  std::size_t best_min_degree{0};
  bool certified{false};
  double wall_ms{0.0};
};

struct SweepSpec {
  SweepMode mode{SweepMode::Edges};
  std::string family{"complete"};  // complete | star | random_gnm | clique_apex | complete_bipartite
  std::vector<std::size_t> points;
  std::size_t r{2};
  std::size_t trials{8};
  std::uint64_t seed{0};
  std::size_t avg_degree{6};       // random_gnm edge density
  std::size_t clique_degree{4};    // clique_apex min degree
  std::size_t max_rounds{1000};
};

struct SweepSummary {
  std::optional<double> slope;      // least squares of log(best) on log(variable)
  std::optional<double> intercept;  // log of the fitted constant
  std::size_t fitted_points{0};
};

// "a:b:step" (inclusive) or a comma-separated list.
inline std::vector<std::size_t> parse_points(const std::string& text) {
  std::vector<std::size_t> out;
  auto number = [&](const std::string& s) {
    std::size_t used = 0;
    const auto v = std::stoull(s, &used);
    if (used != s.size()) throw std::invalid_argument("bad number '" + s + "'");
    return static_cast<std::size_t>(v);
  };
  try {
    if (text.find(':') != std::string::npos) {
      std::vector<std::size_t> parts;
      std::stringstream ss(text);
      for (std::string item; std::getline(ss, item, ':');) parts.push_back(number(item));
      if (parts.size() != 3 || parts[2] == 0 || parts[0] > parts[1])
        throw std::invalid_argument("range must be start:stop:step");
      for (std::size_t v = parts[0]; v <= parts[1]; v += parts[2]) out.push_back(v);
    } else {
      std::stringstream ss(text);
      for (std::string item; std::getline(ss, item, ',');) out.push_back(number(item));
    }
  } catch (const std::invalid_argument&) {
    throw;
  } catch (const std::exception&) {
    throw std::invalid_argument("bad sweep points '" + text + "'");
  }
  return out;
}

inline Graph sweep_input(const SweepSpec& spec, std::size_t point, std::size_t index) {
  if (spec.family == "complete") return complete(point);
  if (spec.family == "star") return star(point);
  if (spec.family == "clique_apex") return clique_apex(spec.clique_degree, point);
  if (spec.family == "complete_bipartite") return complete_bipartite(point, point);
  if (spec.family == "random_gnm") {
    const std::size_t pairs = point * (point ? point - 1 : 0) / 2;
    return random_gnm(point, std::min(pairs, point * spec.avg_degree / 2), mix_seed(spec.seed, 0x6E0000 + index));
  }
  throw std::invalid_argument("unknown sweep family '" + spec.family + "'");
}

inline SweepSummary fit_log_log(const std::vector<SweepRecord>& records, SweepMode mode) {
  std::vector<double> xs, ys;
  for (const auto& rec : records) {
    const std::size_t y = mode == SweepMode::Edges ? rec.best_edges : rec.best_min_degree;
    if (rec.variable == 0 || y == 0) continue;
    xs.push_back(std::log(static_cast<double>(rec.variable)));
    ys.push_back(std::log(static_cast<double>(y)));
  }
  SweepSummary s;
  s.fitted_points = xs.size();
  if (xs.size() < 2) return s;
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) mx += xs[i], my += ys[i];
  mx /= static_cast<double>(xs.size());
  my /= static_cast<double>(ys.size());
  double sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
  }
  if (sxx == 0) return s;
  s.slope = sxy / sxx;
  s.intercept = my - *s.slope * mx;
  return s;
}

/// Runs the extractor for every point; records come out in point order.
/// Throws CertificateFailure if any point fails its certificate.
inline std::vector<SweepRecord> run_sweep(const SweepSpec& spec) {
  if (spec.points.size() < 4)
    throw std::invalid_argument("a sweep needs at least 4 points, got " + std::to_string(spec.points.size()));
  std::vector<SweepRecord> records;
  for (std::size_t i = 0; i < spec.points.size(); ++i) {
    const Graph g = sweep_input(spec, spec.points[i], i);
    const std::uint64_t seed = mix_seed(spec.seed, i);
    ExtractionResult res = spec.mode == SweepMode::Edges
                               ? extract_even_cycle_free(g, spec.r, spec.trials, seed)
                               : extract_spanning_high_girth(g, spec.r, seed, spec.trials, {spec.max_rounds});
    SweepRecord rec;
    rec.point = spec.points[i];
    rec.variable = spec.mode == SweepMode::Edges ? g.size() : g.max_degree();
    rec.method = res.report.method;
    rec.r = spec.r;
    rec.trials = spec.trials;
    rec.best_edges = res.report.output_edges;
    rec.best_min_degree = res.report.output_min_degree;
    rec.certified = res.report.certified;
    rec.wall_ms = res.report.timing_ms;
    if (!rec.certified) throw CertificateFailure("sweep point " + std::to_string(rec.point) + " is uncertified");
    records.push_back(std::move(rec));
  }
  return records;
}

/// CSV with a version comment, fixed columns, '.' decimals. wall_ms is left
/// empty unless `include_timing`, so repeated runs are byte-identical.
inline void write_sweep_csv(std::ostream& out, const SweepSpec& spec, const std::vector<SweepRecord>& records,
                            const SweepSummary& summary, bool include_timing = false) {
  out << "# " << sweep_csv_version << " mode=" << (spec.mode == SweepMode::Edges ? "f" : "h")
      << " family=" << spec.family << " r=" << spec.r << " trials=" << spec.trials << " seed=" << spec.seed << '\n';
  out << "point,variable,method,r,trials,best_edges,best_min_degree,certificate,wall_ms\n";
  for (const auto& rec : records) {
    out << rec.point << ',' << rec.variable << ',' << rec.method << ',' << rec.r << ',' << rec.trials << ','
        << rec.best_edges << ',' << rec.best_min_degree << ',' << (rec.certified ? "pass" : "fail") << ',';
    if (include_timing) {
      std::ostringstream ms;
      ms.imbue(std::locale::classic());
      ms << std::fixed << std::setprecision(3) << rec.wall_ms;
      out << ms.str();
    }
    out << '\n';
  }
  std::ostringstream tail;
  tail.imbue(std::locale::classic());
  tail << std::setprecision(6);
  tail << "# fitted_points=" << summary.fitted_points;
  if (summary.slope) tail << " slope=" << *summary.slope << " constant=" << std::exp(*summary.intercept);
  out << tail.str() << '\n';
}

}  // namespace girthforge
