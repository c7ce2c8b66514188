#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "girthforge/cycles.hpp"
#include "girthforge/graph.hpp"
#include "girthforge/hosts.hpp"

namespace girthforge {

inline constexpr int report_schema_version = 1;

struct HostSummary {
  std::string label;
  std::size_t order{0};
  std::size_t min_degree{0};
  Girth girth = Girth::infinite();

  static HostSummary of(const HostGraph& h) { return {h.label, h.order(), h.min_degree, h.certified_girth}; }
};

/// Outcome of one extractor call. Everything except timing_ms is a function of
/// the inputs and the seed.
struct ExtractionReport {
  std::size_t input_n{0};
  std::size_t input_m{0};
  std::string method;
  std::size_t r{2};
  std::size_t trials{1};
  std::uint64_t seed{0};
  std::size_t output_edges{0};
  std::size_t output_min_degree{0};
  Girth output_girth = Girth::infinite();
  std::string family;
  bool certified{false};
  double timing_ms{0.0};

  // degree extractor only
  std::optional<HostSummary> host;
  std::optional<std::size_t> t;
  std::optional<std::size_t> rounds_used;
  std::optional<bool> degraded;

  nlohmann::ordered_json stats = nlohmann::ordered_json::object();

  void describe_output(const Graph& out) {
    output_edges = out.size();
    output_min_degree = out.min_degree();
    output_girth = girth(out);
  }
};

inline nlohmann::ordered_json girth_json(const Girth& g) {
  if (g.is_infinite()) return "inf";
  return g.length();
}

inline nlohmann::ordered_json to_json(const ExtractionReport& rep, bool include_timing = false) {
  nlohmann::ordered_json j;
  j["schema_version"] = report_schema_version;
  j["input"] = {{"n", rep.input_n}, {"m", rep.input_m}};
  j["method"] = rep.method;
  j["r"] = rep.r;
  j["trials"] = rep.trials;
  j["seed"] = rep.seed;
  j["output"] = {{"edges", rep.output_edges},
                 {"min_degree", rep.output_min_degree},
                 {"girth", girth_json(rep.output_girth)}};
  j["certificate"] = {{"family", rep.family}, {"status", rep.certified ? "pass" : "fail"}};
  if (rep.host)
    j["host"] = {{"label", rep.host->label},
                 {"order", rep.host->order},
                 {"min_degree", rep.host->min_degree},
                 {"girth", girth_json(rep.host->girth)}};
  if (rep.t) j["t"] = *rep.t;
  if (rep.rounds_used) j["rounds_used"] = *rep.rounds_used;
  if (rep.degraded) j["degraded"] = *rep.degraded;
  j["stats"] = rep.stats;
  j["timing_ms"] = include_timing ? nlohmann::ordered_json(rep.timing_ms) : nlohmann::ordered_json(nullptr);
  return j;
}

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

}  // namespace girthforge
