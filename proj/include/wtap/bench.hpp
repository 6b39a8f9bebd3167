#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "wtap/instance.hpp"

namespace wtap {

inline constexpr const char* kBenchSchema = "wtap-bench/1";
inline constexpr const char* kVersion = "0.1.0";

struct BenchRow {
  std::string instance_id;
  nlohmann::ordered_json params;
  std::string algorithm;
  int n = 0;
  int links = 0;
  std::optional<Weight> weight;
  std::optional<Weight> link_set_weight;
  std::optional<Weight> exact_weight;
  std::string ratio;  // weight/exact as "p/q", empty without exact
  int iterations = 0;
  std::optional<double> wall_ms;
  std::string error;
};

struct BenchOptions {
  int jobs = 1;
  bool timing = false;  // wall times make reports run-dependent
};

struct BenchReport {
  nlohmann::ordered_json config;
  std::uint64_t seed = 0;
  std::vector<BenchRow> rows;  // sorted by (instance id, algorithm)
};

// Config keys: "seed", "sources" (random/fig2/fig3/file), "algorithms"
// (uplink2, relgreedy with "eps" and optional "k", "full_shadows"), "exact"
// (false or {"max_links", "max_vertices"}).
BenchReport run_bench(const nlohmann::json& config, const BenchOptions& options = {});

nlohmann::ordered_json bench_to_json(const BenchReport& report);
std::string bench_to_csv(const BenchReport& report);

}  // namespace wtap
