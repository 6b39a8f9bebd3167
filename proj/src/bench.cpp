#include "wtap/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <thread>

#include "wtap/generators.hpp"
#include "wtap/greedy.hpp"
#include "wtap/io.hpp"
#include "wtap/oracle.hpp"

namespace wtap {

namespace {

struct Job {
  std::string id;
  nlohmann::ordered_json params;
  std::function<InstanceData()> make;
};

struct Algorithm {
  std::string label;
  std::string name;
  Rational eps{1};
  GreedyOptions options;
};

std::vector<int> int_list(const nlohmann::json& value) {
  if (value.is_array()) return value.get<std::vector<int>>();
  return {value.get<int>()};
}

std::pair<int, int> int_range(const nlohmann::json& value) {
  if (value.is_array()) {
    auto v = value.get<std::vector<int>>();
    if (v.size() != 2 || v[0] > v[1]) throw std::invalid_argument("range must be [lo, hi]");
    return {v[0], v[1]};
  }
  const int x = value.get<int>();
  return {x, x};
}

std::string padded(int i) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%04d", i);
  return buf;
}

std::vector<Job> expand_sources(const nlohmann::json& config, std::uint64_t seed) {
  std::vector<Job> jobs;
  const auto sources = config.value("sources", nlohmann::json::array());
  for (std::size_t s = 0; s < sources.size(); ++s) {
    const auto& src = sources[s];
    const std::string kind = src.at("kind").get<std::string>();
    const std::string prefix = kind + std::to_string(s) + "-";
    if (kind == "random") {
      const int count = src.value("count", 1);
      const auto [n_lo, n_hi] = int_range(src.value("n", nlohmann::json(8)));
      const auto [l_lo, l_hi] = int_range(src.value("links", nlohmann::json(8)));
      const Weight weight_max = src.value("weight_max", Weight{10});
      auto rng = SeededStreams(seed).stream(1000 + s);
      for (int i = 0; i < count; ++i) {
        const int n = static_cast<int>(uniform_int(rng, n_lo, n_hi));
        const int links = static_cast<int>(uniform_int(rng, l_lo, l_hi));
        const auto sub_seed = static_cast<std::uint64_t>(uniform_int(rng, 0, std::numeric_limits<std::int64_t>::max()));
        nlohmann::ordered_json params{{"n", n}, {"links", links}, {"weight_max", weight_max}, {"seed", sub_seed}};
        jobs.push_back({prefix + padded(i), params, [=] { return gen_random(n, links, weight_max, sub_seed); }});
      }
    } else if (kind == "fig2") {
      for (int d : int_list(src.at("d"))) {
        for (int m : int_list(src.at("M"))) {
          nlohmann::ordered_json params{{"d", d}, {"M", m}};
          jobs.push_back({prefix + "d" + padded(d) + "-M" + padded(m), params, [=] { return gen_fig2(d, m); }});
        }
      }
    } else if (kind == "fig3") {
      for (int m : int_list(src.at("m"))) {
        nlohmann::ordered_json params{{"m", m}};
        jobs.push_back({prefix + "m" + padded(m), params, [=] { return gen_fig3(m); }});
      }
    } else if (kind == "file") {
      const std::string path = src.at("path").get<std::string>();
      nlohmann::ordered_json params{{"path", path}};
      jobs.push_back({prefix + path, params, [=] { return read_instance(path); }});
    } else {
      throw std::invalid_argument("unknown source kind '" + kind + "'");
    }
  }
  return jobs;
}

std::vector<Algorithm> parse_algorithms(const nlohmann::json& config) {
  std::vector<Algorithm> out;
  for (const auto& a : config.value("algorithms", nlohmann::json::array())) {
    Algorithm alg;
    alg.name = a.at("name").get<std::string>();
    if (alg.name == "uplink2") {
      alg.label = "uplink2";
    } else if (alg.name == "relgreedy") {
      const auto eps = a.value("eps", nlohmann::json("1"));
      alg.eps = eps.is_string() ? Rational::parse(eps.get<std::string>()) : Rational::parse(eps.dump());
      alg.label = "relgreedy(eps=" + alg.eps.to_string();
      if (a.contains("k")) {
        alg.options.k_override = a.at("k").get<int>();
        alg.label += ",k=" + std::to_string(*alg.options.k_override);
      }
      alg.options.full_shadows = a.value("full_shadows", false);
      if (alg.options.full_shadows) alg.label += ",full";
      alg.label += ")";
    } else {
      throw std::invalid_argument("unknown algorithm '" + alg.name + "'");
    }
    out.push_back(std::move(alg));
  }
  return out;
}

std::vector<BenchRow> run_job(const Job& job, const std::vector<Algorithm>& algorithms,
                              const std::optional<OracleBudget>& budget, bool timing) {
  std::vector<BenchRow> rows;
  auto blank = [&](const Algorithm& alg) {
    BenchRow row;
    row.instance_id = job.id;
    row.params = job.params;
    row.algorithm = alg.label;
    return row;
  };
  std::optional<Instance> inst;
  try {
    inst = Instance::build(job.make());
  } catch (const std::exception& e) {
    for (const auto& alg : algorithms) {
      auto row = blank(alg);
      row.error = e.what();
      rows.push_back(std::move(row));
    }
    return rows;
  }
  std::optional<Weight> exact;
  if (budget) {
    try {
      exact = exact_opt(*inst, *budget).link_set_weight;
    } catch (const BudgetExceeded&) {
    }
  }
  for (const auto& alg : algorithms) {
    auto row = blank(alg);
    row.n = inst->n();
    row.links = static_cast<int>(inst->links().size());
    row.exact_weight = exact;
    try {
      const auto start = std::chrono::steady_clock::now();
      Solution sol;
      if (alg.name == "uplink2") {
        sol = two_approx_only(*inst);
      } else {
        auto run = relative_greedy(*inst, alg.eps, alg.options);
        sol = run.solution;
        row.iterations = static_cast<int>(run.trace.steps.size());
      }
      const auto stop = std::chrono::steady_clock::now();
      if (timing) row.wall_ms = std::chrono::duration<double, std::milli>(stop - start).count();
      row.weight = sol.weight;
      row.link_set_weight = sol.link_set_weight;
      if (exact && *exact > 0) row.ratio = Rational(sol.weight, *exact).to_string();
    } catch (const std::exception& e) {
      row.error = e.what();
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

template <typename T>
nlohmann::ordered_json optional_json(const std::optional<T>& value) {
  return value ? nlohmann::ordered_json(*value) : nlohmann::ordered_json(nullptr);
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

BenchReport run_bench(const nlohmann::json& config, const BenchOptions& options) {
  BenchReport report;
  report.config = nlohmann::ordered_json::parse(config.dump());
  report.seed = config.value("seed", std::uint64_t{0});
  const auto jobs = expand_sources(config, report.seed);
  const auto algorithms = parse_algorithms(config);

  std::optional<OracleBudget> budget = OracleBudget{};
  if (config.contains("exact")) {
    const auto& e = config.at("exact");
    if (e.is_boolean() && !e.get<bool>()) {
      budget.reset();
    } else if (e.is_object()) {
      budget->max_links = e.value("max_links", budget->max_links);
      budget->max_vertices = e.value("max_vertices", budget->max_vertices);
    }
  }

  std::vector<std::vector<BenchRow>> results(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++) {
      results[i] = run_job(jobs[i], algorithms, budget, options.timing);
    }
  };
  const int workers = std::max(1, std::min<int>(options.jobs, static_cast<int>(jobs.size())));
  {
    std::vector<std::jthread> pool;
    for (int w = 1; w < workers; ++w) pool.emplace_back(worker);
    worker();
  }
  for (auto& group : results) {
    for (auto& row : group) report.rows.push_back(std::move(row));
  }
  std::stable_sort(report.rows.begin(), report.rows.end(), [](const BenchRow& a, const BenchRow& b) {
    return std::tie(a.instance_id, a.algorithm) < std::tie(b.instance_id, b.algorithm);
  });
  return report;
}

nlohmann::ordered_json bench_to_json(const BenchReport& report) {
  nlohmann::ordered_json j;
  j["schema"] = kBenchSchema;
  j["version"] = kVersion;
  j["seed"] = report.seed;
  j["config"] = report.config;
  auto rows = nlohmann::ordered_json::array();
  for (const auto& r : report.rows) {
    nlohmann::ordered_json row;
    row["instance"] = r.instance_id;
    row["params"] = r.params;
    row["algorithm"] = r.algorithm;
    row["n"] = r.n;
    row["links"] = r.links;
    row["weight"] = optional_json(r.weight);
    row["link_set_weight"] = optional_json(r.link_set_weight);
    row["exact_weight"] = optional_json(r.exact_weight);
    row["ratio"] = r.ratio.empty() ? nlohmann::ordered_json(nullptr) : nlohmann::ordered_json(r.ratio);
    row["iterations"] = r.iterations;
    if (r.wall_ms) row["wall_ms"] = *r.wall_ms;
    row["error"] = r.error.empty() ? nlohmann::ordered_json(nullptr) : nlohmann::ordered_json(r.error);
    rows.push_back(std::move(row));
  }
  j["rows"] = std::move(rows);
  return j;
}

std::string bench_to_csv(const BenchReport& report) {
  std::ostringstream out;
  out << "instance,algorithm,n,links,weight,link_set_weight,exact_weight,ratio,iterations,wall_ms,error\n";
  auto opt = [](const std::optional<Weight>& w) { return w ? std::to_string(*w) : std::string(); };
  for (const auto& r : report.rows) {
    out << csv_field(r.instance_id) << ',' << csv_field(r.algorithm) << ',' << r.n << ',' << r.links << ','
        << opt(r.weight) << ',' << opt(r.link_set_weight) << ',' << opt(r.exact_weight) << ',' << r.ratio << ','
        << r.iterations << ',';
    if (r.wall_ms) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.3f", *r.wall_ms);
      out << buf;
    }
    out << ',' << csv_field(r.error) << '\n';
  }
  return out.str();
}

}  // namespace wtap
