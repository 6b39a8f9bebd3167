// Command-line front end: instance generation, solvers, debug probes and the
// benchmark runner.
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "wtap/baseline.hpp"
#include "wtap/bench.hpp"
#include "wtap/component_dp.hpp"
#include "wtap/decomposition.hpp"
#include "wtap/generators.hpp"
#include "wtap/greedy.hpp"
#include "wtap/io.hpp"
#include "wtap/oracle.hpp"
#include "wtap/ratio_search.hpp"
#include "wtap/report.hpp"

namespace {

enum ExitCode { kOk = 0, kFailure = 1, kInvalid = 2, kBudget = 3 };

struct Common {
  std::string out;
  std::string format = "json";
  std::uint64_t seed = 1;
  bool seed_given = false;
};

void emit(const Common& common, const std::string& text) {
  if (common.out.empty() || common.out == "-") {
    std::cout << text;
  } else {
    wtap::write_file(common.out, text);
  }
}

void emit_json(const Common& common, const wtap::OrderedJson& doc) { emit(common, wtap::dump_json(doc)); }

wtap::Instance load(const std::string& path) { return wtap::Instance::build(wtap::read_instance(path)); }

std::vector<wtap::LinkId> read_solution_links(const std::string& path) {
  const auto doc = nlohmann::json::parse(wtap::read_file(path));
  const nlohmann::json* node = &doc;
  if (doc.contains("solution")) node = &doc.at("solution");
  if (!node->contains("links")) throw wtap::ParseError("solution file has no \"links\" array");
  std::vector<wtap::LinkId> links;
  for (const auto& l : node->at("links")) links.push_back(l.is_object() ? l.at("id").get<wtap::LinkId>() : l.get<wtap::LinkId>());
  return links;
}

// Baseline paths as pool links, plus L_original and those paths as the
// component alphabet.
struct UpLinkContext {
  wtap::LinkPool pool;
  std::vector<wtap::LinkId> up;
  std::vector<wtap::LinkId> search;
};

UpLinkContext baseline_context(const wtap::Instance& inst) {
  UpLinkContext ctx{wtap::LinkPool(inst), {}, {}};
  ctx.up = wtap::materialize_paths(ctx.pool, wtap::cheapest_disjoint_uplink_cover(inst));
  std::sort(ctx.up.begin(), ctx.up.end());
  ctx.search = ctx.pool.original_ids();
  ctx.search.insert(ctx.search.end(), ctx.up.begin(), ctx.up.end());
  std::sort(ctx.search.begin(), ctx.search.end());
  ctx.search.erase(std::unique(ctx.search.begin(), ctx.search.end()), ctx.search.end());
  return ctx;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weighted tree augmentation: solvers, oracles and benchmarks"};
  app.require_subcommand(1);
  app.fallthrough();
  Common common;
  app.add_option("--out", common.out, "Write output to this file instead of stdout");
  app.add_option("--format", common.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  auto* seed_opt = app.add_option("--seed", common.seed, "Seed for generators and bench");

  // gen
  auto* gen = app.add_subcommand("gen", "Generate an instance");
  gen->require_subcommand(1);
  int n = 8, links = 8, d = 4, m = 3;
  wtap::Weight weight_max = 10, big_m = 10;
  auto* gen_random = gen->add_subcommand("random", "Random recursive tree with random links");
  gen_random->add_option("--n", n, "Vertices")->check(CLI::PositiveNumber);
  gen_random->add_option("--links", links, "Random links before repair")->check(CLI::NonNegativeNumber);
  gen_random->add_option("--weight-max", weight_max, "Largest weight")->check(CLI::PositiveNumber);
  auto* gen_fig2 = gen->add_subcommand("fig2", "Family where constant-size components do not help");
  gen_fig2->add_option("--d", d, "Top path length")->check(CLI::Range(2, 1 << 20));
  gen_fig2->add_option("--M", big_m, "Large weight constant")->check(CLI::PositiveNumber);
  auto* gen_fig3 = gen->add_subcommand("fig3", "Family with a hub lying on every cover link");
  gen_fig3->add_option("--m", m, "Number of up-links")->check(CLI::PositiveNumber);

  // solve
  auto* solve = app.add_subcommand("solve", "Solve an instance");
  std::string algorithm = "relgreedy", eps_text = "1", instance_path;
  std::optional<int> k_override;
  bool full_shadows = false;
  solve->add_option("--algorithm", algorithm, "Algorithm")->check(CLI::IsMember({"uplink2", "relgreedy"}));
  solve->add_option("--eps", eps_text, "Accuracy parameter as p/q");
  solve->add_option("--k-override", k_override, "Use this thinness bound instead of ceil(2/eps)");
  solve->add_flag("--full-shadows", full_shadows, "Search over all shadows of the links");
  solve->add_option("instance", instance_path, "Instance file")->required();

  auto* exact = app.add_subcommand("exact", "Exact optimum by enumeration");
  std::size_t max_links = 20;
  exact->add_option("--max-links", max_links, "Refuse instances with more links");
  exact->add_option("instance", instance_path, "Instance file")->required();

  auto* ratio = app.add_subcommand("ratio", "Best-ratio k-thin component against the baseline");
  int k = 2;
  ratio->add_option("--k", k, "Thinness bound")->check(CLI::PositiveNumber);
  ratio->add_option("instance", instance_path, "Instance file")->required();

  auto* component = app.add_subcommand("component", "Slack-maximizing k-thin component at a fixed rho");
  std::string rho_text = "1";
  component->add_option("--rho", rho_text, "Rho as p/q")->required();
  component->add_option("--k", k, "Thinness bound")->check(CLI::PositiveNumber);
  component->add_option("instance", instance_path, "Instance file")->required();

  auto* decompose = app.add_subcommand("decompose", "Decompose a cover against the baseline up-links");
  std::string solution_path;
  decompose->add_option("--eps", eps_text, "Accuracy parameter as p/q");
  decompose->add_option("--solution", solution_path, "JSON file with a \"links\" array")->required();
  decompose->add_option("instance", instance_path, "Instance file")->required();

  auto* bench = app.add_subcommand("bench", "Run a benchmark configuration");
  std::string config_path;
  int jobs = 1;
  bool timing = false;
  bench->add_option("--config", config_path, "Benchmark configuration (JSON)")->required();
  bench->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  bench->add_flag("--timing", timing, "Record wall times (reports stop being byte-identical)");

  CLI11_PARSE(app, argc, argv);
  common.seed_given = seed_opt->count() > 0;

  try {
    if (gen->parsed()) {
      wtap::InstanceData data;
      if (gen_random->parsed()) data = wtap::gen_random(n, links, weight_max, common.seed);
      else if (gen_fig2->parsed()) data = wtap::gen_fig2(d, big_m);
      else data = wtap::gen_fig3(m);
      wtap::Instance::build(data);
      emit_json(common, wtap::instance_to_json(data));
    } else if (solve->parsed()) {
      const auto inst = load(instance_path);
      if (algorithm == "uplink2") {
        auto doc = wtap::to_json(inst, wtap::cheapest_disjoint_uplink_cover(inst));
        doc["solution"] = wtap::to_json(wtap::two_approx_only(inst));
        emit_json(common, doc);
      } else {
        const auto eps = wtap::Rational::parse(eps_text);
        const auto run = wtap::relative_greedy(inst, eps, {k_override, full_shadows});
        emit_json(common, wtap::to_json(run, eps));
      }
    } else if (exact->parsed()) {
      const auto inst = load(instance_path);
      wtap::OracleBudget budget;
      budget.max_links = max_links;
      auto doc = wtap::to_json(wtap::exact_opt(inst, budget));
      doc["scale"] = inst.scale();
      emit_json(common, doc);
    } else if (ratio->parsed()) {
      const auto inst = load(instance_path);
      auto ctx = baseline_context(inst);
      if (ctx.up.empty()) throw wtap::EmptyUpLinkSet();
      emit_json(common, wtap::to_json(ctx.pool, wtap::best_ratio_component(ctx.pool, ctx.up, k, ctx.search), k));
    } else if (component->parsed()) {
      const auto inst = load(instance_path);
      auto ctx = baseline_context(inst);
      const auto rho = wtap::Rational::parse(rho_text);
      emit_json(common, wtap::to_json(ctx.pool, wtap::slack_max(ctx.pool, ctx.up, k, rho, ctx.search), k));
    } else if (decompose->parsed()) {
      const auto inst = load(instance_path);
      auto ctx = baseline_context(inst);
      const auto cover = read_solution_links(solution_path);
      for (auto id : cover) {
        if (id < 0 || static_cast<std::size_t>(id) >= inst.links().size()) {
          throw wtap::ParseError("solution link id " + std::to_string(id) + " out of range");
        }
      }
      if (!wtap::covers_all_edges(ctx.pool, cover)) throw wtap::ParseError("solution does not cover every edge");
      const auto eps = wtap::Rational::parse(eps_text);
      const auto d = wtap::decompose(ctx.pool, cover, ctx.up, eps);
      const auto structure = wtap::verify_dependency_graph(ctx.pool, cover, ctx.up);
      const auto outcome = wtap::verify_decomposition(ctx.pool, cover, ctx.up, d);
      emit_json(common, wtap::to_json(ctx.pool, d, structure, outcome));
      if (!structure.ok() || !outcome.ok()) return kFailure;
    } else if (bench->parsed()) {
      auto config = nlohmann::json::parse(wtap::read_file(config_path));
      if (common.seed_given) config["seed"] = common.seed;
      const auto report = wtap::run_bench(config, {jobs, timing});
      if (common.format == "csv") emit(common, wtap::bench_to_csv(report));
      else emit_json(common, wtap::bench_to_json(report));
    }
  } catch (const wtap::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return kInvalid;
  } catch (const wtap::ParseError& e) {
    std::cerr << e.what() << "\n";
    return kInvalid;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "invalid JSON: " << e.what() << "\n";
    return kInvalid;
  } catch (const wtap::BudgetExceeded& e) {
    std::cerr << e.what() << "\n";
    return kBudget;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailure;
  }
  return kOk;
}
