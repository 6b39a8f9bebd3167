#include "wtap/greedy.hpp"

#include <algorithm>
#include <map>

namespace wtap {

namespace {

std::vector<LinkId> sorted_unique(std::vector<LinkId> ids) {
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return ids;
}

// Cheapest shadow for every vertex pair on some link path.
std::vector<LinkId> all_shadows(LinkPool& pool) {
  const auto& inst = pool.instance();
  std::map<std::pair<Vertex, Vertex>, LinkId> best;
  for (const auto& l : inst.links()) {
    const auto verts = path_vertices(inst.tree(), l.a, l.b);
    for (std::size_t i = 0; i < verts.size(); ++i) {
      for (std::size_t j = i + 1; j < verts.size(); ++j) {
        const auto key = std::minmax(verts[i], verts[j]);
        auto [it, inserted] = best.emplace(key, l.id);
        if (!inserted && l.w < inst.links()[it->second].w) it->second = l.id;
      }
    }
  }
  std::vector<LinkId> ids;
  ids.reserve(best.size());
  for (const auto& [key, original] : best) ids.push_back(pool.add_shadow(original, key.first, key.second));
  return sorted_unique(std::move(ids));
}

}  // namespace

int thinness_for(const Rational& eps) {
  if (eps <= Rational(0)) throw InvalidEpsilon("epsilon must be positive, got " + eps.to_string());
  return (Rational(2) / eps).ceil();
}

Solution to_solution(const LinkPool& pool, std::span<const LinkId> chosen) {
  Solution sol;
  const auto ids = sorted_unique({chosen.begin(), chosen.end()});
  for (LinkId id : ids) {
    sol.weight += pool.weight(id);
    sol.links.push_back(pool.original_of(id));
  }
  sol.links = sorted_unique(std::move(sol.links));
  for (LinkId id : sol.links) sol.link_set_weight += pool.weight(id);
  return sol;
}

GreedyRun relative_greedy(const Instance& inst, const Rational& eps, const GreedyOptions& options) {
  const int k_eps = thinness_for(eps);
  const int k = options.k_override.value_or(k_eps);
  if (k < 1) throw std::invalid_argument("k override must be at least 1");

  GreedyRun run{{}, {}, cheapest_disjoint_uplink_cover(inst), LinkPool(inst), {}};
  auto& pool = run.pool;
  auto& trace = run.trace;
  trace.k = k;
  std::vector<LinkId> up = sorted_unique(materialize_paths(pool, run.baseline));
  trace.initial_up_weight = pool.weight(up);

  std::vector<LinkId> fixed_space;
  if (options.full_shadows) fixed_space = all_shadows(pool);

  std::vector<LinkId> chosen;
  while (!up.empty()) {
    std::vector<LinkId> search = fixed_space;
    if (!options.full_shadows) {
      search = pool.original_ids();
      search.insert(search.end(), up.begin(), up.end());
    } else {
      search.insert(search.end(), up.begin(), up.end());
    }
    search = sorted_unique(std::move(search));

    RatioResult best = best_ratio_component(pool, up, k, search);
    ++trace.ratio_calls;
    if (best.rho >= Rational(1)) {
      trace.stop_ratio = best.rho;
      break;
    }
    GreedyStep step;
    step.component = best.component;
    step.dropped = best.drop;
    step.ratio = best.rho;
    step.component_weight = best.component_weight;
    step.drop_weight = best.drop_weight;
    step.up_weight_before = pool.weight(up);
    step.probes = static_cast<int>(best.probes.size());
    chosen.insert(chosen.end(), best.component.begin(), best.component.end());
    std::vector<LinkId> rest;
    std::set_difference(up.begin(), up.end(), best.drop.begin(), best.drop.end(), std::back_inserter(rest));
    up = std::move(rest);
    step.up_weight_after = pool.weight(up);
    trace.steps.push_back(std::move(step));
  }
  chosen.insert(chosen.end(), up.begin(), up.end());
  run.chosen = sorted_unique(std::move(chosen));
  run.solution = to_solution(pool, run.chosen);
  return run;
}

Solution two_approx_only(const Instance& inst) {
  LinkPool pool(inst);
  const auto ids = materialize_paths(pool, cheapest_disjoint_uplink_cover(inst));
  return to_solution(pool, ids);
}

}  // namespace wtap
