#include "wtap/report.hpp"

namespace wtap {

OrderedJson link_json(const LinkPool& pool, LinkId id) {
  const auto& l = pool.link(id);
  OrderedJson j;
  j["id"] = id;
  j["u"] = l.a;
  j["v"] = l.b;
  j["w"] = l.w;
  if (l.shadow_of) j["shadow_of"] = *l.shadow_of;
  return j;
}

OrderedJson links_json(const LinkPool& pool, std::span<const LinkId> ids) {
  auto out = OrderedJson::array();
  for (LinkId id : ids) out.push_back(link_json(pool, id));
  return out;
}

OrderedJson to_json(const Instance& inst, const UpLinkSolution& sol) {
  OrderedJson j;
  j["algorithm"] = "uplink2";
  auto paths = OrderedJson::array();
  std::vector<LinkId> witnesses;
  for (const auto& p : sol.paths) {
    paths.push_back({{"top", p.top}, {"bottom", p.bottom}, {"link", p.link}, {"cost", p.cost}});
    witnesses.push_back(p.link);
  }
  std::sort(witnesses.begin(), witnesses.end());
  witnesses.erase(std::unique(witnesses.begin(), witnesses.end()), witnesses.end());
  j["paths"] = std::move(paths);
  j["weight"] = sol.weight;
  j["witness_links"] = witnesses;
  j["scale"] = inst.scale();
  return j;
}

OrderedJson to_json(const Solution& sol) {
  OrderedJson j;
  j["links"] = sol.links;
  j["weight"] = sol.weight;
  j["link_set_weight"] = sol.link_set_weight;
  return j;
}

OrderedJson to_json(const GreedyRun& run, const Rational& eps) {
  OrderedJson j;
  j["algorithm"] = "relgreedy";
  j["eps"] = eps.to_string();
  j["k"] = run.trace.k;
  j["solution"] = to_json(run.solution);
  j["weight"] = run.solution.weight;
  j["baseline_weight"] = run.trace.initial_up_weight;
  OrderedJson trace;
  trace["ratio_calls"] = run.trace.ratio_calls;
  auto steps = OrderedJson::array();
  for (const auto& s : run.trace.steps) {
    OrderedJson step;
    step["component"] = links_json(run.pool, s.component);
    step["dropped"] = links_json(run.pool, s.dropped);
    step["ratio"] = s.ratio.to_string();
    step["component_weight"] = s.component_weight;
    step["drop_weight"] = s.drop_weight;
    step["up_weight_before"] = s.up_weight_before;
    step["up_weight_after"] = s.up_weight_after;
    step["probes"] = s.probes;
    steps.push_back(std::move(step));
  }
  trace["steps"] = std::move(steps);
  if (run.trace.stop_ratio) trace["stopped_at_ratio"] = run.trace.stop_ratio->to_string();
  else trace["stopped_at_ratio"] = nullptr;
  j["trace"] = std::move(trace);
  j["scale"] = run.pool.instance().scale();
  return j;
}

OrderedJson to_json(const LinkPool& pool, const RatioResult& r, int k) {
  OrderedJson j;
  j["k"] = k;
  j["rho"] = r.rho.to_string();
  j["component"] = links_json(pool, r.component);
  j["drop"] = links_json(pool, r.drop);
  j["component_weight"] = r.component_weight;
  j["drop_weight"] = r.drop_weight;
  j["iterations"] = r.iterations;
  auto probes = OrderedJson::array();
  for (const auto& p : r.probes) {
    probes.push_back({{"rho", p.rho.to_string()}, {"at_least_optimum", p.at_least_optimum}, {"slack", p.slack.slack_string()}});
  }
  j["probes"] = std::move(probes);
  return j;
}

OrderedJson to_json(const LinkPool& pool, const SlackResult& s, int k) {
  OrderedJson j;
  j["k"] = k;
  j["rho"] = s.rho.to_string();
  j["component"] = links_json(pool, s.component);
  j["slack"] = s.slack_string();
  return j;
}

OrderedJson to_json(const CheckReport& report) {
  OrderedJson j;
  j["ok"] = report.ok();
  j["checks_run"] = report.checks_run;
  auto failures = OrderedJson::array();
  for (const auto& f : report.failures) failures.push_back({{"check", f.check}, {"detail", f.detail}});
  j["failures"] = std::move(failures);
  return j;
}

OrderedJson to_json(const LinkPool& pool, const Decomposition& d, const CheckReport& structure,
                    const CheckReport& outcome) {
  OrderedJson j;
  j["eps"] = d.eps.to_string();
  j["k"] = d.k;
  j["residue"] = d.residue;
  j["removed"] = d.removed;
  j["removed_weight"] = d.removed_weight;
  j["up_weight"] = d.up_weight;
  j["parts"] = d.parts;
  auto witnesses = OrderedJson::array();
  for (std::size_t i = 0; i < d.graph.up_links.size(); ++i) {
    const auto& w = d.graph.witnesses[i];
    OrderedJson item;
    item["up_link"] = link_json(pool, w.u);
    item["anchor"] = w.anchor;
    item["links"] = w.links;
    item["label"] = d.labels[i] ? OrderedJson(*d.labels[i]) : OrderedJson(nullptr);
    witnesses.push_back(std::move(item));
  }
  j["witnesses"] = std::move(witnesses);
  auto arcs = OrderedJson::array();
  for (const auto& a : d.graph.arcs) {
    arcs.push_back({{"from", d.graph.nodes[a.from]}, {"to", d.graph.nodes[a.to]}, {"up_link", d.graph.up_links[a.owner]}});
  }
  j["arcs"] = std::move(arcs);
  j["structure_checks"] = to_json(structure);
  j["decomposition_checks"] = to_json(outcome);
  return j;
}

}  // namespace wtap
