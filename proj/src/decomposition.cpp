#include "wtap/decomposition.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace wtap {

namespace {

EdgeSet union_of(const LinkPool& pool, std::span<const LinkId> links) { return covered_edges(pool, links); }

bool covers(const LinkPool& pool, std::span<const LinkId> links, const EdgeSet& target) {
  return target.is_subset_of(union_of(pool, links));
}

std::vector<LinkId> apex_closed(const LinkPool& pool, std::span<const LinkId> cover, Vertex v) {
  const auto& tree = pool.instance().tree();
  std::vector<LinkId> out;
  for (LinkId id : cover) {
    if (tree.is_ancestor(v, pool.apex(id))) out.push_back(id);
  }
  return out;
}

// Depth of the highest edge in a nonempty edge set.
int top_depth(const TreeIndex& tree, const EdgeSet& edges) {
  int best = tree.size();
  for (auto e = edges.find_first(); e != EdgeSet::npos; e = edges.find_next(e)) {
    best = std::min(best, tree.depth(static_cast<Vertex>(e)));
  }
  return best;
}

std::string ids(std::span<const LinkId> links) {
  std::string out = "{";
  for (std::size_t i = 0; i < links.size(); ++i) out += (i ? "," : "") + std::to_string(links[i]);
  return out + "}";
}

struct Components {
  explicit Components(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
  std::vector<int> parent;
};

}  // namespace

CoverWitness compute_cover_witness(const LinkPool& pool, std::span<const LinkId> cover, LinkId u) {
  if (!pool.is_uplink(u)) throw std::invalid_argument("witness requested for a link that is not an up-link");
  const auto& tree = pool.instance().tree();
  const EdgeSet& target = pool.path(u);
  const Vertex t = pool.apex(u);

  CoverWitness w;
  w.u = u;
  for (Vertex v : path_vertices(tree, tree.root(), t)) {
    if (!covers(pool, apex_closed(pool, cover, v), target)) break;
    w.anchor = v;
  }
  if (w.anchor == kNoVertex) throw std::invalid_argument("cover does not cover the up-link " + std::to_string(u));

  std::vector<LinkId> chosen = apex_closed(pool, cover, w.anchor);
  std::sort(chosen.begin(), chosen.end());
  chosen.erase(std::unique(chosen.begin(), chosen.end()), chosen.end());
  for (bool shrunk = true; shrunk;) {
    shrunk = false;
    for (std::size_t i = 0; i < chosen.size(); ++i) {
      std::vector<LinkId> rest = chosen;
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
      if (covers(pool, rest, target)) {
        chosen = std::move(rest);
        shrunk = true;
        break;
      }
    }
  }

  std::vector<std::pair<int, std::size_t>> order;
  std::vector<EdgeSet> own;
  for (std::size_t i = 0; i < chosen.size(); ++i) {
    std::vector<LinkId> others = chosen;
    others.erase(others.begin() + static_cast<std::ptrdiff_t>(i));
    EdgeSet mine = target & pool.path(chosen[i]);
    mine -= union_of(pool, others);
    order.emplace_back(top_depth(tree, mine), i);
    own.push_back(std::move(mine));
  }
  std::sort(order.begin(), order.end());
  for (auto [depth, i] : order) {
    w.links.push_back(chosen[i]);
    w.own_edges.push_back(std::move(own[i]));
  }
  return w;
}

int DependencyGraph::index_of(LinkId id) const {
  auto it = std::lower_bound(nodes.begin(), nodes.end(), id);
  if (it == nodes.end() || *it != id) return -1;
  return static_cast<int>(it - nodes.begin());
}

std::vector<int> parent_arcs(int node_count, std::span<const OwnedArc> arcs) {
  std::vector<int> parent(node_count, -1);
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    auto& slot = parent[arcs[i].to];
    if (slot != -1) throw NotABranching("node " + std::to_string(arcs[i].to) + " has two incoming arcs");
    slot = static_cast<int>(i);
  }
  // 0 unvisited, 1 on the current walk, 2 done.
  std::vector<char> state(node_count, 0);
  for (int start = 0; start < node_count; ++start) {
    std::vector<int> walk;
    int x = start;
    while (x != -1 && state[x] == 0) {
      state[x] = 1;
      walk.push_back(x);
      x = parent[x] == -1 ? -1 : arcs[parent[x]].from;
    }
    if (x != -1 && state[x] == 1) throw NotABranching("dependency graph has a cycle through node " + std::to_string(x));
    for (int y : walk) state[y] = 2;
  }
  return parent;
}

std::map<int, int> label_owner_paths(int node_count, std::span<const OwnedArc> arcs) {
  const auto parent = parent_arcs(node_count, arcs);
  std::vector<int> depth(node_count, -1);
  for (int x = 0; x < node_count; ++x) {
    std::vector<int> walk;
    int y = x;
    while (depth[y] == -1 && parent[y] != -1) {
      walk.push_back(y);
      y = arcs[parent[y]].from;
    }
    if (depth[y] == -1) depth[y] = 0;
    for (auto it = walk.rbegin(); it != walk.rend(); ++it) depth[*it] = depth[arcs[parent[*it]].from] + 1;
  }

  // First node of each owner's path: a tail that is not a head of the same owner.
  std::map<int, std::set<int>> heads;
  for (const auto& a : arcs) heads[a.owner].insert(a.to);
  std::map<int, int> start;
  for (const auto& a : arcs) {
    if (!heads[a.owner].count(a.from)) start[a.owner] = a.from;
  }
  std::vector<std::pair<int, int>> by_depth;
  for (auto [owner, node] : start) by_depth.emplace_back(depth[node], owner);
  std::sort(by_depth.begin(), by_depth.end());

  std::map<int, int> label;
  for (auto [d, owner] : by_depth) {
    const int in = parent[start[owner]];
    label[owner] = in == -1 ? 0 : label.at(arcs[in].owner) + 1;
  }
  return label;
}

int max_owners_on_path(int node_count, std::span<const OwnedArc> arcs) {
  const auto parent = parent_arcs(node_count, arcs);
  int best = 0;
  for (int x = 0; x < node_count; ++x) {
    std::set<int> owners;
    for (int y = x; parent[y] != -1; y = arcs[parent[y]].from) owners.insert(arcs[parent[y]].owner);
    best = std::max(best, static_cast<int>(owners.size()));
  }
  return best;
}

std::vector<std::vector<int>> weak_components(int node_count, std::span<const OwnedArc> arcs) {
  Components comps(node_count);
  for (const auto& a : arcs) comps.unite(a.from, a.to);
  std::map<int, std::vector<int>> groups;
  for (int x = 0; x < node_count; ++x) groups[comps.find(x)].push_back(x);
  std::vector<std::vector<int>> out;
  for (auto& [root, members] : groups) out.push_back(std::move(members));
  std::sort(out.begin(), out.end());
  return out;
}

DependencyGraph build_dependency_graph(const LinkPool& pool, std::span<const LinkId> cover,
                                       std::span<const LinkId> up_links) {
  DependencyGraph g;
  g.nodes.assign(cover.begin(), cover.end());
  std::sort(g.nodes.begin(), g.nodes.end());
  g.nodes.erase(std::unique(g.nodes.begin(), g.nodes.end()), g.nodes.end());
  g.up_links.assign(up_links.begin(), up_links.end());
  for (std::size_t i = 0; i < g.up_links.size(); ++i) {
    g.witnesses.push_back(compute_cover_witness(pool, g.nodes, g.up_links[i]));
    const auto& links = g.witnesses.back().links;
    for (std::size_t j = 0; j + 1 < links.size(); ++j) {
      g.arcs.push_back({g.index_of(links[j]), g.index_of(links[j + 1]), static_cast<int>(i)});
    }
  }
  parent_arcs(static_cast<int>(g.nodes.size()), g.arcs);
  return g;
}

Decomposition decompose(const LinkPool& pool, std::span<const LinkId> cover, std::span<const LinkId> up_links,
                        const Rational& eps) {
  if (eps <= Rational(0)) throw std::invalid_argument("epsilon must be positive");
  Decomposition d;
  d.eps = eps;
  d.k = (Rational(1) / eps).ceil();
  d.graph = build_dependency_graph(pool, cover, up_links);
  const auto& g = d.graph;
  const int nodes = static_cast<int>(g.nodes.size());

  const auto labels = label_owner_paths(nodes, g.arcs);
  d.labels.resize(g.up_links.size());
  std::vector<Weight> residue_weight(d.k, 0);
  for (auto [owner, label] : labels) {
    d.labels[owner] = label;
    residue_weight[label % d.k] += pool.weight(g.up_links[owner]);
  }
  d.residue = static_cast<int>(std::min_element(residue_weight.begin(), residue_weight.end()) - residue_weight.begin());

  std::vector<char> in_r(g.up_links.size(), 0);
  for (std::size_t i = 0; i < g.up_links.size(); ++i) {
    if (d.labels[i] && *d.labels[i] % d.k == d.residue) {
      in_r[i] = 1;
      d.removed.push_back(g.up_links[i]);
    }
  }
  std::sort(d.removed.begin(), d.removed.end());
  d.removed_weight = pool.weight(d.removed);
  d.up_weight = pool.weight(g.up_links);

  std::vector<OwnedArc> kept;
  for (const auto& a : g.arcs) {
    if (!in_r[a.owner]) kept.push_back(a);
  }
  for (const auto& comp : weak_components(nodes, kept)) {
    std::vector<LinkId> part;
    for (int x : comp) part.push_back(g.nodes[x]);
    d.parts.push_back(std::move(part));
  }
  return d;
}

CheckReport verify_dependency_graph(const LinkPool& pool, std::span<const LinkId> cover,
                                     std::span<const LinkId> up_links) {
  const auto& tree = pool.instance().tree();
  CheckReport report;
  auto check = [&](bool ok, const char* name, const std::string& detail) {
    ++report.checks_run;
    if (!ok) report.failures.push_back({name, detail});
  };

  DependencyGraph g;
  try {
    g = build_dependency_graph(pool, cover, up_links);
    check(true, "branching", "");
  } catch (const NotABranching& e) {
    check(false, "branching", e.what());
    return report;
  }
  const int nodes = static_cast<int>(g.nodes.size());

  for (const auto& w : g.witnesses) {
    const std::string who = "u=" + std::to_string(w.u) + " F_u=" + ids(w.links);
    const EdgeSet& target = pool.path(w.u);
    check(covers(pool, w.links, target), "witness_covers", who);
    for (std::size_t i = 0; i < w.links.size(); ++i) {
      std::vector<LinkId> rest = w.links;
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
      check(!covers(pool, rest, target), "witness_minimal", who + " without " + std::to_string(w.links[i]));
      check(tree.is_ancestor(w.anchor, pool.apex(w.links[i])), "witness_apex_below_anchor", who);
    }
    const Vertex t = pool.apex(w.u);
    if (w.anchor != t) {
      const Vertex below = tree.ancestor_at_depth(t, tree.depth(w.anchor) + 1);
      check(!covers(pool, apex_closed(pool, g.nodes, below), target), "witness_anchor_lowest", who);
    }
    int previous_depth = -1;
    for (std::size_t i = 0; i < w.own_edges.size(); ++i) {
      const auto& own = w.own_edges[i];
      check(own.any(), "unique_part_nonempty", who + " link " + std::to_string(w.links[i]));
      // Contiguous: the edges form one vertical chain.
      std::vector<Vertex> chain;
      for (auto e = own.find_first(); e != EdgeSet::npos; e = own.find_next(e)) chain.push_back(static_cast<Vertex>(e));
      std::sort(chain.begin(), chain.end(), [&](Vertex a, Vertex b) { return tree.depth(a) < tree.depth(b); });
      bool contiguous = true;
      for (std::size_t j = 1; j < chain.size(); ++j) contiguous = contiguous && tree.parent(chain[j]) == chain[j - 1];
      check(contiguous, "unique_part_contiguous", who + " link " + std::to_string(w.links[i]));
      const int depth = chain.empty() ? previous_depth : tree.depth(chain.front());
      check(depth > previous_depth, "witness_order", who);
      previous_depth = depth;
    }
    check(is_k_thin(pool, w.links, 2), "witness_two_thin", who);
  }

  for (const auto& a : g.arcs) {
    const auto& w = g.witnesses[a.owner];
    const LinkId l1 = g.nodes[a.from];
    const LinkId l2 = g.nodes[a.to];
    const std::string who = "arc " + std::to_string(l1) + "->" + std::to_string(l2) + " of u=" + std::to_string(w.u);
    const Vertex apex1 = pool.apex(l1);
    const Vertex apex2 = pool.apex(l2);
    check(apex2 != tree.root() && pool.path(w.u).test(static_cast<std::size_t>(apex2)), "arc_owner_covers_entry", who);
    check(apex1 != apex2 && tree.is_ancestor(apex1, apex2), "arc_apex_strict_ancestor", who);
    const auto pos = std::find(w.links.begin(), w.links.end(), l1) - w.links.begin();
    const auto& own = w.own_edges[static_cast<std::size_t>(pos)];
    bool between = true;
    for (auto e = own.find_first(); e != EdgeSet::npos; e = own.find_next(e)) {
      const auto x = static_cast<Vertex>(e);
      between = between && x != apex1 && tree.is_ancestor(apex1, x) && tree.is_ancestor(x, apex2);
    }
    check(between, "arc_unique_part_between_apexes", who);
  }

  const auto parent = parent_arcs(nodes, g.arcs);
  auto is_graph_ancestor = [&](int a, int b) {
    for (int x = b;; x = g.arcs[parent[x]].from) {
      if (x == a) return true;
      if (parent[x] == -1) return false;
    }
  };
  for (const auto& comp : weak_components(nodes, g.arcs)) {
    std::vector<LinkId> links;
    std::vector<std::vector<Vertex>> verts;
    for (int x : comp) {
      links.push_back(g.nodes[x]);
      auto v = path_vertices(tree, pool.link(g.nodes[x]).a, pool.link(g.nodes[x]).b);
      std::sort(v.begin(), v.end());
      verts.push_back(std::move(v));
    }
    std::set<Vertex> apexes;
    for (std::size_t i = 0; i < comp.size(); ++i) {
      apexes.insert(pool.apex(links[i]));
      for (std::size_t j = i + 1; j < comp.size(); ++j) {
        std::vector<Vertex> shared;
        std::set_intersection(verts[i].begin(), verts[i].end(), verts[j].begin(), verts[j].end(), std::back_inserter(shared));
        if (shared.empty()) continue;
        check(is_graph_ancestor(comp[i], comp[j]) || is_graph_ancestor(comp[j], comp[i]), "shared_vertex_ancestry",
              "links " + std::to_string(links[i]) + " and " + std::to_string(links[j]));
      }
    }
    check(apexes.size() == comp.size(), "distinct_apexes", "component " + ids(links));

    std::vector<OwnedArc> inner;
    std::vector<int> local(nodes, -1);
    for (std::size_t i = 0; i < comp.size(); ++i) local[comp[i]] = static_cast<int>(i);
    for (const auto& a : g.arcs) {
      if (local[a.from] != -1) inner.push_back({local[a.from], local[a.to], a.owner});
    }
    const int k = max_owners_on_path(static_cast<int>(comp.size()), inner);
    check(thickness(pool, links) <= k + 1, "component_thinness",
          "component " + ids(links) + " thickness " + std::to_string(thickness(pool, links)) + " > " + std::to_string(k + 1));
  }
  return report;
}

CheckReport verify_decomposition(const LinkPool& pool, std::span<const LinkId> cover, std::span<const LinkId> up_links,
                                 const Decomposition& d) {
  CheckReport report;
  auto check = [&](bool ok, const char* name, const std::string& detail) {
    ++report.checks_run;
    if (!ok) report.failures.push_back({name, detail});
  };
  const Weight up_weight = pool.weight(up_links);
  check(static_cast<Int128>(d.removed_weight) * d.eps.den() <= static_cast<Int128>(d.eps.num()) * up_weight,
        "removed_weight_bound", "w(R)=" + std::to_string(d.removed_weight) + " w(U)=" + std::to_string(up_weight));

  std::vector<LinkId> all;
  for (const auto& part : d.parts) {
    all.insert(all.end(), part.begin(), part.end());
    check(is_k_thin(pool, part, d.k), "part_thin", "part " + ids(part) + " not " + std::to_string(d.k) + "-thin");
  }
  std::sort(all.begin(), all.end());
  std::vector<LinkId> expected(cover.begin(), cover.end());
  std::sort(expected.begin(), expected.end());
  expected.erase(std::unique(expected.begin(), expected.end()), expected.end());
  check(all == expected, "parts_partition_cover", "parts " + ids(all) + " vs cover " + ids(expected));

  for (std::size_t i = 0; i < d.graph.up_links.size(); ++i) {
    const LinkId u = d.graph.up_links[i];
    if (std::binary_search(d.removed.begin(), d.removed.end(), u)) continue;
    const auto& witness = d.graph.witnesses[i].links;
    bool found = false;
    for (const auto& part : d.parts) {
      const bool holds_witness = std::all_of(witness.begin(), witness.end(), [&](LinkId l) {
        return std::binary_search(part.begin(), part.end(), l);
      });
      if (holds_witness && covers(pool, part, pool.path(u))) found = true;
    }
    check(found, "surviving_uplink_covered", "u=" + std::to_string(u));
  }

  Weight dropped = 0;
  for (const auto& part : d.parts) dropped += pool.weight(drop_set(pool, up_links, part));
  check(dropped >= up_weight - d.removed_weight, "drop_averaging",
        "sum of drops " + std::to_string(dropped) + " < " + std::to_string(up_weight - d.removed_weight));
  return report;
}

}  // namespace wtap
