#pragma once

// Fixtures and slow reference routines shared by the unit tests. The
// references work from the raw InstanceData (parent walks, explicit shadow
// lists) and never consult TreeIndex or VerticalCostTable.

#include <algorithm>
#include <queue>
#include <set>
#include <vector>

#include "wtap/baseline.hpp"
#include "wtap/generators.hpp"
#include "wtap/instance.hpp"

namespace wtap::testing {

inline InstanceData make(int n, std::vector<std::pair<Vertex, Vertex>> edges, std::vector<LinkSpec> links,
                         Vertex root = 0) {
  InstanceData d;
  d.n = n;
  d.root = root;
  d.edges = std::move(edges);
  d.links = std::move(links);
  return d;
}

// r - x - y rooted at r = 0, single link {r, y} of weight 7.
inline InstanceData path3() { return make(3, {{0, 1}, {1, 2}}, {{0, 2, 7}}); }

// Star r = 0 with leaves a = 1, b = 2 and only the link {a, b} of weight 3.
inline InstanceData star_ab() { return make(3, {{0, 1}, {0, 2}}, {{1, 2, 3}}); }

inline InstanceData single_edge(Weight w = 5) { return make(2, {{0, 1}}, {{0, 1, w}}); }

// Parent array by BFS over the raw edge list.
inline std::vector<Vertex> naive_parents(const InstanceData& d) {
  std::vector<std::vector<Vertex>> adj(d.n);
  for (auto [a, b] : d.edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<Vertex> parent(d.n, -2);
  parent[d.root] = -1;
  std::queue<Vertex> q;
  q.push(d.root);
  while (!q.empty()) {
    Vertex v = q.front();
    q.pop();
    for (Vertex w : adj[v]) {
      if (parent[w] == -2) {
        parent[w] = v;
        q.push(w);
      }
    }
  }
  return parent;
}

inline std::vector<Vertex> naive_root_path(const std::vector<Vertex>& parent, Vertex v) {
  std::vector<Vertex> out;
  for (; v != -1; v = parent[v]) out.push_back(v);
  return out;
}

// Edge ids (child vertices) on the a-b path.
inline std::set<Vertex> naive_path_edges(const InstanceData& d, Vertex a, Vertex b) {
  const auto parent = naive_parents(d);
  auto pa = naive_root_path(parent, a);
  auto pb = naive_root_path(parent, b);
  while (pa.size() > 1 && pb.size() > 1 && pa[pa.size() - 2] == pb[pb.size() - 2]) {
    pa.pop_back();
    pb.pop_back();
  }
  std::set<Vertex> out;
  for (std::size_t i = 0; i + 1 < pa.size(); ++i) out.insert(pa[i]);
  for (std::size_t i = 0; i + 1 < pb.size(); ++i) out.insert(pb[i]);
  return out;
}

inline std::set<Vertex> naive_path_vertices(const InstanceData& d, Vertex a, Vertex b) {
  auto edges = naive_path_edges(d, a, b);
  const auto parent = naive_parents(d);
  std::set<Vertex> out{a, b};
  for (Vertex e : edges) {
    out.insert(e);
    out.insert(parent[e]);
  }
  return out;
}

inline std::set<Vertex> to_set(const EdgeSet& s) {
  std::set<Vertex> out;
  for (auto e = s.find_first(); e != EdgeSet::npos; e = s.find_next(e)) out.insert(static_cast<Vertex>(e));
  return out;
}

// Random feasible instance drawn through the public generator with
// parameters from a seeded stream.
inline InstanceData random_instance(std::mt19937_64& rng, int n_lo, int n_hi, int l_lo, int l_hi, Weight wmax = 10) {
  const int n = static_cast<int>(uniform_int(rng, n_lo, n_hi));
  const int links = static_cast<int>(uniform_int(rng, l_lo, l_hi));
  return gen_random(n, links, wmax, rng());
}

// Baseline shadows added to `pool` as U, and originals plus U as the search
// alphabet, exactly as the greedy sets up its first round.
struct UpSetup {
  std::vector<LinkId> up;
  std::vector<LinkId> search;
};

inline UpSetup baseline_setup(LinkPool& pool) {
  UpSetup s;
  s.up = materialize_paths(pool, cheapest_disjoint_uplink_cover(pool.instance()));
  std::sort(s.up.begin(), s.up.end());
  s.search = pool.original_ids();
  s.search.insert(s.search.end(), s.up.begin(), s.up.end());
  std::sort(s.search.begin(), s.search.end());
  s.search.erase(std::unique(s.search.begin(), s.search.end()), s.search.end());
  return s;
}

}  // namespace wtap::testing
