#include "wtap/generators.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace wtap {

namespace {

enum Stream : std::uint64_t { kTreeStream = 1, kLinkStream = 2, kWeightStream = 3 };

}  // namespace

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

std::mt19937_64 SeededStreams::stream(std::uint64_t tag) const {
  return std::mt19937_64(splitmix64(seed_ ^ splitmix64(tag)));
}

std::int64_t uniform_int(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  if (hi < lo) throw std::invalid_argument("empty range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(rng());
  const std::uint64_t threshold = (0 - span) % span;
  for (;;) {
    const std::uint64_t x = rng();
    if (x >= threshold) return lo + static_cast<std::int64_t>(x % span);
  }
}

InstanceData gen_random(int n, int link_count, Weight weight_max, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  if (weight_max < 1) throw std::invalid_argument("weight_max must be at least 1");
  SeededStreams streams(seed);
  auto tree_rng = streams.stream(kTreeStream);
  auto link_rng = streams.stream(kLinkStream);
  auto weight_rng = streams.stream(kWeightStream);

  InstanceData data;
  data.n = n;
  data.root = 0;
  std::vector<Vertex> parent(n, kNoVertex);
  for (Vertex v = 1; v < n; ++v) {
    parent[v] = static_cast<Vertex>(uniform_int(tree_rng, 0, v - 1));
    data.edges.emplace_back(parent[v], v);
  }

  const std::int64_t pairs = static_cast<std::int64_t>(n) * (n - 1) / 2;
  const std::int64_t wanted = std::min<std::int64_t>(std::max(link_count, 0), pairs);
  std::set<std::pair<Vertex, Vertex>> used;
  while (static_cast<std::int64_t>(used.size()) < wanted) {
    auto a = static_cast<Vertex>(uniform_int(link_rng, 0, n - 1));
    auto b = static_cast<Vertex>(uniform_int(link_rng, 0, n - 2));
    if (b >= a) ++b;
    if (!used.insert(std::minmax(a, b)).second) continue;
    data.links.push_back({a, b, uniform_int(weight_rng, 1, weight_max)});
  }

  // Difference-array coverage on the recursive tree (parents have smaller ids).
  std::vector<int> diff(n, 0);
  auto lca = [&](Vertex a, Vertex b) {
    std::set<Vertex> up;
    for (Vertex x = a; x != kNoVertex; x = parent[x]) up.insert(x);
    for (Vertex x = b;; x = parent[x]) {
      if (up.count(x)) return x;
    }
  };
  for (const auto& l : data.links) {
    ++diff[l.u];
    ++diff[l.v];
    diff[lca(l.u, l.v)] -= 2;
  }
  for (Vertex v = n - 1; v >= 1; --v) diff[parent[v]] += diff[v];
  for (Vertex v = 1; v < n; ++v) {
    if (diff[v] == 0) data.links.push_back({parent[v], v, weight_max});
  }
  return data;
}

InstanceData gen_fig2(int d, Weight M) {
  if (d < 2) throw std::invalid_argument("fig2 needs d >= 2");
  if (M < 1) throw std::invalid_argument("fig2 needs M >= 1");
  InstanceData data;
  data.n = 1 + 3 * d;
  data.root = 0;
  const int near_side = (d + 1) / 2;
  std::vector<Vertex> top(d);
  std::vector<Vertex> top_parent(d);
  for (int i = 0; i < d; ++i) {
    top[i] = 1 + 3 * i;
    // Each side is a chain hanging from r.
    const bool side_start = i == 0 || i == near_side;
    top_parent[i] = side_start ? 0 : top[i - 1];
    data.edges.emplace_back(top_parent[i], top[i]);
    data.edges.emplace_back(top[i], top[i] + 1);
    data.edges.emplace_back(top[i], top[i] + 2);
  }
  data.links.push_back({top[near_side - 1], top[d - 1], static_cast<Weight>(d) * M});
  for (int i = 0; i < d; ++i) {
    const Vertex s = top[i];
    data.links.push_back({top_parent[i], s + 1, 2 * M + 1});
    data.links.push_back({s + 2, s, 1});
    data.links.push_back({s + 1, s + 2, 1});
  }
  return data;
}

InstanceData gen_fig3(int m) {
  if (m < 1) throw std::invalid_argument("fig3 needs m >= 1");
  InstanceData data;
  const Vertex hub = m + 1;
  auto a = [&](int i) { return static_cast<Vertex>(m + 2 + i); };
  auto b = [&](int i) { return static_cast<Vertex>(2 * m + 3 + i); };
  data.n = 3 * m + 4;
  data.root = 0;
  for (int i = 1; i <= m; ++i) data.edges.emplace_back(i - 1, i);
  data.edges.emplace_back(m, hub);
  for (int i = 0; i <= m; ++i) data.edges.emplace_back(i, a(i));
  for (int i = 0; i <= m; ++i) data.edges.emplace_back(hub, b(i));
  for (int i = 0; i <= m; ++i) data.links.push_back({b(i), a(i), 1});
  for (int i = 1; i <= m; ++i) data.links.push_back({i - 1, a(i), 1});
  return data;
}

}  // namespace wtap
