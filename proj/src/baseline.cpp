#include "wtap/baseline.hpp"

#include <algorithm>

namespace wtap {

namespace {

// Sum of weights where some terms may be infinite.
struct PartialSum {
  Weight finite = 0;
  int infinite = 0;

  void add(Weight w) {
    if (w >= kInfiniteWeight) ++infinite;
    else finite += w;
  }
  // The sum with one term `w` taken out.
  Weight without(Weight w) const {
    if (w >= kInfiniteWeight) return infinite > 1 ? kInfiniteWeight : finite;
    return infinite > 0 ? kInfiniteWeight : finite - w;
  }
  Weight total() const { return infinite > 0 ? kInfiniteWeight : finite; }
};

Weight plus(Weight a, Weight b) { return (a >= kInfiniteWeight || b >= kInfiniteWeight) ? kInfiniteWeight : a + b; }

constexpr int kTerminate = -1;

}  // namespace

UpLinkSolution cheapest_disjoint_uplink_cover(const Instance& inst) {
  return cheapest_disjoint_uplink_cover(inst, VerticalCostTable(inst));
}

UpLinkSolution cheapest_disjoint_uplink_cover(const Instance& inst, const VerticalCostTable& costs) {
  const auto& tree = inst.tree();
  const int n = inst.n();
  // h[c][j]: cheapest cover of D_c plus edge c when the path through edge c
  // has its top at depth j. choice[c][j] is kTerminate or the index of the
  // child the path continues into.
  std::vector<std::vector<Weight>> h(n);
  std::vector<std::vector<int>> choice(n);
  const auto& order = tree.order();
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const Vertex c = *it;
    if (c == tree.root()) continue;
    const auto& kids = tree.children(c);
    const int depth = tree.depth(c);
    PartialSum below;
    for (Vertex d : kids) below.add(h[d][depth]);
    h[c].assign(depth, kInfiniteWeight);
    choice[c].assign(depth, kTerminate);
    for (int j = 0; j < depth; ++j) {
      const Vertex t = tree.ancestor_at_depth(c, j);
      Weight best = plus(costs.at(t, c).cost, below.total());
      int pick = kTerminate;
      for (std::size_t i = 0; i < kids.size(); ++i) {
        const Vertex d = kids[i];
        const Weight candidate = plus(h[d][j], below.without(h[d][depth]));
        if (candidate < best) {
          best = candidate;
          pick = static_cast<int>(i);
        }
      }
      h[c][j] = best;
      choice[c][j] = pick;
    }
  }

  UpLinkSolution sol;
  const Vertex root = tree.root();
  // Stack of (vertex c, top t) meaning: the path through edge c has top t.
  std::vector<std::pair<Vertex, Vertex>> stack;
  for (Vertex c : tree.children(root)) {
    if (h[c][0] >= kInfiniteWeight) throw Infeasible("edge {" + std::to_string(root) + "," + std::to_string(c) + "} subtree cannot be covered by vertical paths");
    stack.emplace_back(c, root);
  }
  while (!stack.empty()) {
    auto [c, t] = stack.back();
    stack.pop_back();
    const auto& kids = tree.children(c);
    const int pick = choice[c][tree.depth(t)];
    if (pick == kTerminate) {
      const auto& vc = costs.at(t, c);
      sol.paths.push_back({t, c, vc.link, vc.cost});
      sol.weight += vc.cost;
    }
    for (std::size_t i = 0; i < kids.size(); ++i) {
      stack.emplace_back(kids[i], static_cast<int>(i) == pick ? t : c);
    }
  }
  std::sort(sol.paths.begin(), sol.paths.end(), [](const auto& a, const auto& b) { return a.bottom < b.bottom; });
  return sol;
}

bool is_valid_uplink_solution(const Instance& inst, const VerticalCostTable& costs, const UpLinkSolution& sol) {
  const auto& tree = inst.tree();
  EdgeSet seen = inst.empty_edges();
  Weight total = 0;
  for (const auto& p : sol.paths) {
    auto entry = costs.find(p.top, p.bottom);
    if (!entry || entry->cost != p.cost || entry->link != p.link) return false;
    for (Vertex x = p.bottom; x != p.top; x = tree.parent(x)) {
      if (seen.test(static_cast<std::size_t>(x))) return false;
      seen.set(static_cast<std::size_t>(x));
    }
    total += p.cost;
  }
  return total == sol.weight && seen == inst.all_edges();
}

std::vector<LinkId> materialize_paths(LinkPool& pool, const UpLinkSolution& sol) {
  std::vector<LinkId> ids;
  ids.reserve(sol.paths.size());
  for (const auto& p : sol.paths) ids.push_back(pool.add_shadow(p.link, p.top, p.bottom));
  return ids;
}

}  // namespace wtap
