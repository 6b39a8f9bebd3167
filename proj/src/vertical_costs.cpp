#include "wtap/vertical_costs.hpp"

namespace wtap {

namespace {

bool better(const VerticalCost& a, const VerticalCost& b) {
  return a.cost < b.cost || (a.cost == b.cost && a.exists() && (!b.exists() || a.link < b.link));
}

}  // namespace

VerticalCostTable::VerticalCostTable(const Instance& inst) : tree_(&inst.tree()), rows_(inst.n()) {
  const auto& tree = inst.tree();
  // rows_[b][j]: cheapest link with an endpoint in D_b and apex depth <= j.
  for (int v = 0; v < inst.n(); ++v) rows_[v].assign(static_cast<std::size_t>(tree.depth(v)), VerticalCost{});

  // Seed each endpoint with the link itself at its apex depth, then take
  // prefix minima over depth and finally minima over children.
  std::vector<std::vector<VerticalCost>> own(inst.n());
  for (int v = 0; v < inst.n(); ++v) own[v].assign(static_cast<std::size_t>(tree.depth(v)), VerticalCost{});
  for (const auto& l : inst.links()) {
    const int top = tree.depth(tree.lca(l.a, l.b));
    const VerticalCost candidate{l.w, l.id};
    for (Vertex x : {l.a, l.b}) {
      if (tree.depth(x) == top) continue;  // x is the apex itself
      auto& slot = own[x][top];
      if (better(candidate, slot)) slot = candidate;
    }
  }
  const auto& order = tree.order();
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const Vertex b = *it;
    auto& row = rows_[b];
    for (std::size_t j = 0; j < row.size(); ++j) {
      VerticalCost best = own[b][j];
      if (j > 0 && better(row[j - 1], best)) best = row[j - 1];
      row[j] = best;
    }
    for (Vertex c : tree.children(b)) {
      const auto& child = rows_[c];
      for (std::size_t j = 0; j < row.size(); ++j) {
        if (better(child[j], row[j])) row[j] = child[j];
      }
    }
  }
}

std::optional<VerticalCost> VerticalCostTable::find(Vertex t, Vertex b) const {
  if (t == b || !tree_->is_ancestor(t, b)) return std::nullopt;
  const auto& entry = at(t, b);
  if (!entry.exists()) return std::nullopt;
  return entry;
}

}  // namespace wtap
