#include "wtap/instance.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

namespace wtap {

const char* to_string(IssueCode code) {
  switch (code) {
    case IssueCode::NotATree: return "NotATree";
    case IssueCode::NonpositiveWeight: return "NonpositiveWeight";
    case IssueCode::InvalidLink: return "InvalidLink";
    case IssueCode::UncoverableEdge: return "UncoverableEdge";
  }
  return "Unknown";
}

namespace {

std::string describe(const std::vector<ValidationIssue>& issues) {
  std::ostringstream out;
  out << "invalid instance:";
  for (const auto& issue : issues) out << "\n  " << to_string(issue.code) << ": " << issue.message;
  return out.str();
}

// Union-find used only to detect cycles / disconnection while validating.
struct Components {
  explicit Components(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
  std::vector<int> parent;
};

}  // namespace

ValidationError::ValidationError(std::vector<ValidationIssue> issues)
    : std::runtime_error(describe(issues)), issues_(std::move(issues)) {}

std::vector<ValidationIssue> validate(const InstanceData& data) {
  std::vector<ValidationIssue> issues;
  auto tree_issue = [&](std::int64_t subject, std::string message) {
    issues.push_back({IssueCode::NotATree, subject, std::move(message)});
  };

  if (data.n < 1) {
    tree_issue(-1, "instance needs at least one vertex");
    return issues;
  }
  if (data.root < 0 || data.root >= data.n) tree_issue(data.root, "root out of range");
  if (static_cast<int>(data.edges.size()) != data.n - 1) {
    tree_issue(-1, "expected " + std::to_string(data.n - 1) + " edges, got " + std::to_string(data.edges.size()));
  }
  Components comps(data.n);
  for (std::size_t i = 0; i < data.edges.size(); ++i) {
    auto [a, b] = data.edges[i];
    if (a < 0 || b < 0 || a >= data.n || b >= data.n) {
      tree_issue(static_cast<std::int64_t>(i), "edge " + std::to_string(i) + " has an endpoint out of range");
      continue;
    }
    if (a == b) {
      tree_issue(static_cast<std::int64_t>(i), "edge " + std::to_string(i) + " is a self-loop");
      continue;
    }
    if (!comps.unite(a, b)) {
      tree_issue(static_cast<std::int64_t>(i),
                 "edge " + std::to_string(i) + " {" + std::to_string(a) + "," + std::to_string(b) + "} closes a cycle");
    }
  }
  for (int v = 1; v < data.n; ++v) {
    if (comps.find(v) != comps.find(0)) {
      tree_issue(v, "vertex " + std::to_string(v) + " is disconnected from vertex 0");
      break;
    }
  }

  bool links_ok = true;
  for (std::size_t i = 0; i < data.links.size(); ++i) {
    const auto& l = data.links[i];
    const auto idx = static_cast<std::int64_t>(i);
    if (l.u < 0 || l.v < 0 || l.u >= data.n || l.v >= data.n) {
      issues.push_back({IssueCode::InvalidLink, idx, "link " + std::to_string(i) + " has an endpoint out of range"});
      links_ok = false;
    } else if (l.u == l.v) {
      issues.push_back({IssueCode::InvalidLink, idx, "link " + std::to_string(i) + " is a loop"});
      links_ok = false;
    }
    if (l.w <= 0) {
      issues.push_back({IssueCode::NonpositiveWeight, idx,
                        "link " + std::to_string(i) + " has weight " + std::to_string(l.w)});
    }
  }

  if (!issues.empty() && (!links_ok || std::any_of(issues.begin(), issues.end(), [](const auto& x) {
        return x.code == IssueCode::NotATree;
      }))) {
    return issues;
  }

  // Coverage: mark each link on its path with a difference array over the
  // rooted tree (+1 at both endpoints, -2 at the apex) and accumulate upward.
  TreeIndex tree(data.n, data.root, data.edges);
  std::vector<std::int64_t> diff(data.n, 0);
  for (const auto& l : data.links) {
    ++diff[l.u];
    ++diff[l.v];
    diff[tree.lca(l.u, l.v)] -= 2;
  }
  const auto& order = tree.order();
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    Vertex v = *it;
    if (v == tree.root()) continue;
    if (diff[v] == 0) {
      issues.push_back({IssueCode::UncoverableEdge, v,
                        "edge {" + std::to_string(tree.parent(v)) + "," + std::to_string(v) + "} is not covered by any link"});
    }
    diff[tree.parent(v)] += diff[v];
  }
  std::sort(issues.begin(), issues.end(), [](const auto& x, const auto& y) {
    return std::tie(x.code, x.subject) < std::tie(y.code, y.subject);
  });
  return issues;
}

TreeIndex::TreeIndex(int n, Vertex root, const std::vector<std::pair<Vertex, Vertex>>& edges)
    : root_(root), parent_(n, kNoVertex), depth_(n, 0), children_(n), tin_(n, 0), tout_(n, 0) {
  std::vector<std::vector<Vertex>> adj(n);
  for (auto [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  for (auto& nb : adj) std::sort(nb.begin(), nb.end());

  order_.reserve(n);
  std::vector<char> seen(n, 0);
  std::queue<Vertex> queue;
  queue.push(root);
  seen[root] = 1;
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop();
    order_.push_back(v);
    for (Vertex w : adj[v]) {
      if (seen[w]) continue;
      seen[w] = 1;
      parent_[w] = v;
      depth_[w] = depth_[v] + 1;
      children_[v].push_back(w);
      queue.push(w);
    }
  }

  // Iterative DFS for the descendant intervals.
  int clock = 0;
  std::vector<std::pair<Vertex, std::size_t>> stack{{root, 0}};
  tin_[root] = clock++;
  while (!stack.empty()) {
    auto& [v, next] = stack.back();
    if (next < children_[v].size()) {
      Vertex c = children_[v][next++];
      tin_[c] = clock++;
      stack.emplace_back(c, 0);
    } else {
      tout_[v] = clock - 1;
      stack.pop_back();
    }
  }

  int levels = 1;
  while ((1 << levels) < n) ++levels;
  up_.assign(levels, std::vector<Vertex>(n));
  for (int v = 0; v < n; ++v) up_[0][v] = parent_[v] == kNoVertex ? v : parent_[v];
  for (int j = 1; j < levels; ++j) {
    for (int v = 0; v < n; ++v) up_[j][v] = up_[j - 1][up_[j - 1][v]];
  }
}

Vertex TreeIndex::ancestor_at_depth(Vertex v, int d) const {
  int lift = depth_[v] - d;
  for (int j = 0; lift > 0; ++j, lift >>= 1) {
    if (lift & 1) v = up_[j][v];
  }
  return v;
}

Vertex TreeIndex::lca(Vertex a, Vertex b) const {
  if (is_ancestor(a, b)) return a;
  if (is_ancestor(b, a)) return b;
  for (int j = static_cast<int>(up_.size()) - 1; j >= 0; --j) {
    if (!is_ancestor(up_[j][a], b)) a = up_[j][a];
  }
  return parent_[a];
}

Instance Instance::build(InstanceData data) {
  auto issues = validate(data);
  if (!issues.empty()) throw ValidationError(std::move(issues));
  Instance inst;
  inst.tree_ = TreeIndex(data.n, data.root, data.edges);
  inst.links_.reserve(data.links.size());
  for (std::size_t i = 0; i < data.links.size(); ++i) {
    const auto& l = data.links[i];
    inst.links_.push_back(Link{static_cast<LinkId>(i), l.u, l.v, l.w, std::nullopt});
  }
  inst.data_ = std::move(data);
  return inst;
}

EdgeSet Instance::all_edges() const {
  EdgeSet all(static_cast<std::size_t>(data_.n));
  all.set();
  all.reset(static_cast<std::size_t>(data_.root));
  return all;
}

Vertex apex(const Instance& inst, Vertex a, Vertex b) { return inst.tree().lca(a, b); }

EdgeSet link_path(const Instance& inst, Vertex a, Vertex b) {
  const auto& tree = inst.tree();
  EdgeSet path = inst.empty_edges();
  const Vertex top = tree.lca(a, b);
  for (Vertex x : {a, b}) {
    for (; x != top; x = tree.parent(x)) path.set(static_cast<std::size_t>(x));
  }
  return path;
}

bool is_uplink(const Instance& inst, Vertex a, Vertex b) {
  const Vertex top = apex(inst, a, b);
  return top == a || top == b;
}

std::vector<Vertex> path_vertices(const TreeIndex& tree, Vertex a, Vertex b) {
  const Vertex top = tree.lca(a, b);
  std::vector<Vertex> left;
  std::vector<Vertex> right;
  for (Vertex x = a; x != top; x = tree.parent(x)) left.push_back(x);
  for (Vertex x = b; x != top; x = tree.parent(x)) right.push_back(x);
  left.push_back(top);
  left.insert(left.end(), right.rbegin(), right.rend());
  return left;
}

LinkPool::LinkPool(const Instance& inst) : inst_(&inst), original_count_(inst.links().size()) {
  links_ = inst.links();
  apex_.reserve(links_.size());
  paths_.reserve(links_.size());
  for (const auto& l : links_) {
    apex_.push_back(wtap::apex(inst, l.a, l.b));
    paths_.push_back(link_path(inst, l.a, l.b));
  }
}

Weight LinkPool::weight(std::span<const LinkId> ids) const {
  Weight total = 0;
  for (LinkId id : ids) total += links_[id].w;
  return total;
}

bool LinkPool::is_uplink(LinkId id) const { return apex_[id] == links_[id].a || apex_[id] == links_[id].b; }

bool LinkPool::touches(LinkId id, Vertex v) const {
  const auto& tree = inst_->tree();
  const auto& l = links_[id];
  return tree.is_ancestor(apex_[id], v) && (tree.is_ancestor(v, l.a) || tree.is_ancestor(v, l.b));
}

bool LinkPool::crosses_subtree(LinkId id, Vertex top) const {
  const auto& tree = inst_->tree();
  const auto& l = links_[id];
  return tree.in_subtree(l.a, top) != tree.in_subtree(l.b, top);
}

LinkId LinkPool::original_of(LinkId id) const {
  const auto& l = links_[id];
  return l.shadow_of ? *l.shadow_of : id;
}

LinkId LinkPool::add_shadow(LinkId original, Vertex a, Vertex b) {
  const Link& base = links_[original];
  if (base.shadow_of) throw std::invalid_argument("shadow base must be an original link");
  if ((base.a == a && base.b == b) || (base.a == b && base.b == a)) return original;
  if (a == b) throw std::invalid_argument("shadow endpoints must differ");
  const auto& tree = inst_->tree();
  const Vertex base_apex = apex_[original];
  for (Vertex x : {a, b}) {
    const bool on_path = tree.is_ancestor(base_apex, x) && (tree.is_ancestor(x, base.a) || tree.is_ancestor(x, base.b));
    if (!on_path) throw std::invalid_argument("shadow endpoint outside the base link's path");
  }
  const Vertex lo = std::min(a, b);
  const Vertex hi = std::max(a, b);
  for (std::size_t id = original_count_; id < links_.size(); ++id) {
    const auto& l = links_[id];
    if (*l.shadow_of == original && l.a == lo && l.b == hi) return static_cast<LinkId>(id);
  }
  const auto id = static_cast<LinkId>(links_.size());
  links_.push_back(Link{id, lo, hi, base.w, original});
  apex_.push_back(wtap::apex(*inst_, lo, hi));
  paths_.push_back(link_path(*inst_, lo, hi));
  return id;
}

std::vector<LinkId> LinkPool::original_ids() const {
  std::vector<LinkId> ids(original_count_);
  std::iota(ids.begin(), ids.end(), 0);
  return ids;
}

EdgeSet covered_edges(const LinkPool& pool, std::span<const LinkId> links) {
  EdgeSet covered = pool.instance().empty_edges();
  for (LinkId id : links) covered |= pool.path(id);
  return covered;
}

bool covers_all_edges(const LinkPool& pool, std::span<const LinkId> links) {
  return covered_edges(pool, links) == pool.instance().all_edges();
}

std::vector<LinkId> drop_set(const LinkPool& pool, std::span<const LinkId> up_links, std::span<const LinkId> component) {
  const EdgeSet covered = covered_edges(pool, component);
  std::vector<LinkId> dropped;
  for (LinkId u : up_links) {
    if (pool.path(u).is_subset_of(covered)) dropped.push_back(u);
  }
  return dropped;
}

int thickness(const LinkPool& pool, std::span<const LinkId> component) {
  const auto& tree = pool.instance().tree();
  std::vector<int> count(static_cast<std::size_t>(pool.instance().n()), 0);
  int worst = 0;
  for (LinkId id : component) {
    const auto& l = pool.link(id);
    for (Vertex v : path_vertices(tree, l.a, l.b)) worst = std::max(worst, ++count[v]);
  }
  return worst;
}

bool is_k_thin(const LinkPool& pool, std::span<const LinkId> component, int k) {
  return thickness(pool, component) <= k;
}

}  // namespace wtap
