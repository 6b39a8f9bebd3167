#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "wtap/core.hpp"

namespace wtap {

// Bitset over tree edges. The edge between v and parent(v) has id v, so bit
// root is never set.
using EdgeSet = boost::dynamic_bitset<>;

struct LinkSpec {
  Vertex u = 0;
  Vertex v = 0;
  Weight w = 0;
};

// Unvalidated problem data as read from disk or produced by a generator.
// Weights are already integral; `scale` records the factor applied to the
// original (possibly fractional) weights.
struct InstanceData {
  int n = 0;
  Vertex root = 0;
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::vector<LinkSpec> links;
  std::int64_t scale = 1;
};

enum class IssueCode { NotATree, NonpositiveWeight, InvalidLink, UncoverableEdge };

const char* to_string(IssueCode code);

struct ValidationIssue {
  IssueCode code;
  std::int64_t subject = -1;  // edge id (child vertex), link index or vertex
  std::string message;
};

// Checks the tree structure, link sanity and coverability of every edge.
std::vector<ValidationIssue> validate(const InstanceData& data);

class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(std::vector<ValidationIssue> issues);
  const std::vector<ValidationIssue>& issues() const { return issues_; }

 private:
  std::vector<ValidationIssue> issues_;
};

// Rooted view of the spanning tree: parents, depths, DFS intervals and a
// binary-lifting LCA table.
class TreeIndex {
 public:
  TreeIndex() = default;
  TreeIndex(int n, Vertex root, const std::vector<std::pair<Vertex, Vertex>>& edges);

  int size() const { return static_cast<int>(parent_.size()); }
  Vertex root() const { return root_; }
  Vertex parent(Vertex v) const { return parent_[v]; }
  int depth(Vertex v) const { return depth_[v]; }
  const std::vector<Vertex>& children(Vertex v) const { return children_[v]; }
  // Vertices in BFS order from the root; parents precede children.
  const std::vector<Vertex>& order() const { return order_; }

  int tin(Vertex v) const { return tin_[v]; }
  int tout(Vertex v) const { return tout_[v]; }
  // True iff a is an ancestor of b (a == b counts).
  bool is_ancestor(Vertex a, Vertex b) const { return tin_[a] <= tin_[b] && tout_[b] <= tout_[a]; }
  bool in_subtree(Vertex v, Vertex top) const { return is_ancestor(top, v); }

  Vertex lca(Vertex a, Vertex b) const;
  Vertex ancestor_at_depth(Vertex v, int d) const;

 private:
  Vertex root_ = 0;
  std::vector<Vertex> parent_;
  std::vector<int> depth_;
  std::vector<std::vector<Vertex>> children_;
  std::vector<Vertex> order_;
  std::vector<int> tin_;
  std::vector<int> tout_;
  std::vector<std::vector<Vertex>> up_;
};

struct Link {
  LinkId id = kNoLink;
  Vertex a = 0;
  Vertex b = 0;
  Weight w = 0;
  std::optional<LinkId> shadow_of;  // empty for original links
};

// A validated instance. Immutable after construction.
class Instance {
 public:
  // Throws ValidationError when validate() reports anything.
  static Instance build(InstanceData data);

  int n() const { return data_.n; }
  Vertex root() const { return data_.root; }
  int edge_count() const { return data_.n - 1; }
  std::int64_t scale() const { return data_.scale; }
  const InstanceData& data() const { return data_; }
  const TreeIndex& tree() const { return tree_; }
  const std::vector<Link>& links() const { return links_; }

  EdgeSet empty_edges() const { return EdgeSet(static_cast<std::size_t>(data_.n)); }
  EdgeSet all_edges() const;

 private:
  InstanceData data_;
  TreeIndex tree_;
  std::vector<Link> links_;
};

Vertex apex(const Instance& inst, Vertex a, Vertex b);
EdgeSet link_path(const Instance& inst, Vertex a, Vertex b);
// True iff one endpoint lies on the root path of the other.
bool is_uplink(const Instance& inst, Vertex a, Vertex b);
// Vertices of the tree path between a and b, in order from a to b.
std::vector<Vertex> path_vertices(const TreeIndex& tree, Vertex a, Vertex b);

// Original links plus any shadows materialized during a run. Ids of original
// links coincide with their index in Instance::links(). Adding shadows
// invalidates references previously returned by path().
class LinkPool {
 public:
  explicit LinkPool(const Instance& inst);

  const Instance& instance() const { return *inst_; }
  std::size_t size() const { return links_.size(); }
  std::size_t original_count() const { return original_count_; }

  const Link& link(LinkId id) const { return links_[id]; }
  Weight weight(LinkId id) const { return links_[id].w; }
  Weight weight(std::span<const LinkId> ids) const;
  Vertex apex(LinkId id) const { return apex_[id]; }
  const EdgeSet& path(LinkId id) const { return paths_[id]; }
  bool is_uplink(LinkId id) const;
  // v in V_l: v lies on the tree path of the link.
  bool touches(LinkId id, Vertex v) const;
  // Exactly one endpoint inside the subtree rooted at `top`.
  bool crosses_subtree(LinkId id, Vertex top) const;
  LinkId original_of(LinkId id) const;

  // Returns the id of the shadow {a, b} of `original`, creating it on first
  // use. If {a, b} are the endpoints of `original` itself, returns `original`.
  LinkId add_shadow(LinkId original, Vertex a, Vertex b);

  std::vector<LinkId> original_ids() const;

 private:
  const Instance* inst_;
  std::size_t original_count_ = 0;
  std::vector<Link> links_;
  std::vector<Vertex> apex_;
  std::vector<EdgeSet> paths_;
};

EdgeSet covered_edges(const LinkPool& pool, std::span<const LinkId> links);
bool covers_all_edges(const LinkPool& pool, std::span<const LinkId> links);

// {u in U : P_u is contained in the union of P_l over l in C}.
std::vector<LinkId> drop_set(const LinkPool& pool, std::span<const LinkId> up_links, std::span<const LinkId> component);

// Every vertex lies on the paths of at most k links of C.
bool is_k_thin(const LinkPool& pool, std::span<const LinkId> component, int k);
// Maximum number of links of C whose paths share a vertex.
int thickness(const LinkPool& pool, std::span<const LinkId> component);

}  // namespace wtap
