#pragma once

#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "wtap/instance.hpp"
#include "wtap/rational.hpp"

namespace wtap {

// Minimal witness F_u within a cover F for an up-link u = {t, b}.
struct CoverWitness {
  LinkId u = kNoLink;
  Vertex anchor = kNoVertex;        // v_u: lowest ancestor of t whose apex-closed subset of F covers P_u
  std::vector<LinkId> links;        // F_u, ordered from t towards b
  std::vector<EdgeSet> own_edges;   // P_{u,l}: edges of P_u covered only by links[i]
};

CoverWitness compute_cover_witness(const LinkPool& pool, std::span<const LinkId> cover, LinkId u);

// Arc of a digraph whose arcs are grouped into paths by owner.
struct OwnedArc {
  int from = 0;
  int to = 0;
  int owner = 0;
};

class NotABranching : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Digraph on the links of F. Arcs chain each witness in order; owner is the
// index of the up-link in `up_links`.
struct DependencyGraph {
  std::vector<LinkId> nodes;            // F, sorted
  std::vector<LinkId> up_links;         // U, in caller order
  std::vector<CoverWitness> witnesses;  // parallel to up_links
  std::vector<OwnedArc> arcs;           // endpoints index `nodes`

  int index_of(LinkId id) const;
};

// Throws NotABranching if some node gets two incoming arcs or a cycle forms.
DependencyGraph build_dependency_graph(const LinkPool& pool, std::span<const LinkId> cover,
                                       std::span<const LinkId> up_links);

// Per-node parent arc index in a branching (-1 for roots). Throws
// NotABranching on in-degree above one or on a cycle.
std::vector<int> parent_arcs(int node_count, std::span<const OwnedArc> arcs);

// Labels each owner: 0 if its path starts at a root, otherwise one more than
// the label of the arc entering its first node. Owners without arcs get no
// entry.
std::map<int, int> label_owner_paths(int node_count, std::span<const OwnedArc> arcs);

// Largest number of distinct owners met by a directed path.
int max_owners_on_path(int node_count, std::span<const OwnedArc> arcs);

// Weakly connected components as sorted node-index lists, ordered by their
// smallest member.
std::vector<std::vector<int>> weak_components(int node_count, std::span<const OwnedArc> arcs);

struct Decomposition {
  Rational eps;
  int k = 0;                                  // ceil(1/eps)
  int residue = 0;                            // i with R = owners labelled i mod k
  std::vector<LinkId> removed;                // R, sorted
  std::vector<std::vector<LinkId>> parts;     // partition of F, each sorted
  std::vector<std::optional<int>> labels;     // per up-link, parallel to graph.up_links
  Weight removed_weight = 0;
  Weight up_weight = 0;
  DependencyGraph graph;
};

Decomposition decompose(const LinkPool& pool, std::span<const LinkId> cover, std::span<const LinkId> up_links,
                        const Rational& eps);

struct CheckFailure {
  std::string check;
  std::string detail;
};

struct CheckReport {
  std::vector<CheckFailure> failures;
  int checks_run = 0;
  bool ok() const { return failures.empty(); }
};

// Structural properties of witnesses and the dependency graph: witness
// minimality and ordering, 2-thin witnesses, arc/coverage relations, apex
// ancestry along arcs, ancestry of links sharing a vertex, and the
// (K+1)-thinness bound per component.
CheckReport verify_dependency_graph(const LinkPool& pool, std::span<const LinkId> cover,
                                     std::span<const LinkId> up_links);

// w(R) <= eps*w(U), parts k-thin and partitioning F, every surviving up-link
// covered by one part, and the summed drop weight of the parts >= w(U)-w(R).
CheckReport verify_decomposition(const LinkPool& pool, std::span<const LinkId> cover, std::span<const LinkId> up_links,
                                 const Decomposition& d);

}  // namespace wtap
