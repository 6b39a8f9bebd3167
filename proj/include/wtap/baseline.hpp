#pragma once

#include <vector>

#include "wtap/instance.hpp"
#include "wtap/vertical_costs.hpp"

namespace wtap {

struct VerticalPath {
  Vertex top = 0;
  Vertex bottom = 0;
  LinkId link = kNoLink;  // cheapest original link containing top..bottom
  Weight cost = 0;

  friend bool operator==(const VerticalPath&, const VerticalPath&) = default;
};

// Pairwise edge-disjoint vertical paths covering every tree edge.
struct UpLinkSolution {
  std::vector<VerticalPath> paths;  // sorted by bottom vertex
  Weight weight = 0;
};

// Minimum-weight cover of all edges by edge-disjoint vertical paths, each
// priced at its cheapest covering link. Throws Infeasible if some edge cannot
// be covered.
UpLinkSolution cheapest_disjoint_uplink_cover(const Instance& inst);
UpLinkSolution cheapest_disjoint_uplink_cover(const Instance& inst, const VerticalCostTable& costs);

// True iff the paths partition the edge set and each cost matches `costs`.
bool is_valid_uplink_solution(const Instance& inst, const VerticalCostTable& costs, const UpLinkSolution& sol);

// Adds each path of `sol` to `pool` as a shadow of its link and returns the
// resulting ids in path order.
std::vector<LinkId> materialize_paths(LinkPool& pool, const UpLinkSolution& sol);

}  // namespace wtap
