#pragma once

#include <optional>
#include <vector>

#include "wtap/instance.hpp"

namespace wtap {

struct VerticalCost {
  Weight cost = kInfiniteWeight;
  LinkId link = kNoLink;  // cheapest original link whose path contains t..b

  bool exists() const { return link != kNoLink; }
};

// Cheapest link covering each vertical path t..b (t a strict ancestor of b).
// Equivalent to the cheapest up-link shadow between t and b. Storage is
// ragged: vertex b keeps one slot per ancestor depth, O(sum of depths).
class VerticalCostTable {
 public:
  explicit VerticalCostTable(const Instance& inst);

  // Precondition: t is a strict ancestor of b.
  const VerticalCost& at(Vertex t, Vertex b) const { return rows_[b][tree_->depth(t)]; }
  std::optional<VerticalCost> find(Vertex t, Vertex b) const;

 private:
  const TreeIndex* tree_;
  std::vector<std::vector<VerticalCost>> rows_;
};

}  // namespace wtap
