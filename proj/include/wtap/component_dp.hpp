#pragma once

#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "wtap/instance.hpp"
#include "wtap/rational.hpp"

namespace wtap {

// A component together with its slack rho*w(Drop_U(C)) - w(C), stored scaled
// by den(rho) so it stays an exact integer.
struct SlackResult {
  std::vector<LinkId> component;  // sorted
  Int128 scaled_slack = 0;
  Rational rho;

  // "a/b" in lowest terms.
  std::string slack_string() const;
};

// p*w(Drop_U(C)) - q*w(C) for rho = p/q.
Int128 scaled_slack(const LinkPool& pool, std::span<const LinkId> up_links, std::span<const LinkId> component, const Rational& rho);

// Table of best partial components over triples (v, Y, x), filled lazily
// from the root. Y is a sorted set of at most k search links with exactly
// one endpoint below v; x = plus asks for the up-link leaving D_v to have
// its in-subtree part covered.
//
// Precondition: `up_links` are up-links with pairwise-disjoint paths.
class SlackMaximizer {
 public:
  SlackMaximizer(const LinkPool& pool, std::span<const LinkId> up_links, int k, Rational rho,
                 std::span<const LinkId> search_links);

  struct Entry {
    bool feasible = false;
    std::vector<LinkId> component;  // C(v, Y, x), sorted
    Int128 scaled_slack = 0;        // q * slack(C, Y, v)
  };
  Entry entry(Vertex v, std::span<const LinkId> y, bool plus);

  // C(r, {}, -): a k-thin maximizer of the slack, nonempty whenever a
  // nonempty maximizer exists.
  SlackResult solve();

  // Recomputes every stored feasible entry from scratch and returns a
  // description of each mismatch (empty when all entries check out).
  std::vector<std::string> audit();

  std::size_t entry_count() const { return nodes_.size(); }

 private:
  struct Branch {
    bool feasible = false;
    Int128 value = 0;
    bool nonempty = false;
    std::vector<LinkId> extra;                // links with apex v added here
    std::vector<std::pair<int, bool>> picks;  // (child node, plus?) per child
  };
  struct Node {
    Vertex v = 0;
    std::vector<LinkId> y;
    Branch minus;
    Branch plus;
  };
  struct KeyHash {
    std::size_t operator()(const std::vector<LinkId>& key) const noexcept;
  };

  int node(Vertex v, std::vector<LinkId> y);
  void fill(int index);
  std::vector<LinkId> collect(int index, bool plus) const;

  const LinkPool* pool_;
  std::vector<LinkId> up_links_;
  int k_;
  Rational rho_;
  std::vector<char> is_search_;
  std::vector<LinkId> cover_;  // up-link covering edge v, or kNoLink
  std::vector<std::vector<LinkId>> apex_links_;
  std::vector<std::unordered_map<std::vector<LinkId>, int, KeyHash>> index_;
  std::vector<Node> nodes_;
};

SlackResult slack_max(const LinkPool& pool, std::span<const LinkId> up_links, int k, const Rational& rho,
                      std::span<const LinkId> search_links);

}  // namespace wtap
