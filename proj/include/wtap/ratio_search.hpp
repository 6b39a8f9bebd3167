#pragma once

#include <span>
#include <stdexcept>
#include <vector>

#include "wtap/component_dp.hpp"
#include "wtap/instance.hpp"
#include "wtap/rational.hpp"

namespace wtap {

class EmptyUpLinkSet : public std::invalid_argument {
 public:
  EmptyUpLinkSet() : std::invalid_argument("up-link set U is empty") {}
};

struct Decision {
  Rational rho;
  bool at_least_optimum = false;  // rho >= rho*, witnessed by `slack.component`
  SlackResult slack;
};

struct RatioResult {
  Rational rho;                    // w(component) / w(drop)
  std::vector<LinkId> component;   // sorted, nonempty, k-thin
  std::vector<LinkId> drop;        // drop_set(U, component)
  Weight component_weight = 0;
  Weight drop_weight = 0;
  std::vector<Decision> probes;    // in call order, the probe at 1 first
  int iterations = 0;              // interval halvings
};

// One slack maximization at rho. rho >= rho* iff the maximizer is nonempty
// with nonnegative slack.
Decision decide(const LinkPool& pool, std::span<const LinkId> up_links, int k, const Rational& rho,
                std::span<const LinkId> search_links);

// Minimum of w(C)/w(Drop_U(C)) over nonempty k-thin C within search_links,
// by bisection of [0, 1] until the interval is shorter than 1/w(U)^2.
// Throws EmptyUpLinkSet if U is empty and std::domain_error if no component
// reaches ratio 1 (search_links should contain U).
RatioResult best_ratio_component(const LinkPool& pool, std::span<const LinkId> up_links, int k,
                                 std::span<const LinkId> search_links);

// ceil(log2(w^2)) + 1: the most halvings needed for total up-link weight w.
int max_bisection_steps(Weight total_up_weight);

}  // namespace wtap
