#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "wtap/baseline.hpp"
#include "wtap/instance.hpp"
#include "wtap/rational.hpp"
#include "wtap/ratio_search.hpp"

namespace wtap {

class InvalidEpsilon : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A WTAP solution over original links.
struct Solution {
  std::vector<LinkId> links;  // distinct original ids, sorted
  // Sum of w over the chosen pool links, counting an original once per
  // shadow that used it. Never below link_set_weight.
  Weight weight = 0;
  Weight link_set_weight = 0;  // w of `links`
};

struct GreedyStep {
  std::vector<LinkId> component;  // pool ids
  std::vector<LinkId> dropped;    // pool ids removed from U
  Rational ratio;
  Weight component_weight = 0;
  Weight drop_weight = 0;
  Weight up_weight_before = 0;
  Weight up_weight_after = 0;
  int probes = 0;
};

struct GreedyTrace {
  int k = 0;
  Weight initial_up_weight = 0;
  std::vector<GreedyStep> steps;
  // Set when the loop ended because the best ratio was >= 1.
  std::optional<Rational> stop_ratio;
  int ratio_calls = 0;
};

struct GreedyOptions {
  std::optional<int> k_override;
  // Search over every up-link shadow instead of originals plus current U.
  bool full_shadows = false;
};

struct GreedyRun {
  Solution solution;
  GreedyTrace trace;
  UpLinkSolution baseline;
  LinkPool pool;
  std::vector<LinkId> chosen;  // F plus the surviving U, pool ids
};

// k = ceil(2/eps).
int thinness_for(const Rational& eps);

GreedyRun relative_greedy(const Instance& inst, const Rational& eps, const GreedyOptions& options = {});
Solution two_approx_only(const Instance& inst);

// Maps pool ids to a Solution over original links.
Solution to_solution(const LinkPool& pool, std::span<const LinkId> chosen);

}  // namespace wtap
