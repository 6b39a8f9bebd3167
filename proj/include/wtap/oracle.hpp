#pragma once

#include <chrono>
#include <cstdint>
#include <span>

#include "wtap/baseline.hpp"
#include "wtap/component_dp.hpp"
#include "wtap/greedy.hpp"
#include "wtap/instance.hpp"
#include "wtap/ratio_search.hpp"

namespace wtap {

// Limits for the exhaustive routines. Exceeding any of them throws
// BudgetExceeded before (links) or during (subsets, time) the enumeration.
struct OracleBudget {
  std::size_t max_links = 20;
  int max_vertices = 10;
  std::uint64_t max_subsets = std::uint64_t{1} << 22;
  std::chrono::milliseconds timeout{0};  // zero disables the clock
};

inline constexpr std::size_t kComponentOracleLinks = 14;

// Minimum-weight cover by original links; ties go to the lexicographically
// smallest id set.
Solution exact_opt(const Instance& inst, const OracleBudget& budget = {});

// Minimum ratio over nonempty k-thin subsets of search_links. `probes` and
// `iterations` are left empty.
RatioResult brute_best_kthin(const LinkPool& pool, std::span<const LinkId> up_links, int k,
                             std::span<const LinkId> search_links,
                             const OracleBudget& budget = {kComponentOracleLinks});

// Maximum slack at rho over all k-thin subsets (the empty set included),
// preferring nonempty sets on ties.
SlackResult brute_max_slack(const LinkPool& pool, std::span<const LinkId> up_links, int k, const Rational& rho,
                            std::span<const LinkId> search_links,
                            const OracleBudget& budget = {kComponentOracleLinks});

// Cheapest partition of the edges into vertical paths, each priced by a
// direct scan of the links (no VerticalCostTable).
UpLinkSolution brute_uplink_cover(const Instance& inst, const OracleBudget& budget = {});

}  // namespace wtap
