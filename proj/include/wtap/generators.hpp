#pragma once

#include <cstdint>
#include <random>

#include "wtap/instance.hpp"

namespace wtap {

// Independent, portable random streams derived from one seed. Each purpose
// tag gets its own mt19937_64 so extra draws in one stage never shift
// another stage.
class SeededStreams {
 public:
  explicit SeededStreams(std::uint64_t seed) : seed_(seed) {}
  std::mt19937_64 stream(std::uint64_t tag) const;

 private:
  std::uint64_t seed_;
};

std::uint64_t splitmix64(std::uint64_t x);

// Uniform integer in [lo, hi], identical on every platform.
std::int64_t uniform_int(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi);

// Random recursive tree rooted at 0, `link_count` distinct random links with
// weights in [1, weight_max], then one edge-parallel link of weight
// weight_max per edge still uncovered.
InstanceData gen_random(int n, int link_count, Weight weight_max, std::uint64_t seed);

// Top path of d nodes through r (ceil(d/2) on one side of r, floor(d/2) on
// the other), each node s with pendant leaves a_s, b_s. Vertex ids: r = 0,
// then s, a_s, b_s consecutively for each node, nearer-to-r side first.
// Link ids: 0 joins the two far ends of the top path (weight d*M); then for
// each node in vertex order: {parent(s), a_s} (2M+1), {b_s, s} (1),
// {a_s, b_s} (1).
InstanceData gen_fig2(int d, Weight M);

// Spine r = s_0 .. s_m, hub v below s_m, pendant a_i on s_i and leaf b_i
// below v. Vertex ids: s_i = i, v = m+1, a_i = m+2+i, b_i = 2m+3+i.
// Link ids: i for l_i = {b_i, a_i} (i = 0..m), m+i for u_i = {s_{i-1}, a_i}
// (i = 1..m). All weights 1.
InstanceData gen_fig3(int m);

}  // namespace wtap
