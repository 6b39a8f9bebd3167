#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"
#include "wtap/decomposition.hpp"
#include "wtap/generators.hpp"
#include "wtap/oracle.hpp"

using namespace wtap;
using namespace wtap::testing;

namespace {

std::string failures(const CheckReport& r) {
  std::string out;
  for (const auto& f : r.failures) out += f.check + ": " + f.detail + "\n";
  return out;
}

// Random cover: a random subset of links, topped up in id order.
std::vector<LinkId> random_cover(std::mt19937_64& rng, const LinkPool& pool) {
  std::vector<LinkId> f;
  EdgeSet covered = pool.instance().empty_edges();
  for (LinkId id : pool.original_ids()) {
    if (uniform_int(rng, 0, 2) == 0) {
      f.push_back(id);
      covered |= pool.path(id);
    }
  }
  const EdgeSet all = pool.instance().all_edges();
  for (LinkId id : pool.original_ids()) {
    if (covered == all) break;
    if (!pool.path(id).is_subset_of(covered) && !std::count(f.begin(), f.end(), id)) {
      f.push_back(id);
      covered |= pool.path(id);
    }
  }
  std::sort(f.begin(), f.end());
  return f;
}

}  // namespace

TEST_CASE("a single covering link is its own witness") {
  const auto inst = Instance::build(make(3, {{0, 1}, {1, 2}}, {{0, 2, 3}, {0, 2, 1}}));
  LinkPool pool(inst);
  const std::vector<LinkId> f{1};
  const auto w = compute_cover_witness(pool, f, 0);
  CHECK(w.links == std::vector<LinkId>{1});
  CHECK(w.anchor == 0);
  const std::vector<LinkId> up{0};
  const auto g = build_dependency_graph(pool, f, up);
  CHECK(g.arcs.empty());
}

TEST_CASE("witness order along the up-link") {
  // Spine 0..8 with pendants 9 (on 3), 10 (on 5), 11 (on 7). u = {0, 8}.
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex v = 1; v <= 8; ++v) edges.emplace_back(v - 1, v);
  edges.emplace_back(3, 9);
  edges.emplace_back(5, 10);
  edges.emplace_back(7, 11);
  const auto inst = Instance::build(make(12, edges, {{0, 4, 5}, {9, 5, 4}, {10, 7, 3}, {11, 8, 2}, {0, 8, 1}}));
  LinkPool pool(inst);
  const std::vector<LinkId> f{0, 1, 2, 3};
  const auto w = compute_cover_witness(pool, f, 4);
  CHECK(w.anchor == 0);
  CHECK(w.links == std::vector<LinkId>{0, 1, 2, 3});
  REQUIRE(w.own_edges.size() == 4);
  CHECK(to_set(w.own_edges[0]) == std::set<Vertex>{1, 2, 3});
  CHECK(to_set(w.own_edges[1]) == std::set<Vertex>{5});
  CHECK(to_set(w.own_edges[2]) == std::set<Vertex>{6, 7});
  CHECK(to_set(w.own_edges[3]) == std::set<Vertex>{8});

  const std::vector<LinkId> up{4};
  const auto g = build_dependency_graph(pool, f, up);
  REQUIRE(g.arcs.size() == 3);
  for (int i = 0; i < 3; ++i) {
    CHECK(g.arcs[i].from == i);
    CHECK(g.arcs[i].to == i + 1);
    CHECK(g.arcs[i].owner == 0);
  }
  const auto report = verify_dependency_graph(pool, f, up);
  CHECK_MESSAGE(report.ok(), failures(report));
}

TEST_CASE("redundant links are pruned smallest id first") {
  // Path r-x-y-z with u = {r, z}. Links 0 and 1 both cover everything.
  const auto inst =
      Instance::build(make(4, {{0, 1}, {1, 2}, {2, 3}}, {{0, 3, 2}, {0, 3, 2}, {0, 3, 9}}));
  LinkPool pool(inst);
  const std::vector<LinkId> f{0, 1};
  const auto w = compute_cover_witness(pool, f, 2);
  CHECK(w.links == std::vector<LinkId>{1});
}

TEST_CASE("hub family: the dependency graph is a path") {
  for (int m : {2, 3, 5}) {
    CAPTURE(m);
    const auto inst = Instance::build(gen_fig3(m));
    LinkPool pool(inst);
    std::vector<LinkId> f, up;
    for (int i = 0; i <= m; ++i) f.push_back(i);
    for (int i = 1; i <= m; ++i) up.push_back(m + i);
    const Vertex hub = m + 1;
    for (LinkId l : f) CHECK(pool.touches(l, hub));

    for (int i = 1; i <= m; ++i) {
      const auto w = compute_cover_witness(pool, f, m + i);
      CHECK(w.links == std::vector<LinkId>{i - 1, i});
      CHECK(w.anchor == i - 1);
    }
    const auto g = build_dependency_graph(pool, f, up);
    REQUIRE(static_cast<int>(g.arcs.size()) == m);
    for (int i = 0; i < m; ++i) {
      CHECK(g.arcs[i].from == i);
      CHECK(g.arcs[i].to == i + 1);
      CHECK(g.arcs[i].owner == i);
    }
    const auto labels = label_owner_paths(static_cast<int>(g.nodes.size()), g.arcs);
    for (int i = 0; i < m; ++i) CHECK(labels.at(i) == i);
    CHECK(max_owners_on_path(static_cast<int>(g.nodes.size()), g.arcs) == m);

    const auto structure = verify_dependency_graph(pool, f, up);
    CHECK_MESSAGE(structure.ok(), failures(structure));
  }
}

TEST_CASE("hub family decomposition at eps one half") {
  const int m = 3;
  const auto inst = Instance::build(gen_fig3(m));
  LinkPool pool(inst);
  const std::vector<LinkId> f{0, 1, 2, 3};
  const std::vector<LinkId> up{4, 5, 6};
  const auto d = decompose(pool, f, up, Rational(1, 2));
  CHECK(d.k == 2);
  CHECK(d.residue == 1);
  CHECK(d.removed == std::vector<LinkId>{5});
  CHECK(d.removed_weight == 1);
  CHECK(2 * d.removed_weight <= d.up_weight);
  REQUIRE(d.parts.size() == 2);
  CHECK(d.parts[0] == std::vector<LinkId>{0, 1});
  CHECK(d.parts[1] == std::vector<LinkId>{2, 3});
  const auto report = verify_decomposition(pool, f, up, d);
  CHECK_MESSAGE(report.ok(), failures(report));
}

TEST_CASE("empty up-link set") {
  const auto inst = Instance::build(gen_fig3(2));
  LinkPool pool(inst);
  const std::vector<LinkId> f{0, 1, 2};
  const std::vector<LinkId> none;
  const auto g = build_dependency_graph(pool, f, none);
  CHECK(g.arcs.empty());
  const auto d = decompose(pool, f, none, Rational(1));
  CHECK(d.removed.empty());
  CHECK(d.parts.size() == 3);
  for (const auto& p : d.parts) CHECK(p.size() == 1);
}

TEST_CASE("labelling an arborescence and cutting residue classes") {
  // Owners: A 0->1->2, B 1->3->4, C 4->5, D 2->6, E 5->7->8, F 8->9.
  const std::vector<OwnedArc> arcs{{0, 1, 0}, {1, 2, 0}, {1, 3, 1}, {3, 4, 1}, {4, 5, 2},
                                   {2, 6, 3}, {5, 7, 4}, {7, 8, 4}, {8, 9, 5}};
  const auto labels = label_owner_paths(10, arcs);
  CHECK(labels == std::map<int, int>{{0, 0}, {1, 1}, {2, 2}, {3, 1}, {4, 3}, {5, 4}});
  CHECK(max_owners_on_path(10, arcs) == 5);

  // k = 3, i = 1 removes labels 1 and 4.
  std::vector<OwnedArc> kept;
  for (const auto& a : arcs) {
    if (labels.at(a.owner) % 3 != 1) kept.push_back(a);
  }
  CHECK(max_owners_on_path(10, kept) <= 2);
  const auto comps = weak_components(10, kept);
  CHECK(comps == std::vector<std::vector<int>>{{0, 1, 2}, {3}, {4, 5, 7, 8}, {6}, {9}});
}

TEST_CASE("non-branchings are rejected") {
  const std::vector<OwnedArc> two_in{{0, 2, 0}, {1, 2, 1}};
  CHECK_THROWS_AS(parent_arcs(3, two_in), NotABranching);
  const std::vector<OwnedArc> cycle{{0, 1, 0}, {1, 2, 0}, {2, 0, 1}};
  CHECK_THROWS_AS(parent_arcs(3, cycle), NotABranching);
  const std::vector<OwnedArc> fine{{0, 1, 0}, {0, 2, 1}};
  CHECK(parent_arcs(3, fine) == std::vector<int>{-1, 0, 1});
}

TEST_CASE("random covers satisfy every structural check") {
  std::mt19937_64 rng(606);
  const Rational eps_values[] = {Rational(1), Rational(1, 2), Rational(1, 3)};
  for (int trial = 0; trial < 150; ++trial) {
    const auto inst = Instance::build(random_instance(rng, 2, 10, 1, 14, 10));
    LinkPool pool(inst);
    const auto s = baseline_setup(pool);
    const auto f = trial % 2 ? exact_opt(inst).links : random_cover(rng, pool);
    REQUIRE(covers_all_edges(pool, f));
    CAPTURE(trial);
    const auto structure = verify_dependency_graph(pool, f, s.up);
    CHECK_MESSAGE(structure.ok(), failures(structure));
    for (const auto& eps : eps_values) {
      const auto d = decompose(pool, f, s.up, eps);
      const auto report = verify_decomposition(pool, f, s.up, d);
      CHECK_MESSAGE(report.ok(), failures(report));
      CHECK(Rational(d.removed_weight) <= eps * Rational(d.up_weight));
      for (const auto& part : d.parts) CHECK(is_k_thin(pool, part, d.k));
    }
  }
}
