#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"
#include "wtap/generators.hpp"
#include "wtap/instance.hpp"
#include "wtap/vertical_costs.hpp"

using namespace wtap;
using namespace wtap::testing;

namespace {

bool has_issue(const std::vector<ValidationIssue>& issues, IssueCode code, std::int64_t subject = -2) {
  return std::any_of(issues.begin(), issues.end(), [&](const auto& i) {
    return i.code == code && (subject == -2 || i.subject == subject);
  });
}

// gen_fig2(3, 5): r = 0; top nodes 1, 4 (chain) and 7; pendants follow
// their node. Links: 0 green, then red/orange/blue per node.
constexpr LinkId kGreen = 0;
LinkId red(int i) { return 1 + 3 * i; }
LinkId orange(int i) { return 2 + 3 * i; }
LinkId blue(int i) { return 3 + 3 * i; }

}  // namespace

TEST_CASE("validate accepts minimal and degenerate instances") {
  CHECK(validate(single_edge()).empty());
  CHECK(validate(make(1, {}, {})).empty());
  CHECK(validate(gen_fig2(3, 5)).empty());
  const auto inst = Instance::build(make(1, {}, {}));
  CHECK(inst.edge_count() == 0);
}

TEST_CASE("validate reports each violation") {
  SUBCASE("uncovered edge") {
    const auto issues = validate(make(3, {{0, 1}, {1, 2}}, {{0, 1, 4}}));
    REQUIRE(issues.size() == 1);
    CHECK(issues[0].code == IssueCode::UncoverableEdge);
    CHECK(issues[0].subject == 2);
  }
  SUBCASE("not a tree") {
    CHECK(has_issue(validate(make(3, {{0, 1}}, {{0, 1, 1}})), IssueCode::NotATree));
    CHECK(has_issue(validate(make(3, {{0, 1}, {1, 0}}, {{0, 2, 1}})), IssueCode::NotATree));
    CHECK(has_issue(validate(make(3, {{0, 1}, {1, 1}}, {{0, 2, 1}})), IssueCode::NotATree));
    CHECK(has_issue(validate(make(2, {{0, 5}}, {{0, 1, 1}})), IssueCode::NotATree));
  }
  SUBCASE("nonpositive weight") {
    const auto issues = validate(make(2, {{0, 1}}, {{0, 1, 0}, {0, 1, 3}}));
    CHECK(has_issue(issues, IssueCode::NonpositiveWeight, 0));
    CHECK_FALSE(has_issue(issues, IssueCode::UncoverableEdge));
  }
  SUBCASE("bad link") {
    CHECK(has_issue(validate(make(2, {{0, 1}}, {{0, 0, 1}, {0, 1, 1}})), IssueCode::InvalidLink, 0));
    CHECK(has_issue(validate(make(2, {{0, 1}}, {{0, 9, 1}})), IssueCode::InvalidLink, 0));
  }
  CHECK_THROWS_AS(Instance::build(make(3, {{0, 1}, {1, 2}}, {{0, 1, 4}})), ValidationError);
}

TEST_CASE("tree index agrees with a parent walk") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const auto data = random_instance(rng, 1, 25, 0, 20);
    const auto inst = Instance::build(data);
    const auto parent = naive_parents(data);
    for (Vertex v = 0; v < data.n; ++v) {
      CHECK(inst.tree().parent(v) == parent[v]);
      CHECK(inst.tree().depth(v) == static_cast<int>(naive_root_path(parent, v).size()) - 1);
      for (Vertex w = 0; w < data.n; ++w) {
        const auto up = naive_root_path(parent, w);
        const bool anc = std::find(up.begin(), up.end(), v) != up.end();
        CHECK(inst.tree().is_ancestor(v, w) == anc);
      }
    }
  }
}

TEST_CASE("link paths, apexes and up-link tests") {
  const auto data = make(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}}, {{1, 4, 1}, {0, 1, 1}});
  const auto inst = Instance::build(data);
  CHECK(to_set(link_path(inst, 3, 4)) == std::set<Vertex>{4});
  CHECK(to_set(link_path(inst, 1, 4)) == std::set<Vertex>{2, 3, 4});
  CHECK(apex(inst, 1, 4) == 1);
  CHECK(is_uplink(inst, 4, 1));

  const auto star = Instance::build(star_ab());
  CHECK(apex(star, 1, 2) == 0);
  CHECK_FALSE(is_uplink(star, 1, 2));

  const auto fig2 = Instance::build(gen_fig2(3, 5));
  const auto& green = fig2.links()[kGreen];
  CHECK(apex(fig2, green.a, green.b) == fig2.root());
  for (int i = 0; i < 3; ++i) {
    const auto& r = fig2.links()[red(i)];
    const auto& o = fig2.links()[orange(i)];
    CHECK(is_uplink(fig2, r.a, r.b));
    CHECK(is_uplink(fig2, o.a, o.b));
  }

  const auto fig3_data = gen_fig3(3);
  const auto fig3 = Instance::build(fig3_data);
  const auto& l0 = fig3.links()[0];
  CHECK(to_set(link_path(fig3, l0.a, l0.b)) == naive_path_edges(fig3_data, l0.a, l0.b));
  CHECK(link_path(fig3, l0.a, l0.b).test(4));  // edge into the hub v = m+1

  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const auto d = random_instance(rng, 2, 20, 1, 20);
    const auto in = Instance::build(d);
    for (const auto& l : in.links()) {
      const auto path = link_path(in, l.a, l.b);
      CHECK(to_set(path) == naive_path_edges(d, l.a, l.b));
      const Vertex top = apex(in, l.a, l.b);
      const auto& t = in.tree();
      CHECK(static_cast<int>(path.count()) == t.depth(l.a) + t.depth(l.b) - 2 * t.depth(top));
      // Union of the two vertical halves.
      EdgeSet halves = in.empty_edges();
      for (Vertex x : {l.a, l.b}) {
        for (; x != top; x = t.parent(x)) halves.set(static_cast<std::size_t>(x));
      }
      CHECK(halves == path);
      const auto verts = path_vertices(t, l.a, l.b);
      CHECK(std::set<Vertex>(verts.begin(), verts.end()) == naive_path_vertices(d, l.a, l.b));
      CHECK(verts.front() == l.a);
      CHECK(verts.back() == l.b);
    }
  }
}

TEST_CASE("drop_set examples and monotonicity") {
  const auto inst = Instance::build(gen_fig2(3, 5));
  LinkPool pool(inst);
  std::vector<LinkId> up;
  for (int i = 0; i < 3; ++i) {
    up.push_back(red(i));
    up.push_back(orange(i));
  }
  std::sort(up.begin(), up.end());
  CHECK(drop_set(pool, up, std::vector<LinkId>{}).empty());
  const std::vector<LinkId> opt{kGreen, blue(0), blue(1), blue(2)};
  CHECK(drop_set(pool, up, opt) == up);
  CHECK(drop_set(pool, up, pool.original_ids()) == up);

  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 60; ++trial) {
    const auto d = random_instance(rng, 2, 12, 2, 14);
    const auto in = Instance::build(d);
    LinkPool p(in);
    auto ids = p.original_ids();
    std::vector<LinkId> small, big;
    for (LinkId id : ids) {
      const auto roll = uniform_int(rng, 0, 2);
      if (roll == 0) small.push_back(id);
      if (roll <= 1) big.push_back(id);
    }
    std::vector<LinkId> u;
    for (LinkId id : ids) {
      if (p.is_uplink(id)) u.push_back(id);
    }
    const auto ds = drop_set(p, u, small);
    const auto db = drop_set(p, u, big);
    CHECK(std::includes(db.begin(), db.end(), ds.begin(), ds.end()));
  }
}

TEST_CASE("k-thin examples and monotonicity") {
  const auto inst = Instance::build(gen_fig2(3, 5));
  LinkPool pool(inst);
  CHECK(is_k_thin(pool, std::vector<LinkId>{}, 1));
  const std::vector<LinkId> opt{kGreen, blue(0), blue(1), blue(2)};
  CHECK(is_k_thin(pool, opt, 2));
  CHECK_FALSE(is_k_thin(pool, opt, 1));

  for (int m : {2, 3, 5}) {
    const auto fig3 = Instance::build(gen_fig3(m));
    LinkPool p(fig3);
    std::vector<LinkId> f;
    for (int i = 0; i <= m; ++i) f.push_back(i);
    CHECK_FALSE(is_k_thin(p, f, m));
    CHECK(is_k_thin(p, f, m + 1));
  }

  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 60; ++trial) {
    const auto in = Instance::build(random_instance(rng, 2, 12, 2, 14));
    LinkPool p(in);
    std::vector<LinkId> c, sub;
    for (LinkId id : p.original_ids()) {
      if (uniform_int(rng, 0, 1)) {
        c.push_back(id);
        if (uniform_int(rng, 0, 1)) sub.push_back(id);
      }
    }
    const int t = thickness(p, c);
    CHECK(is_k_thin(p, c, std::max(t, 1)));
    if (t > 1) CHECK_FALSE(is_k_thin(p, c, t - 1));
    CHECK(thickness(p, sub) <= t);
  }
}

TEST_CASE("shadows live in the pool") {
  const auto inst = Instance::build(path3());
  LinkPool pool(inst);
  CHECK(pool.add_shadow(0, 2, 0) == 0);
  const LinkId s = pool.add_shadow(0, 1, 2);
  CHECK(s == 1);
  CHECK(pool.add_shadow(0, 2, 1) == s);
  CHECK(pool.original_of(s) == 0);
  CHECK(pool.weight(s) == 7);
  CHECK(to_set(pool.path(s)) == std::set<Vertex>{2});
  CHECK(pool.is_uplink(s));
  CHECK_THROWS(pool.add_shadow(s, 0, 1));
  const auto star = Instance::build(star_ab());
  LinkPool sp(star);
  CHECK_THROWS(sp.add_shadow(0, 1, 1));
}

TEST_CASE("vertical cost table examples") {
  {
    const auto inst = Instance::build(single_edge());
    VerticalCostTable table(inst);
    CHECK(table.at(0, 1).cost == 5);
  }
  {
    const auto inst = Instance::build(path3());
    VerticalCostTable table(inst);
    CHECK(table.at(0, 1).cost == 7);
    CHECK(table.at(1, 2).cost == 7);
    CHECK(table.at(0, 2).cost == 7);
    CHECK(table.at(0, 2).link == 0);
  }
  {
    // Each top edge is covered by green (15) and by its red (11).
    const auto inst = Instance::build(gen_fig2(3, 5));
    VerticalCostTable table(inst);
    for (Vertex s : {1, 4, 7}) {
      const Vertex p = inst.tree().parent(s);
      CHECK(table.at(p, s).cost == 11);
    }
    // Two top edges together are only covered by green.
    CHECK(table.at(0, 4).cost == 15);
    CHECK(table.at(0, 4).link == kGreen);
    CHECK_FALSE(table.find(4, 8).has_value());
  }
}

TEST_CASE("vertical cost table equals explicit shadow materialization") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 80; ++trial) {
    const auto d = random_instance(rng, 2, 10, 1, 14, 20);
    const auto inst = Instance::build(d);
    VerticalCostTable table(inst);
    const auto parent = naive_parents(d);
    // Every up-link shadow {t, b} of every link, priced by its link.
    std::map<std::pair<Vertex, Vertex>, std::pair<Weight, LinkId>> best;
    for (std::size_t i = 0; i < d.links.size(); ++i) {
      const auto& l = d.links[i];
      const auto verts = naive_path_vertices(d, l.u, l.v);
      for (Vertex b : verts) {
        for (Vertex t : naive_root_path(parent, b)) {
          if (t == b || !verts.count(t)) continue;
          const std::pair<Weight, LinkId> cand{l.w, static_cast<LinkId>(i)};
          auto [it, fresh] = best.emplace(std::make_pair(t, b), cand);
          if (!fresh && cand < it->second) it->second = cand;
        }
      }
    }
    for (Vertex b = 0; b < d.n; ++b) {
      for (Vertex t : naive_root_path(parent, b)) {
        if (t == b) continue;
        auto it = best.find({t, b});
        const auto got = table.find(t, b);
        REQUIRE(got.has_value() == (it != best.end()));
        if (got) {
          CHECK(got->cost == it->second.first);
          CHECK(got->link == it->second.second);
        }
      }
    }
  }
}
