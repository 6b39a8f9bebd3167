#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"
#include "wtap/component_dp.hpp"
#include "wtap/generators.hpp"
#include "wtap/oracle.hpp"

using namespace wtap;
using namespace wtap::testing;

namespace {

const std::vector<LinkId> kNone;

std::vector<LinkId> fig2_up(int d) {
  std::vector<LinkId> up;
  for (int i = 0; i < d; ++i) {
    up.push_back(1 + 3 * i);
    up.push_back(2 + 3 * i);
  }
  return up;
}

std::vector<LinkId> fig2_opt(int d) {
  std::vector<LinkId> c{0};
  for (int i = 0; i < d; ++i) c.push_back(3 + 3 * i);
  return c;
}

}  // namespace

TEST_CASE("rho zero selects nothing") {
  const auto inst = Instance::build(gen_fig2(4, 10));
  LinkPool pool(inst);
  const auto s = baseline_setup(pool);
  const auto r = slack_max(pool, s.up, 2, Rational(0), s.search);
  CHECK(r.component.empty());
  CHECK(r.scaled_slack == 0);
  CHECK(r.slack_string() == "0");
}

TEST_CASE("single edge at rho one") {
  const auto inst = Instance::build(single_edge());
  LinkPool pool(inst);
  const std::vector<LinkId> u{0};
  const auto r = slack_max(pool, u, 1, Rational(1), u);
  CHECK(r.component == u);
  CHECK(r.scaled_slack == 0);
}

TEST_CASE("top-path family at rho one half") {
  SUBCASE("d = 3 with red and orange up-links") {
    const auto inst = Instance::build(gen_fig2(3, 5));
    LinkPool pool(inst);
    const auto up = fig2_up(3);
    const auto search = pool.original_ids();
    const auto r = slack_max(pool, up, 2, Rational(1, 2), search);
    CHECK(r.scaled_slack == 0);
    CHECK(r.component == fig2_opt(3));
    CHECK(scaled_slack(pool, up, fig2_opt(3), Rational(1, 2)) == 0);
    CHECK(brute_max_slack(pool, up, 2, Rational(1, 2), search).scaled_slack == 0);
  }
  SUBCASE("d = 4 with the baseline") {
    const auto inst = Instance::build(gen_fig2(4, 10));
    LinkPool pool(inst);
    const auto s = baseline_setup(pool);
    CHECK(pool.weight(s.up) == 88);
    const auto r = slack_max(pool, s.up, 2, Rational(1, 2), s.search);
    CHECK(r.scaled_slack == 0);
    CHECK(r.component == fig2_opt(4));
  }
}

TEST_CASE("leaf and chain entries") {
  // r - x - y, U = {r,y}. Below x the edge x-y needs a link from inside or
  // from Y.
  const auto inst = Instance::build(path3());
  LinkPool pool(inst);
  const std::vector<LinkId> up{0};
  SlackMaximizer dp(pool, up, 1, Rational(1), up);

  const auto leaf_minus = dp.entry(2, kNone, false);
  CHECK(leaf_minus.feasible);
  CHECK(leaf_minus.component.empty());
  CHECK(leaf_minus.scaled_slack == 0);
  const auto leaf_plus = dp.entry(2, kNone, true);
  CHECK(leaf_plus.feasible);
  CHECK(leaf_plus.component.empty());

  CHECK_FALSE(dp.entry(1, kNone, true).feasible);
  const auto with_y = dp.entry(1, up, true);
  CHECK(with_y.feasible);
  CHECK(with_y.component.empty());
  CHECK(dp.entry(0, kNone, false).feasible);
  CHECK_FALSE(dp.entry(0, kNone, true).feasible);  // nothing leaves the root
  CHECK(dp.audit().empty());
}

TEST_CASE("constructor rejects bad inputs") {
  const auto star = Instance::build(star_ab());
  LinkPool pool(star);
  const std::vector<LinkId> ab{0};
  CHECK_THROWS_AS(SlackMaximizer(pool, ab, 1, Rational(1), ab), std::invalid_argument);

  const auto chain = Instance::build(make(3, {{0, 1}, {1, 2}}, {{0, 2, 1}, {0, 1, 1}}));
  LinkPool cp(chain);
  const std::vector<LinkId> overlap{0, 1};
  CHECK_THROWS_AS(SlackMaximizer(cp, overlap, 1, Rational(1), overlap), std::invalid_argument);
  const std::vector<LinkId> one{0};
  CHECK_THROWS_AS(SlackMaximizer(cp, one, 0, Rational(1), one), std::invalid_argument);
  CHECK_THROWS_AS(SlackMaximizer(cp, one, 1, Rational(-1), one), std::invalid_argument);
}

TEST_CASE("matches exhaustive slack maximization") {
  std::mt19937_64 rng(31337);
  int compared = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const auto inst = Instance::build(random_instance(rng, 2, 9, 1, 8, 9));
    LinkPool pool(inst);
    const auto s = baseline_setup(pool);
    if (s.search.size() > 12) continue;
    const int k = static_cast<int>(uniform_int(rng, 1, 3));
    const Rational rho(uniform_int(rng, 0, 12), uniform_int(rng, 1, 12));
    CAPTURE(trial);
    CAPTURE(k);
    CAPTURE(rho.to_string());

    SlackMaximizer dp(pool, s.up, k, rho, s.search);
    const auto got = dp.solve();
    const auto want = brute_max_slack(pool, s.up, k, rho, s.search);
    CHECK(got.slack_string() == want.slack_string());
    CHECK(got.component.empty() == want.component.empty());
    CHECK(is_k_thin(pool, got.component, k));
    CHECK(scaled_slack(pool, s.up, got.component, rho) == got.scaled_slack);
    for (LinkId id : got.component) {
      CHECK(std::binary_search(s.search.begin(), s.search.end(), id));
    }
    CHECK(dp.audit().empty());
    ++compared;
  }
  CHECK(compared > 150);
}

TEST_CASE("thirty vertices at k = 2 stays fast") {
  std::mt19937_64 rng(4);
  const auto start = std::chrono::steady_clock::now();
  for (int trial = 0; trial < 5; ++trial) {
    const auto inst = Instance::build(gen_random(30, 40, 20, rng()));
    LinkPool pool(inst);
    const auto s = baseline_setup(pool);
    const auto r = slack_max(pool, s.up, 2, Rational(3, 4), s.search);
    CHECK(is_k_thin(pool, r.component, 2));
  }
  CHECK(std::chrono::steady_clock::now() - start < std::chrono::seconds(20));
}
