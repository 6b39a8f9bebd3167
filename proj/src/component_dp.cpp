#include "wtap/component_dp.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace wtap {

namespace {

Int128 scale_weight(std::int64_t factor, Weight w) { return static_cast<Int128>(factor) * w; }

// (value, nonempty) lexicographic comparison used for every choice in the
// table. Returns true if a is at least as good as b.
bool at_least(Int128 a_value, bool a_nonempty, Int128 b_value, bool b_nonempty) {
  if (a_value != b_value) return a_value > b_value;
  return a_nonempty || !b_nonempty;
}

std::vector<LinkId> sorted_union(std::span<const LinkId> a, std::span<const LinkId> b) {
  std::vector<LinkId> out;
  out.reserve(a.size() + b.size());
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

std::string SlackResult::slack_string() const {
  Int128 num = scaled_slack;
  Int128 den = rho.den();
  const Int128 g = gcd128(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  if (den == 1) return to_string(num);
  return to_string(num) + "/" + to_string(den);
}

Int128 scaled_slack(const LinkPool& pool, std::span<const LinkId> up_links, std::span<const LinkId> component,
                    const Rational& rho) {
  const auto dropped = drop_set(pool, up_links, component);
  return scale_weight(rho.num(), pool.weight(dropped)) - scale_weight(rho.den(), pool.weight(component));
}

std::size_t SlackMaximizer::KeyHash::operator()(const std::vector<LinkId>& key) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (LinkId id : key) {
    h ^= static_cast<std::size_t>(id) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

SlackMaximizer::SlackMaximizer(const LinkPool& pool, std::span<const LinkId> up_links, int k, Rational rho,
                               std::span<const LinkId> search_links)
    : pool_(&pool),
      up_links_(up_links.begin(), up_links.end()),
      k_(k),
      rho_(rho),
      is_search_(pool.size(), 0),
      cover_(static_cast<std::size_t>(pool.instance().n()), kNoLink),
      apex_links_(static_cast<std::size_t>(pool.instance().n())),
      index_(static_cast<std::size_t>(pool.instance().n())) {
  if (k < 1) throw std::invalid_argument("thinness bound k must be at least 1");
  if (rho < Rational(0)) throw std::invalid_argument("rho must be nonnegative");
  for (LinkId u : up_links_) {
    if (!pool.is_uplink(u)) throw std::invalid_argument("link " + std::to_string(u) + " in U is not an up-link");
    const auto& path = pool.path(u);
    for (auto e = path.find_first(); e != EdgeSet::npos; e = path.find_next(e)) {
      if (cover_[e] != kNoLink) throw std::invalid_argument("up-links in U have overlapping paths");
      cover_[e] = u;
    }
  }
  for (LinkId id : search_links) {
    if (is_search_[id]) continue;
    is_search_[id] = 1;
    apex_links_[pool.apex(id)].push_back(id);
  }
  for (auto& list : apex_links_) std::sort(list.begin(), list.end());
}

int SlackMaximizer::node(Vertex v, std::vector<LinkId> y) {
  auto& index = index_[v];
  if (auto it = index.find(y); it != index.end()) return it->second;
  const int id = static_cast<int>(nodes_.size());
  index.emplace(y, id);
  nodes_.push_back(Node{v, std::move(y), {}, {}});
  fill(id);
  return id;
}

void SlackMaximizer::fill(int index) {
  const auto& pool = *pool_;
  const auto& tree = pool.instance().tree();
  const Vertex v = nodes_[index].v;
  const std::vector<LinkId> y = nodes_[index].y;
  const auto& kids = tree.children(v);
  const auto& candidates = apex_links_[v];

  // The up-link leaving D_v, if any.
  const LinkId leaving = v == tree.root() ? kNoLink : cover_[v];

  Branch best_minus;
  Branch best_plus;
  std::vector<LinkId> extra;

  auto evaluate = [&]() {
    const auto ybar = sorted_union(y, extra);
    Branch minus;
    minus.feasible = true;
    minus.value = -scale_weight(rho_.den(), pool.weight(extra));
    minus.nonempty = !extra.empty();
    minus.extra = extra;
    Branch plus = minus;
    plus.feasible = leaving != kNoLink;

    for (std::size_t i = 0; i < kids.size(); ++i) {
      const Vertex c = kids[i];
      std::vector<LinkId> yc;
      for (LinkId id : ybar) {
        if (pool.crosses_subtree(id, c)) yc.push_back(id);
      }
      const bool yc_empty = yc.empty();
      const int ci = node(c, std::move(yc));
      const Node& child = nodes_[ci];
      const LinkId u = cover_[c];

      auto take = [&](Branch& into, const Branch& from, bool from_plus, Int128 bonus) {
        into.value += from.value + bonus;
        into.nonempty = into.nonempty || from.nonempty;
        into.picks.emplace_back(ci, from_plus);
      };

      if (u == kNoLink) {
        take(minus, child.minus, false, 0);
        if (plus.feasible) take(plus, child.minus, false, 0);
      } else if (pool.apex(u) == v) {
        const Int128 bonus = scale_weight(rho_.num(), pool.weight(u));
        const bool use_plus = !yc_empty && child.plus.feasible &&
                              at_least(child.plus.value + bonus, child.plus.nonempty, child.minus.value, child.minus.nonempty);
        for (Branch* b : {&minus, &plus}) {
          if (!b->feasible) continue;
          if (use_plus) take(*b, child.plus, true, bonus);
          else take(*b, child.minus, false, 0);
        }
      } else {
        // u also leaves D_v, so it is the leaving link and this is its child.
        take(minus, child.minus, false, 0);
        if (plus.feasible) {
          if (yc_empty || !child.plus.feasible) plus.feasible = false;
          else take(plus, child.plus, true, 0);
        }
      }
    }
    if (!best_minus.feasible || (minus.value != best_minus.value ? minus.value > best_minus.value
                                                                 : (minus.nonempty && !best_minus.nonempty))) {
      best_minus = std::move(minus);
    }
    if (plus.feasible && (!best_plus.feasible || (plus.value != best_plus.value ? plus.value > best_plus.value
                                                                               : (plus.nonempty && !best_plus.nonempty)))) {
      best_plus = std::move(plus);
    }
  };

  // Enumerate extra link sets in lexicographic order of their sorted ids.
  const std::size_t room = y.size() >= static_cast<std::size_t>(k_) ? 0 : static_cast<std::size_t>(k_) - y.size();
  std::function<void(std::size_t)> extend = [&](std::size_t from) {
    evaluate();
    if (extra.size() == room) return;
    for (std::size_t i = from; i < candidates.size(); ++i) {
      extra.push_back(candidates[i]);
      extend(i + 1);
      extra.pop_back();
    }
  };
  if (y.size() <= static_cast<std::size_t>(k_)) extend(0);

  nodes_[index].minus = std::move(best_minus);
  nodes_[index].plus = std::move(best_plus);
}

std::vector<LinkId> SlackMaximizer::collect(int index, bool plus) const {
  std::vector<LinkId> out;
  std::vector<std::pair<int, bool>> stack{{index, plus}};
  while (!stack.empty()) {
    auto [i, p] = stack.back();
    stack.pop_back();
    const Branch& b = p ? nodes_[i].plus : nodes_[i].minus;
    out.insert(out.end(), b.extra.begin(), b.extra.end());
    stack.insert(stack.end(), b.picks.begin(), b.picks.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

SlackMaximizer::Entry SlackMaximizer::entry(Vertex v, std::span<const LinkId> y, bool plus) {
  std::vector<LinkId> key(y.begin(), y.end());
  std::sort(key.begin(), key.end());
  const int i = node(v, std::move(key));
  const Branch& b = plus ? nodes_[i].plus : nodes_[i].minus;
  if (!b.feasible) return Entry{};
  return Entry{true, collect(i, plus), b.value};
}

SlackResult SlackMaximizer::solve() {
  const int i = node(pool_->instance().root(), {});
  return SlackResult{collect(i, false), nodes_[i].minus.value, rho_};
}

std::vector<std::string> SlackMaximizer::audit() {
  const auto& pool = *pool_;
  const auto& tree = pool.instance().tree();
  std::vector<std::string> problems;
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    const Node& nd = nodes_[i];
    const Vertex v = nd.v;
    std::vector<LinkId> inner_u;
    for (LinkId u : up_links_) {
      const auto& l = pool.link(u);
      if (tree.in_subtree(l.a, v) && tree.in_subtree(l.b, v)) inner_u.push_back(u);
    }
    for (bool plus : {false, true}) {
      const Branch& b = plus ? nd.plus : nd.minus;
      if (!b.feasible) continue;
      const std::string where = "(" + std::to_string(v) + ", |Y|=" + std::to_string(nd.y.size()) + ", " +
                                (plus ? "+" : "-") + ")";
      const auto c = collect(static_cast<int>(i), plus);
      for (LinkId id : c) {
        const auto& l = pool.link(id);
        if (!tree.in_subtree(l.a, v) || !tree.in_subtree(l.b, v)) problems.push_back(where + ": link outside subtree");
      }
      const auto cy = sorted_union(c, nd.y);
      if (!is_k_thin(pool, cy, k_)) problems.push_back(where + ": C and Y not k-thin");
      if (plus) {
        EdgeSet inside = pool.path(cover_[v]);
        for (auto e = inside.find_first(); e != EdgeSet::npos; e = inside.find_next(e)) {
          if (static_cast<Vertex>(e) == v || !tree.in_subtree(static_cast<Vertex>(e), v)) inside.reset(e);
        }
        if (!inside.is_subset_of(covered_edges(pool, cy))) problems.push_back(where + ": leaving up-link not covered");
      }
      const auto dropped = drop_set(pool, inner_u, cy);
      const Int128 expect = scale_weight(rho_.num(), pool.weight(dropped)) - scale_weight(rho_.den(), pool.weight(c));
      if (expect != b.value) problems.push_back(where + ": stored slack " + to_string(b.value) + " != " + to_string(expect));
    }
  }
  return problems;
}

SlackResult slack_max(const LinkPool& pool, std::span<const LinkId> up_links, int k, const Rational& rho,
                      std::span<const LinkId> search_links) {
  SlackMaximizer dp(pool, up_links, k, rho, search_links);
  return dp.solve();
}

}  // namespace wtap
