#include "wtap/oracle.hpp"

#include <algorithm>
#include <bit>
#include <functional>

namespace wtap {

namespace {

class Clock {
 public:
  explicit Clock(const OracleBudget& budget)
      : budget_(budget), start_(std::chrono::steady_clock::now()) {}

  void tick(std::uint64_t count) const {
    if (count > budget_.max_subsets) throw BudgetExceeded("subset budget exceeded");
    if (budget_.timeout.count() > 0 && (count & 0xfff) == 0 &&
        std::chrono::steady_clock::now() - start_ > budget_.timeout) {
      throw BudgetExceeded("oracle timeout");
    }
  }

 private:
  const OracleBudget& budget_;
  std::chrono::steady_clock::time_point start_;
};

// Lexicographic order on the sorted index lists of two masks.
bool lex_less(std::uint64_t a, std::uint64_t b) {
  if (a == b) return false;
  const std::uint64_t diff = a ^ b;
  const int d = std::countr_zero(diff);
  const std::uint64_t above = ~((std::uint64_t{2} << d) - 1);
  if ((a >> d) & 1) return (b & above) != 0;
  return (a & above) == 0;
}

std::vector<int> edge_list(const EdgeSet& set) {
  std::vector<int> out;
  for (auto e = set.find_first(); e != EdgeSet::npos; e = set.find_next(e)) out.push_back(static_cast<int>(e));
  return out;
}

// Incremental state for enumerating subsets of a link list in Gray-code
// order: coverage counts per edge and path counts per vertex.
class SubsetWalker {
 public:
  SubsetWalker(const LinkPool& pool, std::span<const LinkId> links) : links_(links.begin(), links.end()) {
    const int n = pool.instance().n();
    edges_.reserve(links_.size());
    verts_.reserve(links_.size());
    for (LinkId id : links_) {
      edges_.push_back(edge_list(pool.path(id)));
      const auto& l = pool.link(id);
      verts_.push_back(path_vertices(pool.instance().tree(), l.a, l.b));
      weights_.push_back(pool.weight(id));
    }
    cover_.assign(n, 0);
    load_.assign(n, 0);
  }

  void flip(int i, int k) {
    const bool adding = !((mask_ >> i) & 1);
    mask_ ^= std::uint64_t{1} << i;
    const int delta = adding ? 1 : -1;
    weight_ += adding ? weights_[i] : -weights_[i];
    for (int e : edges_[i]) cover_[e] += delta;
    for (Vertex v : verts_[i]) {
      if (load_[v] == k && adding) ++overloaded_;
      load_[v] += delta;
      if (load_[v] == k && !adding) --overloaded_;
    }
  }

  std::uint64_t mask() const { return mask_; }
  Weight weight() const { return weight_; }
  bool thin() const { return overloaded_ == 0; }
  bool covers(const std::vector<int>& edges) const {
    return std::all_of(edges.begin(), edges.end(), [&](int e) { return cover_[e] > 0; });
  }
  std::vector<LinkId> members() const {
    std::vector<LinkId> out;
    for (std::size_t i = 0; i < links_.size(); ++i) {
      if ((mask_ >> i) & 1) out.push_back(links_[i]);
    }
    return out;
  }

 private:
  std::vector<LinkId> links_;
  std::vector<std::vector<int>> edges_;
  std::vector<std::vector<Vertex>> verts_;
  std::vector<Weight> weights_;
  std::vector<int> cover_;
  std::vector<int> load_;
  std::uint64_t mask_ = 0;
  Weight weight_ = 0;
  int overloaded_ = 0;
};

// Visits every subset of `count` items in Gray-code order, starting after
// the empty set.
void gray_walk(std::size_t count, const Clock& clock, const std::function<void(int)>& visit) {
  const std::uint64_t total = std::uint64_t{1} << count;
  clock.tick(total - 1);
  for (std::uint64_t i = 1; i < total; ++i) {
    clock.tick(i);
    visit(std::countr_zero(i));
  }
}

std::vector<LinkId> sorted_ids(std::span<const LinkId> ids) {
  std::vector<LinkId> out(ids.begin(), ids.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

Solution exact_opt(const Instance& inst, const OracleBudget& budget) {
  const std::size_t m = inst.links().size();
  if (m > budget.max_links || m > 62) throw BudgetExceeded("exact_opt: " + std::to_string(m) + " links exceed budget");
  LinkPool pool(inst);
  const auto ids = pool.original_ids();
  Clock clock(budget);
  const auto all = edge_list(inst.all_edges());
  if (all.empty()) return Solution{};

  SubsetWalker walker(pool, ids);
  bool found = false;
  Weight best = 0;
  std::uint64_t best_mask = 0;
  gray_walk(m, clock, [&](int i) {
    walker.flip(i, static_cast<int>(m) + 1);
    if (found && walker.weight() > best) return;
    if (!walker.covers(all)) return;
    if (!found || walker.weight() < best || lex_less(walker.mask(), best_mask)) {
      found = true;
      best = walker.weight();
      best_mask = walker.mask();
    }
  });
  if (!found) throw Infeasible("no cover exists");
  std::vector<LinkId> chosen;
  for (std::size_t i = 0; i < m; ++i) {
    if ((best_mask >> i) & 1) chosen.push_back(static_cast<LinkId>(i));
  }
  return to_solution(pool, chosen);
}

RatioResult brute_best_kthin(const LinkPool& pool, std::span<const LinkId> up_links, int k,
                             std::span<const LinkId> search_links, const OracleBudget& budget) {
  if (up_links.empty()) throw EmptyUpLinkSet();
  const auto search = sorted_ids(search_links);
  if (search.size() > budget.max_links || search.size() > 62) {
    throw BudgetExceeded("brute_best_kthin: " + std::to_string(search.size()) + " search links exceed budget");
  }
  std::vector<std::vector<int>> up_edges;
  for (LinkId u : up_links) up_edges.push_back(edge_list(pool.path(u)));

  Clock clock(budget);
  SubsetWalker walker(pool, search);
  bool found = false;
  Weight best_c = 0;
  Weight best_d = 1;
  std::uint64_t best_mask = 0;
  gray_walk(search.size(), clock, [&](int i) {
    walker.flip(i, k);
    if (!walker.thin()) return;
    Weight d = 0;
    for (std::size_t j = 0; j < up_links.size(); ++j) {
      if (walker.covers(up_edges[j])) d += pool.weight(up_links[j]);
    }
    if (d == 0) return;
    const Int128 lhs = static_cast<Int128>(walker.weight()) * best_d;
    const Int128 rhs = static_cast<Int128>(best_c) * d;
    if (!found || lhs < rhs || (lhs == rhs && lex_less(walker.mask(), best_mask))) {
      found = true;
      best_c = walker.weight();
      best_d = d;
      best_mask = walker.mask();
    }
  });
  if (!found) throw Infeasible("no k-thin component drops any up-link");

  RatioResult r;
  for (std::size_t i = 0; i < search.size(); ++i) {
    if ((best_mask >> i) & 1) r.component.push_back(search[i]);
  }
  r.drop = drop_set(pool, up_links, r.component);
  r.component_weight = best_c;
  r.drop_weight = best_d;
  r.rho = Rational(best_c, best_d);
  return r;
}

SlackResult brute_max_slack(const LinkPool& pool, std::span<const LinkId> up_links, int k, const Rational& rho,
                            std::span<const LinkId> search_links, const OracleBudget& budget) {
  const auto search = sorted_ids(search_links);
  if (search.size() > budget.max_links || search.size() > 62) {
    throw BudgetExceeded("brute_max_slack: " + std::to_string(search.size()) + " search links exceed budget");
  }
  std::vector<std::vector<int>> up_edges;
  for (LinkId u : up_links) up_edges.push_back(edge_list(pool.path(u)));

  Clock clock(budget);
  SubsetWalker walker(pool, search);
  Int128 best = 0;
  std::uint64_t best_mask = 0;
  gray_walk(search.size(), clock, [&](int i) {
    walker.flip(i, k);
    if (!walker.thin()) return;
    Weight d = 0;
    for (std::size_t j = 0; j < up_links.size(); ++j) {
      if (walker.covers(up_edges[j])) d += pool.weight(up_links[j]);
    }
    const Int128 value = static_cast<Int128>(rho.num()) * d - static_cast<Int128>(rho.den()) * walker.weight();
    if (value > best || (value == best && (best_mask == 0 || lex_less(walker.mask(), best_mask)))) {
      best = value;
      best_mask = walker.mask();
    }
  });
  SlackResult r;
  r.rho = rho;
  r.scaled_slack = best;
  for (std::size_t i = 0; i < search.size(); ++i) {
    if ((best_mask >> i) & 1) r.component.push_back(search[i]);
  }
  return r;
}

UpLinkSolution brute_uplink_cover(const Instance& inst, const OracleBudget& budget) {
  if (inst.n() > budget.max_vertices) {
    throw BudgetExceeded("brute_uplink_cover: " + std::to_string(inst.n()) + " vertices exceed budget");
  }
  const auto& tree = inst.tree();
  const int n = inst.n();

  // Direct pricing: t..b lies on P_l iff both t and b are path vertices of l.
  std::vector<std::vector<VerticalPath>> price(n, std::vector<VerticalPath>(n));
  for (Vertex b = 0; b < n; ++b) {
    for (Vertex t = tree.parent(b); t != kNoVertex; t = tree.parent(t)) {
      VerticalPath best{t, b, kNoLink, kInfiniteWeight};
      for (const auto& l : inst.links()) {
        const auto verts = path_vertices(tree, l.a, l.b);
        const bool has_t = std::find(verts.begin(), verts.end(), t) != verts.end();
        const bool has_b = std::find(verts.begin(), verts.end(), b) != verts.end();
        if (has_t && has_b && l.w < best.cost) best = {t, b, l.id, l.w};
      }
      price[t][b] = best;
    }
  }

  // cont[p]: child whose edge continues the path through edge p, or none.
  std::vector<Vertex> inner;
  for (Vertex v : tree.order()) {
    if (v != tree.root() && !tree.children(v).empty()) inner.push_back(v);
  }
  std::vector<Vertex> cont(n, kNoVertex);
  Clock clock(budget);
  std::uint64_t visited = 0;
  UpLinkSolution best;
  best.weight = kInfiniteWeight;

  std::function<void(std::size_t)> choose = [&](std::size_t idx) {
    if (idx == inner.size()) {
      clock.tick(++visited);
      UpLinkSolution sol;
      for (Vertex c = 0; c < n; ++c) {
        if (c == tree.root() || cont[c] != kNoVertex) continue;
        Vertex x = c;
        while (tree.parent(x) != tree.root() && cont[tree.parent(x)] == x) x = tree.parent(x);
        const auto& p = price[tree.parent(x)][c];
        if (p.link == kNoLink) return;
        sol.paths.push_back(p);
        sol.weight += p.cost;
      }
      if (sol.weight < best.weight) best = std::move(sol);
      return;
    }
    const Vertex p = inner[idx];
    cont[p] = kNoVertex;
    choose(idx + 1);
    for (Vertex c : tree.children(p)) {
      cont[p] = c;
      choose(idx + 1);
    }
    cont[p] = kNoVertex;
  };
  choose(0);
  if (best.weight >= kInfiniteWeight) throw Infeasible("no vertical path partition has finite cost");
  return best;
}

}  // namespace wtap
