#include "wtap/ratio_search.hpp"

namespace wtap {

namespace {

// Keeps 1/w(U)^2 and every dyadic midpoint representable in 64 bits.
constexpr Weight kMaxUpWeight = Weight{1} << 30;

}  // namespace

Decision decide(const LinkPool& pool, std::span<const LinkId> up_links, int k, const Rational& rho,
                std::span<const LinkId> search_links) {
  Decision d;
  d.rho = rho;
  d.slack = slack_max(pool, up_links, k, rho, search_links);
  d.at_least_optimum = !d.slack.component.empty() && d.slack.scaled_slack >= 0;
  return d;
}

int max_bisection_steps(Weight total_up_weight) {
  const Int128 square = static_cast<Int128>(total_up_weight) * total_up_weight;
  int bits = 0;
  while ((static_cast<Int128>(1) << bits) < square) ++bits;
  return bits + 1;
}

RatioResult best_ratio_component(const LinkPool& pool, std::span<const LinkId> up_links, int k,
                                 std::span<const LinkId> search_links) {
  if (up_links.empty()) throw EmptyUpLinkSet();
  const Weight total = pool.weight(up_links);
  if (total >= kMaxUpWeight) throw std::overflow_error("total up-link weight too large for exact bisection");

  RatioResult result;
  Decision top = decide(pool, up_links, k, Rational(1), search_links);
  result.probes.push_back(top);
  if (!top.at_least_optimum) throw std::domain_error("no k-thin component reaches ratio 1");
  std::vector<LinkId> witness = top.slack.component;

  Rational lo(0);
  Rational hi(1);
  const Rational width(1, total * total);
  while (hi - lo >= width) {
    const Rational mid = (lo + hi) / Rational(2);
    Decision d = decide(pool, up_links, k, mid, search_links);
    ++result.iterations;
    if (d.at_least_optimum) {
      hi = mid;
      witness = d.slack.component;
    } else {
      lo = mid;
    }
    result.probes.push_back(std::move(d));
  }

  result.component = std::move(witness);
  result.drop = drop_set(pool, up_links, result.component);
  result.component_weight = pool.weight(result.component);
  result.drop_weight = pool.weight(result.drop);
  result.rho = Rational(result.component_weight, result.drop_weight);
  return result;
}

}  // namespace wtap
