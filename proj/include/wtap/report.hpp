#pragma once

#include <json.hpp>

#include "wtap/baseline.hpp"
#include "wtap/component_dp.hpp"
#include "wtap/decomposition.hpp"
#include "wtap/greedy.hpp"
#include "wtap/ratio_search.hpp"

namespace wtap {

using OrderedJson = nlohmann::ordered_json;

OrderedJson link_json(const LinkPool& pool, LinkId id);
OrderedJson links_json(const LinkPool& pool, std::span<const LinkId> ids);

OrderedJson to_json(const Instance& inst, const UpLinkSolution& sol);
OrderedJson to_json(const Solution& sol);
OrderedJson to_json(const GreedyRun& run, const Rational& eps);
OrderedJson to_json(const LinkPool& pool, const RatioResult& r, int k);
OrderedJson to_json(const LinkPool& pool, const SlackResult& s, int k);
OrderedJson to_json(const LinkPool& pool, const Decomposition& d, const CheckReport& structure,
                    const CheckReport& outcome);
OrderedJson to_json(const CheckReport& report);

}  // namespace wtap
