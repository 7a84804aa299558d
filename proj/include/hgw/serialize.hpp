#pragma once

#include <json.hpp>

#include "hgw/hypergroup.hpp"
#include "hgw/matrices.hpp"
#include "hgw/walks.hpp"

namespace hgw {

using Json = nlohmann::json;

// Rationals travel as exact "num/den" strings, never as decimals.

Json structure_constants_to_json(const StructureConstants& constants);
StructureConstants structure_constants_from_json(const Json& j);

Json verdict_to_json(const Verdict& verdict);
Verdict verdict_from_json(const Json& j);

Json matrices_to_json(const AdjacencyFamily& family, const TransitionFamily& transitions,
                      const AggregationMap& aggregation);

Json empirical_to_json(const EmpiricalDistribution& emp, const AgreementReport& report);

}  // namespace hgw
