#pragma once

#include "json.hpp"

#include "famrank/ext_nat.hpp"
#include "famrank/rank_result.hpp"
#include "famrank/signature.hpp"
#include "famrank/theory.hpp"

namespace famrank {

// ExtNat is a non-negative integer or "inf". Decoders throw
// std::invalid_argument on malformed input.

nlohmann::json to_json(const ExtNat& n);
ExtNat ext_nat_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Signature& sig);
Signature signature_from_json(const nlohmann::json& j);

nlohmann::json to_json(const MonadicSignature& sig);
MonadicSignature monadic_signature_from_json(const nlohmann::json& j);

nlohmann::json to_json(const RankResult& r);
RankResult rank_result_from_json(const nlohmann::json& j);

nlohmann::json to_json(const DiscreteData& d);
DiscreteData discrete_from_json(const nlohmann::json& j);

nlohmann::json to_json(const TheoryPoint& p);
TheoryPoint theory_point_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Region& r);
Region region_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Restriction& r);
Restriction restriction_from_json(const nlohmann::json& j);

nlohmann::json to_json(const FamilySpec& f);
FamilySpec family_from_json(const nlohmann::json& j);

}  // namespace famrank
