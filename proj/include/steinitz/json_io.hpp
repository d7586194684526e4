#pragma once

#include <json.hpp>

#include "steinitz/extlab.hpp"

namespace steinitz {

nlohmann::json to_json(const Subgroup& s);
nlohmann::json to_json(const ClassGroup& cg);
nlohmann::json to_json(const NormCondition& cond, const WGroupResult& res);
nlohmann::json to_json(const RealizableInterval& iv);
nlohmann::json to_json(const QuadField& k, const EnumerationReport& rep);
nlohmann::json to_json(const QuadField& k, const BiquadReport& rep);
nlohmann::json to_json(const VerificationOutcome& out);

// Human-readable rendering of the same content.
std::string render_text(const nlohmann::json& j, int indent = 0);

}  // namespace steinitz
