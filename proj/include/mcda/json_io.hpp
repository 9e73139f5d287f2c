#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "mcda/axioms.hpp"
#include "mcda/identify.hpp"
#include "mcda/inter.hpp"
#include "mcda/intra.hpp"
#include "mcda/model.hpp"

namespace mcda::json_io {

using Json = nlohmann::json;

/// Two-space indentation, keys in byte order, doubles with 17 significant
/// digits. Reparsing and dumping again yields the same bytes.
std::string dump(const Json& j);

/// Throws InvalidInput on malformed text.
Json parse(std::string_view text);
Json read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const Json& j);

struct CriteriaDefinition {
  CriteriaSet criteria;
  std::vector<AttributeScale> attributes;
  friend bool operator==(const CriteriaDefinition&, const CriteriaDefinition&) = default;
};

/// {"criteria": [{"id", "levels", "zero", "one"}, ...]}
CriteriaDefinition criteria_from_json(const Json& j);
Json to_json(const CriteriaDefinition& def);
Json attribute_to_json(const AttributeScale& a);

/// One intra judgment: {"id"?, "criterion", "better", "worse", "category"}.
struct IntraJudgmentRecord {
  std::string criterion;
  DifferenceJudgment judgment;
  friend bool operator==(const IntraJudgmentRecord&, const IntraJudgmentRecord&) = default;
};
/// `fallback_id` names judgments without an "id".
IntraJudgmentRecord intra_judgment_from_json(const Json& j, const CriteriaDefinition& def,
                                             const std::string& fallback_id);
Json to_json(const IntraJudgmentRecord& r);
/// Array of intra judgments; missing ids default to "j1", "j2", ... by position.
std::vector<IntraJudgmentRecord> intra_judgments_from_json(const Json& j,
                                                           const CriteriaDefinition& def);

/// One inter judgment: {"id"?, "better": key, "worse": key, "category"}.
CoalitionJudgment inter_judgment_from_json(const Json& j, const CriteriaSet& criteria,
                                           const std::string& fallback_id);
Json to_json(const CoalitionJudgment& j, const CriteriaSet& criteria);

struct InterJudgments {
  CriteriaSet criteria;
  std::vector<CoalitionJudgment> judgments;
};
/// {"criteria": [ids], "judgments": [...]}
InterJudgments inter_judgments_from_json(const Json& j);

/// {key: value} over every coalition.
Json capacity_map(const CriteriaSet& criteria, const Game& g);
/// Reads a coalition map; every non-empty coalition is required and "" must be 0.
Capacity capacity_from_map(const Json& j, const CriteriaSet& criteria);
/// Envelope {"criteria": [ids], "capacity": {key: value}}.
Json capacity_to_json(const CriteriaSet& criteria, const Capacity& mu);
std::pair<CriteriaSet, Capacity> capacity_from_json(const Json& j);

Json to_json(const UtilityScale& u);
/// {"criterion": {"level": value}}
Json scales_to_json(const std::vector<UtilityScale>& scales);

Json to_json(const InconsistencyReport& r);
Json to_json(const MonotonicityViolation& v, const CriteriaSet& criteria);

/// Array of {"profile": [..], "score": y}.
std::vector<ScoredAct> scored_acts_from_json(const Json& j);
Json to_json(const FitReport& r, const CriteriaSet& criteria);

/// {"criteria": [...], "scales": {...}, "capacity": {...}}
DecisionModel model_from_json(const Json& j);
Json to_json(const DecisionModel& m);

Act act_from_json(const Json& j);
/// Array of {"id", "assignments": {criterion: level}}.
std::vector<Act> acts_from_json(const Json& j);
Json to_json(const Act& a);
/// [{"id", "value"}] in ranked order.
Json to_json(const std::vector<RankedAct>& ranked);

Json to_json(const Counterexample& c, const CriteriaSet& criteria);
Json to_json(const AxiomReport& r, const CriteriaSet& criteria);
Json to_json(const CharacterizationSummary& s, const CriteriaSet& criteria);

}  // namespace mcda::json_io
