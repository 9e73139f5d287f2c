#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mcda/json_io.hpp"
#include "mcda/model.hpp"

namespace mcda {

/// Request-level failures that are not domain errors.
class SessionError : public std::runtime_error {
 public:
  enum class Kind { NotFound, Conflict };
  SessionError(Kind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}
  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

enum class ScopeStatus { Incomplete, Consistent, Inconsistent, MonotonicityConflict };
std::string_view to_string(ScopeStatus s) noexcept;

inline constexpr std::string_view kInterScope = "inter";

/// An answered pair. Intra scopes are "intra:<criterion>"; the capacity scope
/// is "inter" and its levels are coalition keys.
struct SessionJudgment {
  std::string id;
  std::string scope;
  std::string better;
  std::string worse;
  Category category;
  friend bool operator==(const SessionJudgment&, const SessionJudgment&) = default;
};

struct Question {
  std::string scope;
  std::string first;
  std::string second;
};

struct ScopeState {
  std::string scope;
  ScopeStatus status = ScopeStatus::Incomplete;
  std::size_t answered = 0;
  std::size_t questions = 0;
  std::string reason;  ///< why the scope is not consistent
  std::optional<InconsistencyReport> report;
  std::optional<MonotonicityViolation> conflict;
};

struct SessionOptions {
  /// Ask only the endpoint pair and consecutive pairs instead of every pair.
  bool sparse = false;
};

/// Elicitation session driven by an append-only event log (add, revise,
/// delete). All derived state is recomputed from the current judgments after
/// each event, so replaying the log on a fresh session reproduces it exactly.
class Session {
 public:
  /// Throws TooLarge above six criteria (the capacity scope's limit).
  Session(std::string id, json_io::CriteriaDefinition definition, SessionOptions options = {});

  /// Rebuilds a session from its document by replaying the event log.
  static Session from_json(const json_io::Json& doc);
  json_io::Json to_json() const;

  const std::string& id() const noexcept { return id_; }
  const json_io::CriteriaDefinition& definition() const noexcept { return def_; }
  const std::vector<SessionJudgment>& judgments() const noexcept { return judgments_; }
  const std::vector<ScopeState>& scopes() const noexcept { return scopes_; }
  const std::optional<DecisionModel>& model() const noexcept { return model_; }

  /// Body: {"criterion", "better", "worse", "category"} for a level pair or
  /// {"scope": "inter", "better", "worse", "category"} for a coalition pair.
  /// Returns the affected scope. Throws Error on schema problems and
  /// SessionError::Conflict when the pair is already answered.
  const ScopeState& add_judgment(const json_io::Json& body);
  const ScopeState& revise_judgment(const std::string& judgment_id, const json_io::Json& body);
  const ScopeState& delete_judgment(const std::string& judgment_id);

  /// First unanswered pair of the questioning policy, or nothing when done.
  std::optional<Question> next_question() const;
  bool done() const { return !next_question(); }

  const ScopeState& scope(std::string_view name) const;

 private:
  SessionJudgment parse_body(const json_io::Json& body, const std::string& id) const;
  void check_unanswered(const SessionJudgment& j, const std::string& ignore_id) const;
  std::vector<Question> questions(const std::string& scope) const;
  std::vector<std::string> scope_names() const;
  void apply(const json_io::Json& event);
  void recompute();

  std::string id_;
  json_io::CriteriaDefinition def_;
  SessionOptions options_;
  std::vector<json_io::Json> events_;
  std::vector<SessionJudgment> judgments_;
  std::size_t next_id_ = 1;
  std::vector<ScopeState> scopes_;
  std::optional<DecisionModel> model_;
};

json_io::Json to_json(const ScopeState& s, const CriteriaSet& criteria);
json_io::Json to_json(const Question& q);

}  // namespace mcda
