#include "mcda/session.hpp"

#include <algorithm>

namespace mcda {

using json_io::Json;

namespace {

constexpr std::string_view kIntraPrefix = "intra:";

std::string intra_scope(const std::string& criterion) {
  return std::string(kIntraPrefix) + criterion;
}

Json record_json(const SessionJudgment& j) {
  return Json{{"id", j.id},
              {"scope", j.scope},
              {"better", j.better},
              {"worse", j.worse},
              {"category", std::string(label(j.category))}};
}

bool same_pair(const SessionJudgment& j, const std::string& a, const std::string& b) {
  return (j.better == a && j.worse == b) || (j.better == b && j.worse == a);
}

std::string string_of(const Json& body, const char* key) {
  auto it = body.find(key);
  if (it == body.end() || !it->is_string()) {
    throw Error(ErrorCode::InvalidInput, std::string("judgment needs a string \"") + key + "\"");
  }
  return it->get<std::string>();
}

}  // namespace

std::string_view to_string(ScopeStatus s) noexcept {
  switch (s) {
    case ScopeStatus::Incomplete: return "incomplete";
    case ScopeStatus::Consistent: return "consistent";
    case ScopeStatus::Inconsistent: return "inconsistent";
    case ScopeStatus::MonotonicityConflict: return "monotonicity_conflict";
  }
  return "?";
}

Session::Session(std::string id, json_io::CriteriaDefinition definition, SessionOptions options)
    : id_(std::move(id)), def_(std::move(definition)), options_(options) {
  if (id_.empty()) throw Error(ErrorCode::InvalidInput, "session id must be non-empty");
  if (def_.criteria.size() > kMaxInterCriteria) {
    throw Error(ErrorCode::TooLarge, "the capacity scope supports at most 6 criteria");
  }
  recompute();
}

Session Session::from_json(const Json& doc) {
  if (!doc.is_object() || !doc.contains("id") || !doc["id"].is_string()) {
    throw Error(ErrorCode::InvalidInput, "session document needs a string \"id\"");
  }
  SessionOptions options;
  if (auto it = doc.find("options"); it != doc.end() && it->contains("sparse")) {
    options.sparse = (*it)["sparse"].get<bool>();
  }
  Session s(doc["id"].get<std::string>(), json_io::criteria_from_json(doc), options);
  if (auto it = doc.find("events"); it != doc.end()) {
    if (!it->is_array()) throw Error(ErrorCode::InvalidInput, "\"events\" must be an array");
    for (const auto& e : *it) {
      s.apply(e);
      s.events_.push_back(e);
    }
  }
  return s;
}

Json Session::to_json() const {
  Json doc = json_io::to_json(def_);
  doc["id"] = id_;
  doc["options"] = Json{{"sparse", options_.sparse}};
  doc["events"] = Json(events_);
  Json records = Json::array();
  for (const auto& j : judgments_) records.push_back(record_json(j));
  doc["judgments"] = std::move(records);
  Json scopes = Json::object();
  for (const auto& s : scopes_) scopes[s.scope] = mcda::to_json(s, def_.criteria);
  doc["scopes"] = std::move(scopes);
  const auto q = next_question();
  doc["done"] = !q;
  doc["next_question"] = q ? mcda::to_json(*q) : Json(nullptr);
  doc["model"] = model_ ? json_io::to_json(*model_) : Json(nullptr);
  return doc;
}

SessionJudgment Session::parse_body(const Json& body, const std::string& id) const {
  if (!body.is_object()) throw Error(ErrorCode::InvalidInput, "judgment must be an object");
  SessionJudgment j;
  j.id = id;
  std::string scope;
  if (body.contains("criterion")) {
    scope = intra_scope(string_of(body, "criterion"));
  } else {
    scope = string_of(body, "scope");
  }
  j.better = string_of(body, "better");
  j.worse = string_of(body, "worse");
  j.category = parse_category(string_of(body, "category"));
  if (scope == kInterScope) {
    j.better = def_.criteria.key(def_.criteria.parse_key(j.better));
    j.worse = def_.criteria.key(def_.criteria.parse_key(j.worse));
  } else if (scope.rfind(kIntraPrefix, 0) == 0) {
    const auto crit = scope.substr(kIntraPrefix.size());
    const auto& attr = def_.attributes[def_.criteria.index_of(crit)];
    attr.index_of(j.better);
    attr.index_of(j.worse);
  } else {
    throw Error(ErrorCode::InvalidInput, "unknown judgment scope '" + scope + "'");
  }
  if (j.better == j.worse) {
    throw Error(ErrorCode::InvalidInput, "a judgment must compare two different items");
  }
  j.scope = std::move(scope);
  return j;
}

void Session::check_unanswered(const SessionJudgment& j, const std::string& ignore_id) const {
  for (const auto& other : judgments_) {
    if (other.id != ignore_id && other.scope == j.scope && same_pair(other, j.better, j.worse)) {
      throw SessionError(SessionError::Kind::Conflict,
                         "pair already answered by judgment '" + other.id + "'; use PUT to revise");
    }
  }
}

void Session::apply(const Json& event) {
  if (!event.is_object() || !event.contains("op") || !event["op"].is_string()) {
    throw Error(ErrorCode::InvalidInput, "event needs an \"op\"");
  }
  const auto op = event["op"].get<std::string>();
  auto find = [&](const std::string& jid) {
    auto it = std::find_if(judgments_.begin(), judgments_.end(),
                           [&](const SessionJudgment& j) { return j.id == jid; });
    if (it == judgments_.end()) {
      throw SessionError(SessionError::Kind::NotFound, "no judgment '" + jid + "'");
    }
    return it;
  };
  if (op == "add") {
    const std::string expected = "j" + std::to_string(next_id_);
    auto j = parse_body(event.at("judgment"), expected);
    check_unanswered(j, "");
    judgments_.push_back(std::move(j));
    ++next_id_;
  } else if (op == "revise") {
    const auto jid = string_of(event.at("judgment"), "id");
    auto it = find(jid);
    auto j = parse_body(event.at("judgment"), jid);
    check_unanswered(j, jid);
    *it = std::move(j);
  } else if (op == "delete") {
    judgments_.erase(find(string_of(event, "id")));
  } else {
    throw Error(ErrorCode::InvalidInput, "unknown event '" + op + "'");
  }
  recompute();
}

const ScopeState& Session::add_judgment(const Json& body) {
  auto j = parse_body(body, "j" + std::to_string(next_id_));
  Json event{{"op", "add"}, {"judgment", record_json(j)}};
  apply(event);
  events_.push_back(std::move(event));
  return scope(j.scope);
}

const ScopeState& Session::revise_judgment(const std::string& judgment_id, const Json& body) {
  auto it = std::find_if(judgments_.begin(), judgments_.end(),
                         [&](const SessionJudgment& j) { return j.id == judgment_id; });
  if (it == judgments_.end()) {
    throw SessionError(SessionError::Kind::NotFound, "no judgment '" + judgment_id + "'");
  }
  auto j = parse_body(body, judgment_id);
  Json event{{"op", "revise"}, {"judgment", record_json(j)}};
  apply(event);
  events_.push_back(std::move(event));
  return scope(j.scope);
}

const ScopeState& Session::delete_judgment(const std::string& judgment_id) {
  auto it = std::find_if(judgments_.begin(), judgments_.end(),
                         [&](const SessionJudgment& j) { return j.id == judgment_id; });
  if (it == judgments_.end()) {
    throw SessionError(SessionError::Kind::NotFound, "no judgment '" + judgment_id + "'");
  }
  const std::string affected = it->scope;
  Json event{{"op", "delete"}, {"id", judgment_id}};
  apply(event);
  events_.push_back(std::move(event));
  return scope(affected);
}

std::vector<std::string> Session::scope_names() const {
  std::vector<std::string> names;
  for (const auto& id : def_.criteria.ids()) names.push_back(intra_scope(id));
  names.emplace_back(kInterScope);
  return names;
}

std::vector<Question> Session::questions(const std::string& scope) const {
  std::vector<Question> out;
  if (scope == kInterScope) {
    const std::size_t n = def_.criteria.size();
    const std::uint32_t full = Coalition::full(n).bits;
    auto key = [&](std::uint32_t s) { return def_.criteria.key(Coalition{s}); };
    out.push_back({scope, key(full), key(0)});
    if (options_.sparse) {
      for (std::uint32_t a = 0; a < full; ++a) {
        for (std::size_t i = 0; i < n; ++i) {
          const Coalition c{a};
          if (c.contains(i)) continue;
          const auto b = c.with(i).bits;
          if (a == 0 && b == full) continue;
          out.push_back({scope, key(b), key(a)});
        }
      }
    } else {
      for (std::uint32_t a = 0; a <= full; ++a) {
        for (std::uint32_t b = a + 1; b <= full; ++b) {
          if (a == 0 && b == full) continue;
          out.push_back({scope, key(b), key(a)});
        }
      }
    }
    return out;
  }
  const auto& attr =
      def_.attributes[def_.criteria.index_of(scope.substr(kIntraPrefix.size()))];
  const auto& levels = attr.levels();
  const std::size_t zero = attr.zero_index();
  const std::size_t one = attr.one_index();
  auto endpoints = [&](std::size_t j, std::size_t k) {
    return (j == zero && k == one) || (j == one && k == zero);
  };
  out.push_back({scope, levels[one], levels[zero]});
  for (std::size_t j = 0; j < levels.size(); ++j) {
    for (std::size_t k = j + 1; k < levels.size(); ++k) {
      if (options_.sparse && k != j + 1) break;
      if (endpoints(j, k)) continue;
      out.push_back({scope, levels[j], levels[k]});
    }
  }
  return out;
}

std::optional<Question> Session::next_question() const {
  for (const auto& name : scope_names()) {
    for (auto& q : questions(name)) {
      const bool answered = std::any_of(judgments_.begin(), judgments_.end(), [&](const auto& j) {
        return j.scope == q.scope && same_pair(j, q.first, q.second);
      });
      if (!answered) return q;
    }
  }
  return std::nullopt;
}

const ScopeState& Session::scope(std::string_view name) const {
  for (const auto& s : scopes_) {
    if (s.scope == name) return s;
  }
  throw SessionError(SessionError::Kind::NotFound, "no scope '" + std::string(name) + "'");
}

void Session::recompute() {
  scopes_.clear();
  model_.reset();
  std::vector<UtilityScale> utilities;
  std::optional<Capacity> capacity;

  for (const auto& name : scope_names()) {
    ScopeState st;
    st.scope = name;
    const auto qs = questions(name);
    st.questions = qs.size();
    std::vector<const SessionJudgment*> mine;
    for (const auto& j : judgments_) {
      if (j.scope == name) mine.push_back(&j);
    }
    for (const auto& q : qs) {
      if (std::any_of(mine.begin(), mine.end(),
                      [&](const SessionJudgment* j) { return same_pair(*j, q.first, q.second); })) {
        ++st.answered;
      }
    }
    const bool complete = st.answered == st.questions;

    try {
      if (name == kInterScope) {
        std::vector<CoalitionJudgment> cj;
        for (const auto* j : mine) {
          cj.push_back({j->id, def_.criteria.parse_key(j->better),
                        def_.criteria.parse_key(j->worse), j->category});
        }
        auto outcome = solve_capacity_scale(def_.criteria, cj);
        if (auto* r = std::get_if<InconsistencyReport>(&outcome)) {
          st.status = ScopeStatus::Inconsistent;
          st.reason = "judgments form a contradictory cycle";
          st.report = *r;
        } else if (auto* m = std::get_if<MonotonicityViolation>(&outcome)) {
          st.status = ScopeStatus::MonotonicityConflict;
          st.reason = "a coalition is valued below one of its subsets";
          st.conflict = *m;
        } else if (complete) {
          st.status = ScopeStatus::Consistent;
          capacity = std::get<CapacitySolution>(outcome).capacity;
        } else {
          st.reason = "unanswered questions remain";
        }
      } else {
        const auto& attr =
            def_.attributes[def_.criteria.index_of(name.substr(kIntraPrefix.size()))];
        std::vector<DifferenceJudgment> dj;
        for (const auto* j : mine) dj.push_back({j->id, j->better, j->worse, j->category});
        auto outcome = solve_scale(build_constraint_graph(attr, dj), attr);
        if (auto* r = std::get_if<InconsistencyReport>(&outcome)) {
          st.status = ScopeStatus::Inconsistent;
          st.reason = "judgments form a contradictory cycle";
          st.report = *r;
        } else if (complete) {
          st.status = ScopeStatus::Consistent;
          utilities.push_back(std::get<ScaleSolution>(outcome).scale);
        } else {
          st.reason = "unanswered questions remain";
        }
      }
    } catch (const Error& e) {
      if (e.code() != ErrorCode::DegenerateEndpoints) throw;
      st.status = ScopeStatus::Incomplete;
      st.reason = "nothing places the best reference strictly above the worst";
    }
    scopes_.push_back(std::move(st));
  }

  if (capacity && utilities.size() == def_.attributes.size()) {
    model_.emplace(def_.criteria, def_.attributes, std::move(utilities), std::move(*capacity));
  }
}

json_io::Json to_json(const ScopeState& s, const CriteriaSet& criteria) {
  Json out{{"scope", s.scope},
           {"status", std::string(to_string(s.status))},
           {"answered", s.answered},
           {"questions", s.questions}};
  if (!s.reason.empty()) out["reason"] = s.reason;
  if (s.report) out["report"] = json_io::to_json(*s.report);
  if (s.conflict) out["report"] = json_io::to_json(*s.conflict, criteria);
  return out;
}

json_io::Json to_json(const Question& q) {
  Json categories = Json::array();
  for (int r = 1; r <= 6; ++r) categories.push_back(std::string(label(category_from_rank(r))));
  Json out{{"done", false}, {"scope", q.scope}, {"pair", {q.first, q.second}},
           {"categories", std::move(categories)}};
  if (q.scope != kInterScope) out["criterion"] = q.scope.substr(kIntraPrefix.size());
  return out;
}

}  // namespace mcda
