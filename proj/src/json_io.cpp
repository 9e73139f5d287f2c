#include "mcda/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

namespace mcda::json_io {

namespace {

[[noreturn]] void schema_error(const std::string& what) {
  throw Error(ErrorCode::InvalidInput, what);
}

const Json& field(const Json& j, const char* key, const char* where) {
  if (!j.is_object()) schema_error(std::string(where) + " must be an object");
  auto it = j.find(key);
  if (it == j.end()) schema_error(std::string(where) + " is missing \"" + key + "\"");
  return *it;
}

std::string string_field(const Json& j, const char* key, const char* where) {
  const Json& v = field(j, key, where);
  if (!v.is_string()) schema_error(std::string(where) + ": \"" + key + "\" must be a string");
  return v.get<std::string>();
}

double number(const Json& v, const std::string& where) {
  if (!v.is_number()) schema_error(where + " must be a number");
  return v.get<double>();
}

std::vector<std::string> string_array(const Json& v, const std::string& where) {
  if (!v.is_array()) schema_error(where + " must be an array of strings");
  std::vector<std::string> out;
  for (const auto& e : v) {
    if (!e.is_string()) schema_error(where + " must be an array of strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

void dump_to(std::string& out, const Json& j, int depth) {
  const std::string pad(static_cast<std::size_t>(depth) * 2, ' ');
  const std::string inner(static_cast<std::size_t>(depth + 1) * 2, ' ');
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ",\n";
        first = false;
        out += inner + Json(it.key()).dump() + ": ";
        dump_to(out, it.value(), depth + 1);
      }
      out += "\n" + pad + "}";
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      out += "[\n";
      bool first = true;
      for (const auto& e : j) {
        if (!first) out += ",\n";
        first = false;
        out += inner;
        dump_to(out, e, depth + 1);
      }
      out += "\n" + pad + "]";
      return;
    }
    case Json::value_t::number_float: {
      double v = j.get<double>();
      if (!std::isfinite(v)) {
        out += "null";
        return;
      }
      if (v == 0.0) v = 0.0;  // drop the sign of zero
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.17g", v);
      out += buf;
      return;
    }
    default:
      out += j.dump();
  }
}

}  // namespace

std::string dump(const Json& j) {
  std::string out;
  dump_to(out, j, 0);
  out += "\n";
  return out;
}

Json parse(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    schema_error(std::string("malformed JSON: ") + e.what());
  }
}

Json read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) schema_error("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

void write_file(const std::filesystem::path& path, const Json& j) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << dump(j);
  if (!out) throw std::runtime_error("failed writing " + path.string());
}

// criteria ----------------------------------------------------------------

Json attribute_to_json(const AttributeScale& a) {
  return Json{{"id", a.criterion_id()},
              {"levels", a.levels()},
              {"zero", a.zero_level()},
              {"one", a.one_level()}};
}

CriteriaDefinition criteria_from_json(const Json& j) {
  const Json& list = field(j, "criteria", "criteria definition");
  if (!list.is_array() || list.empty()) schema_error("\"criteria\" must be a non-empty array");
  std::vector<std::string> ids;
  std::vector<AttributeScale> attrs;
  for (const auto& c : list) {
    auto id = string_field(c, "id", "criterion");
    auto levels = string_array(field(c, "levels", "criterion"), "\"levels\"");
    attrs.emplace_back(id, std::move(levels), string_field(c, "zero", "criterion"),
                       string_field(c, "one", "criterion"));
    ids.push_back(std::move(id));
  }
  return {CriteriaSet(std::move(ids)), std::move(attrs)};
}

Json to_json(const CriteriaDefinition& def) {
  Json list = Json::array();
  for (const auto& a : def.attributes) list.push_back(attribute_to_json(a));
  return Json{{"criteria", std::move(list)}};
}

// judgments ---------------------------------------------------------------

namespace {

std::string judgment_id(const Json& j, const std::string& fallback) {
  auto it = j.find("id");
  if (it == j.end()) return fallback;
  if (!it->is_string() || it->get<std::string>().empty()) {
    schema_error("judgment \"id\" must be a non-empty string");
  }
  return it->get<std::string>();
}

Category category_field(const Json& j) {
  return parse_category(string_field(j, "category", "judgment"));
}

}  // namespace

IntraJudgmentRecord intra_judgment_from_json(const Json& j, const CriteriaDefinition& def,
                                             const std::string& fallback_id) {
  auto crit = string_field(j, "criterion", "judgment");
  const auto& attr = def.attributes[def.criteria.index_of(crit)];
  DifferenceJudgment d{judgment_id(j, fallback_id), string_field(j, "better", "judgment"),
                       string_field(j, "worse", "judgment"), category_field(j)};
  attr.index_of(d.better);
  attr.index_of(d.worse);
  return {std::move(crit), std::move(d)};
}

Json to_json(const IntraJudgmentRecord& r) {
  return Json{{"id", r.judgment.id},
              {"criterion", r.criterion},
              {"better", r.judgment.better},
              {"worse", r.judgment.worse},
              {"category", std::string(label(r.judgment.category))}};
}

std::vector<IntraJudgmentRecord> intra_judgments_from_json(const Json& j,
                                                           const CriteriaDefinition& def) {
  if (!j.is_array()) schema_error("judgments must be an array");
  std::vector<IntraJudgmentRecord> out;
  for (std::size_t k = 0; k < j.size(); ++k) {
    out.push_back(intra_judgment_from_json(j[k], def, "j" + std::to_string(k + 1)));
  }
  return out;
}

CoalitionJudgment inter_judgment_from_json(const Json& j, const CriteriaSet& criteria,
                                           const std::string& fallback_id) {
  return {judgment_id(j, fallback_id), criteria.parse_key(string_field(j, "better", "judgment")),
          criteria.parse_key(string_field(j, "worse", "judgment")), category_field(j)};
}

Json to_json(const CoalitionJudgment& j, const CriteriaSet& criteria) {
  return Json{{"id", j.id},
              {"better", criteria.key(j.better)},
              {"worse", criteria.key(j.worse)},
              {"category", std::string(label(j.category))}};
}

InterJudgments inter_judgments_from_json(const Json& j) {
  CriteriaSet criteria(string_array(field(j, "criteria", "inter judgments"), "\"criteria\""));
  const Json& list = field(j, "judgments", "inter judgments");
  if (!list.is_array()) schema_error("\"judgments\" must be an array");
  std::vector<CoalitionJudgment> out;
  for (std::size_t k = 0; k < list.size(); ++k) {
    out.push_back(inter_judgment_from_json(list[k], criteria, "j" + std::to_string(k + 1)));
  }
  return {std::move(criteria), std::move(out)};
}

// capacities --------------------------------------------------------------

Json capacity_map(const CriteriaSet& criteria, const Game& g) {
  Json out = Json::object();
  for (std::uint32_t s = 0; s < g.table_size(); ++s) {
    out[criteria.key(Coalition{s})] = g[Coalition{s}];
  }
  return out;
}

Capacity capacity_from_map(const Json& j, const CriteriaSet& criteria) {
  if (!j.is_object()) schema_error("capacity must be an object keyed by coalition");
  const std::size_t n = criteria.size();
  if (n > kMaxInterCriteria) throw Error(ErrorCode::TooLarge, "capacities are limited to n <= 6");
  std::vector<double> v(std::size_t{1} << n, 0.0);
  std::vector<bool> seen(v.size(), false);
  for (auto it = j.begin(); it != j.end(); ++it) {
    const Coalition c = criteria.parse_key(it.key());
    if (seen[c.bits]) schema_error("coalition '" + it.key() + "' given twice");
    seen[c.bits] = true;
    v[c.bits] = number(it.value(), "capacity value of '" + it.key() + "'");
  }
  for (std::size_t s = 1; s < v.size(); ++s) {
    if (!seen[s]) schema_error("capacity misses coalition '" + criteria.key(Coalition{static_cast<std::uint32_t>(s)}) + "'");
  }
  if (v[0] != 0.0) throw Error(ErrorCode::NotNormalized, "capacity of the empty coalition must be 0");
  return make_capacity(n, v, 1e-9);
}

Json capacity_to_json(const CriteriaSet& criteria, const Capacity& mu) {
  return Json{{"criteria", criteria.ids()}, {"capacity", capacity_map(criteria, mu)}};
}

std::pair<CriteriaSet, Capacity> capacity_from_json(const Json& j) {
  CriteriaSet criteria(string_array(field(j, "criteria", "capacity file"), "\"criteria\""));
  Capacity mu = capacity_from_map(field(j, "capacity", "capacity file"), criteria);
  return {std::move(criteria), std::move(mu)};
}

// scales and reports ------------------------------------------------------

Json to_json(const UtilityScale& u) {
  Json out = Json::object();
  for (const auto& [level, value] : u.values()) out[level] = value;
  return out;
}

Json scales_to_json(const std::vector<UtilityScale>& scales) {
  Json out = Json::object();
  for (const auto& u : scales) out[u.criterion_id()] = to_json(u);
  return out;
}

Json to_json(const InconsistencyReport& r) {
  Json steps = Json::array();
  for (const auto& s : r.steps) {
    steps.push_back(Json{{"judgment", s.judgment_id},
                         {"kind", std::string(to_string(s.kind))},
                         {"from", s.from},
                         {"to", s.to},
                         {"weight", s.weight}});
  }
  return Json{{"status", "inconsistent"},
              {"cycle", r.cycle},
              {"total_slack", r.total_slack},
              {"steps", std::move(steps)}};
}

Json to_json(const MonotonicityViolation& v, const CriteriaSet& criteria) {
  Json pairs = Json::array();
  for (const auto& p : v.pairs) {
    pairs.push_back(Json{{"subset", criteria.key(p.subset)},
                         {"superset", criteria.key(p.superset)},
                         {"subset_value", p.subset_value},
                         {"superset_value", p.superset_value}});
  }
  return Json{{"status", "monotonicity_conflict"},
              {"pairs", std::move(pairs)},
              {"values", capacity_map(criteria, v.game)}};
}

// identification ----------------------------------------------------------

std::vector<ScoredAct> scored_acts_from_json(const Json& j) {
  if (!j.is_array()) schema_error("data must be an array of {\"profile\", \"score\"}");
  std::vector<ScoredAct> out;
  for (const auto& e : j) {
    const Json& p = field(e, "profile", "datum");
    if (!p.is_array()) schema_error("\"profile\" must be an array of numbers");
    ScoredAct a;
    for (const auto& x : p) a.profile.push_back(number(x, "profile entry"));
    a.score = number(field(e, "score", "datum"), "\"score\"");
    if (!out.empty() && a.profile.size() != out.front().profile.size()) {
      throw Error(ErrorCode::DimensionMismatch, "profiles differ in length");
    }
    out.push_back(std::move(a));
  }
  return out;
}

Json to_json(const FitReport& r, const CriteriaSet& criteria) {
  return Json{{"criteria", criteria.ids()},
              {"capacity", capacity_map(criteria, r.capacity)},
              {"objective", r.objective},
              {"rmse", r.rmse},
              {"max_violation", r.max_violation},
              {"iterations", r.iterations},
              {"start_objective", r.start_objective}};
}

// model -------------------------------------------------------------------

DecisionModel model_from_json(const Json& j) {
  auto def = criteria_from_json(j);
  const Json& scales = field(j, "scales", "model");
  if (!scales.is_object()) schema_error("\"scales\" must be an object");
  std::vector<UtilityScale> us;
  for (const auto& attr : def.attributes) {
    auto it = scales.find(attr.criterion_id());
    if (it == scales.end() || !it->is_object()) {
      schema_error("\"scales\" lacks criterion '" + attr.criterion_id() + "'");
    }
    std::map<std::string, double> values;
    for (auto lv = it->begin(); lv != it->end(); ++lv) {
      attr.index_of(lv.key());
      values[lv.key()] = number(lv.value(), "utility of '" + lv.key() + "'");
    }
    us.emplace_back(attr, std::move(values));
  }
  if (scales.size() != def.attributes.size()) schema_error("\"scales\" names unknown criteria");
  Capacity mu = capacity_from_map(field(j, "capacity", "model"), def.criteria);
  return DecisionModel(std::move(def.criteria), std::move(def.attributes), std::move(us),
                       std::move(mu));
}

Json to_json(const DecisionModel& m) {
  Json out = to_json(CriteriaDefinition{m.criteria(), m.attributes()});
  out["scales"] = scales_to_json(m.scales());
  out["capacity"] = capacity_map(m.criteria(), m.capacity());
  return out;
}

Act act_from_json(const Json& j) {
  Act a;
  a.id = string_field(j, "id", "act");
  const Json& asg = field(j, "assignments", "act");
  if (!asg.is_object()) schema_error("\"assignments\" must be an object");
  for (auto it = asg.begin(); it != asg.end(); ++it) {
    if (!it.value().is_string()) schema_error("assigned levels must be strings");
    a.assignments[it.key()] = it.value().get<std::string>();
  }
  return a;
}

std::vector<Act> acts_from_json(const Json& j) {
  if (!j.is_array()) schema_error("acts must be an array");
  std::vector<Act> out;
  for (const auto& e : j) out.push_back(act_from_json(e));
  return out;
}

Json to_json(const Act& a) {
  Json asg = Json::object();
  for (const auto& [c, l] : a.assignments) asg[c] = l;
  return Json{{"id", a.id}, {"assignments", std::move(asg)}};
}

Json to_json(const std::vector<RankedAct>& ranked) {
  Json out = Json::array();
  for (const auto& r : ranked) out.push_back(Json{{"id", r.act.id}, {"value", r.value}});
  return out;
}

// axioms ------------------------------------------------------------------

Json to_json(const Counterexample& c, const CriteriaSet& criteria) {
  Json out{{"x", c.x}, {"expected", c.expected}, {"got", c.got}, {"deviation", c.deviation}};
  if (!c.x_prime.empty()) out["x_prime"] = c.x_prime;
  if (c.coalition) out["coalition"] = criteria.key(*c.coalition);
  if (!c.params.empty()) out["params"] = c.params;
  return out;
}

Json to_json(const AxiomReport& r, const CriteriaSet& criteria) {
  Json ces = Json::array();
  for (const auto& c : r.counterexamples) ces.push_back(to_json(c, criteria));
  Json out{{"axiom", std::string(to_string(r.axiom))},
           {"passed", r.passed},
           {"cases", r.cases},
           {"failures", r.failures},
           {"counterexamples", std::move(ces)}};
  if (!r.note.empty()) out["note"] = r.note;
  return out;
}

Json to_json(const CharacterizationSummary& s, const CriteriaSet& criteria) {
  Json reports = Json::array();
  for (const auto& r : s.reports) reports.push_back(to_json(r, criteria));
  Json out{{"aggregator", s.aggregator},
           {"reports", std::move(reports)},
           {"characterization_holds", s.characterization_holds},
           {"all_passed", s.all_passed}};
  out["choquet_deviation"] = s.choquet_deviation ? Json(*s.choquet_deviation) : Json(nullptr);
  return out;
}

}  // namespace mcda::json_io
