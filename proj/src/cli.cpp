#include "mcda/cli.hpp"

#include <CLI11.hpp>

#include <atomic>
#include <functional>

#include "mcda/json_io.hpp"
#include "mcda/service.hpp"

namespace mcda::cli {

using json_io::Json;

namespace {

std::atomic<Service*> g_service{nullptr};
std::atomic<int> g_port{0};

void emit(const Json& j, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << json_io::dump(j);
  } else {
    json_io::write_file(path, j);
  }
}

int intra_solve(const std::string& criteria_file, const std::string& judgments_file,
                const std::string& context, const std::string& out_file, std::ostream& out,
                std::ostream& err) {
  const auto def = json_io::criteria_from_json(json_io::read_file(criteria_file));
  const auto records = json_io::intra_judgments_from_json(json_io::read_file(judgments_file), def);

  Json scales = Json::object();
  Json reports = Json::object();
  Json degenerate = Json::object();
  for (const auto& attr : def.attributes) {
    std::vector<DifferenceJudgment> mine;
    for (const auto& r : records) {
      if (r.criterion == attr.criterion_id()) mine.push_back(r.judgment);
    }
    try {
      auto outcome = solve_scale(build_constraint_graph(attr, mine), attr);
      if (auto* rep = std::get_if<InconsistencyReport>(&outcome)) {
        reports[attr.criterion_id()] = json_io::to_json(*rep);
      } else {
        scales[attr.criterion_id()] = json_io::to_json(std::get<ScaleSolution>(outcome).scale);
      }
    } catch (const Error& e) {
      if (e.code() != ErrorCode::DegenerateEndpoints) throw;
      degenerate[attr.criterion_id()] = e.what();
    }
  }
  if (!reports.empty() || !degenerate.empty()) {
    Json doc{{"status", "inconsistent"}, {"reports", reports}};
    if (!degenerate.empty()) doc["degenerate"] = degenerate;
    emit(doc, out_file, out);
    err << "inconsistent: " << reports.size() << " criteria with contradictory cycles, "
        << degenerate.size() << " with undetermined endpoints\n";
    return kInconsistent;
  }
  emit(Json{{"context", context}, {"scales", scales}}, out_file, out);
  return kSuccess;
}

int inter_solve(const std::string& judgments_file, bool enforce, const std::string& out_file,
                std::ostream& out, std::ostream& err) {
  const auto input = json_io::inter_judgments_from_json(json_io::read_file(judgments_file));
  InterOptions options;
  options.enforce_monotone = enforce;
  try {
    auto outcome = solve_capacity_scale(input.criteria, input.judgments, options);
    if (auto* rep = std::get_if<InconsistencyReport>(&outcome)) {
      emit(json_io::to_json(*rep), out_file, out);
      err << "inconsistent: cycle through " << rep->cycle.size() << " judgments\n";
      return kInconsistent;
    }
    if (auto* mv = std::get_if<MonotonicityViolation>(&outcome)) {
      emit(json_io::to_json(*mv, input.criteria), out_file, out);
      err << "monotonicity conflict on " << mv->pairs.size() << " covering pairs\n";
      return kInconsistent;
    }
    const auto& sol = std::get<CapacitySolution>(outcome);
    emit(json_io::capacity_to_json(input.criteria, sol.capacity), out_file, out);
    return kSuccess;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::DegenerateEndpoints) throw;
    emit(Json{{"status", "degenerate"}, {"message", e.what()}}, out_file, out);
    return kInconsistent;
  }
}

int identify(const std::string& data_file, const std::string& baseline_file,
             const std::string& out_file, std::ostream& out) {
  const auto data = json_io::scored_acts_from_json(json_io::read_file(data_file));
  if (data.empty()) throw Error(ErrorCode::InvalidInput, "no scored acts to fit");
  const std::size_t n = data.front().profile.size();
  FitOptions options;
  std::vector<std::string> ids;
  for (std::size_t i = 0; i < n; ++i) ids.push_back(std::to_string(i + 1));
  CriteriaSet criteria(ids);
  if (!baseline_file.empty()) {
    auto [c, mu] = json_io::capacity_from_json(json_io::read_file(baseline_file));
    criteria = std::move(c);
    options.baseline = std::move(mu);
  }
  const auto report = fit_capacity(n, data, options);
  emit(json_io::to_json(report, criteria), out_file, out);
  return kSuccess;
}

int rank_acts(const std::string& model_file, const std::string& acts_file,
              const std::string& out_file, std::ostream& out) {
  const auto model = json_io::model_from_json(json_io::read_file(model_file));
  const auto acts = json_io::acts_from_json(json_io::read_file(acts_file));
  emit(Json{{"ranking", json_io::to_json(rank(model, acts))}}, out_file, out);
  return kSuccess;
}

int axioms_check(const std::string& capacity_file, const std::string& aggregator,
                 std::size_t samples, std::uint64_t seed, const std::string& out_file,
                 std::ostream& out) {
  const auto f = aggregators::by_name(aggregator);
  auto [criteria, mu] = json_io::capacity_from_json(json_io::read_file(capacity_file));
  AxiomCheckConfig cfg;
  cfg.samples = samples;
  cfg.seed = seed;
  const std::vector<Capacity> caps{mu};
  const auto summary = characterization_suite(f, caps, cfg);
  const Json doc = json_io::to_json(summary, criteria);
  if (!out_file.empty()) json_io::write_file(out_file, doc);
  out << json_io::dump(doc);
  return summary.all_passed ? kSuccess : kInconsistent;
}

int serve(const std::string& host, int port, const std::string& state, bool sparse,
          std::ostream& out, std::ostream& err) {
  Service service(ServiceOptions{state, sparse});
  const int bound = service.bind(host, port);
  if (bound < 0) {
    err << "error: cannot bind " << host << ":" << port << "\n";
    return kLimit;
  }
  out << "listening on http://" << host << ":" << bound << std::endl;
  g_service = &service;
  g_port = bound;
  service.listen();
  g_port = 0;
  g_service = nullptr;
  return kSuccess;
}

int exit_for(const Error& e) {
  return e.code() == ErrorCode::TooLarge ? kLimit : kMalformed;
}

}  // namespace

int serving_port() { return g_port.load(); }

void stop_serving() {
  if (Service* s = g_service.load()) s->stop();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Choquet-integral decision modelling: elicitation, identification, ranking"};
  app.name("mcda");
  app.require_subcommand(1);
  std::function<int()> action;

  std::string criteria, judgments, context = "zero", out_file, data, baseline, model, acts,
                                   capacity, aggregator, state, host = "127.0.0.1";
  bool enforce = false, sparse = false;
  std::size_t samples = 1000;
  std::uint64_t seed = 42;
  int port = 8080;

  auto* intra = app.add_subcommand("intra-solve", "Solve one utility scale per criterion");
  intra->add_option("--criteria", criteria, "Criteria definition JSON")->required();
  intra->add_option("--judgments", judgments, "Array of level-pair judgments")->required();
  intra->add_option("--context", context, "Elicitation context of the items")
      ->check(CLI::IsMember({"zero", "one"}));
  intra->add_option("--out", out_file, "Output file (stdout when omitted)");
  intra->callback([&] {
    action = [&] { return intra_solve(criteria, judgments, context, out_file, out, err); };
  });

  auto* inter = app.add_subcommand("inter-solve", "Solve a capacity from coalition judgments");
  inter->add_option("--judgments", judgments, "Criteria ids and coalition-pair judgments")
      ->required();
  inter->add_flag("--enforce-monotone", enforce, "Add monotonicity to the constraints");
  inter->add_option("--out", out_file, "Output file (stdout when omitted)");
  inter->callback([&] { action = [&] { return inter_solve(judgments, enforce, out_file, out, err); }; });

  auto* ident = app.add_subcommand("identify", "Fit a capacity to scored acts");
  ident->add_option("--data", data, "Array of {profile, score}")->required();
  ident->add_option("--baseline", baseline, "Capacity JSON the fit must not do worse than");
  ident->add_option("--out", out_file, "Output file (stdout when omitted)");
  ident->callback([&] { action = [&] { return identify(data, baseline, out_file, out); }; });

  auto* rk = app.add_subcommand("rank", "Evaluate and rank acts");
  rk->add_option("--model", model, "Decision model JSON")->required();
  rk->add_option("--acts", acts, "Array of acts")->required();
  rk->add_option("--out", out_file, "Output file (stdout when omitted)");
  rk->callback([&] { action = [&] { return rank_acts(model, acts, out_file, out); }; });

  auto* ax = app.add_subcommand("axioms-check", "Test an aggregator against the axioms");
  ax->add_option("--capacity", capacity, "Capacity JSON")->required();
  ax->add_option("--aggregator", aggregator, "choquet | wsum | min | max | mean")->required();
  ax->add_option("--samples", samples, "Random cases per axiom")->check(CLI::PositiveNumber);
  ax->add_option("--seed", seed, "Random seed");
  ax->add_option("--out", out_file, "Also write the report here");
  ax->callback([&] {
    action = [&] { return axioms_check(capacity, aggregator, samples, seed, out_file, out); };
  });

  auto* sv = app.add_subcommand("serve", "Run the elicitation HTTP service");
  sv->add_option("--port", port, "TCP port, 0 for any free port")->check(CLI::Range(0, 65535));
  sv->add_option("--state", state, "Directory holding session documents")->required();
  sv->add_option("--host", host, "Interface to bind");
  sv->add_flag("--sparse", sparse, "Ask only endpoint and consecutive pairs");
  sv->callback([&] { action = [&] { return serve(host, port, state, sparse, out, err); }; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kMalformed;
  }

  try {
    return action();
  } catch (const NotMonotoneError& e) {
    err << "error: " << e.what() << "\n";
    return kMalformed;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_for(e);
  } catch (const Json::exception& e) {
    err << "error: " << e.what() << "\n";
    return kMalformed;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kLimit;
  }
}

}  // namespace mcda::cli
