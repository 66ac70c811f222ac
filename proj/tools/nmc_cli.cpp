// Command-line front end. Every verb reads the JSON file formats defined in
// include/nmc/json_io.hpp and prints one deterministic JSON report:
//
//   {"verb":..., "inputs":..., "results":[{"property","holds","witness"},...]}
//
// Exit codes: 0 all requested checks hold / query answered true; 1 a check
// failed or the query answered false (witnesses in the report); 2 input
// error (malformed file, bad formula, failed validation).

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "nmc/choice.hpp"
#include "nmc/connectives.hpp"
#include "nmc/consequence.hpp"
#include "nmc/json_io.hpp"
#include "nmc/klm.hpp"
#include "nmc/qmeasure.hpp"
#include "nmc/universe.hpp"

namespace {

using nmc::Json;
using nmc::WorldSet;

nmc::ChoiceProperty choice_property_by_name(const std::string& s) {
  using P = nmc::ChoiceProperty;
  for (auto p : {P::Contraction, P::Coherence, P::LocalMonotonicity, P::Expansion, P::Arrow,
                 P::PathIndependence, P::DefinabilityPreservation})
    if (s == nmc::name(p)) return p;
  throw nmc::InputError("unknown choice property: '" + s + "'");
}

nmc::MeasureProperty measure_property_by_name(const std::string& s) {
  using P = nmc::MeasureProperty;
  for (auto p : {P::StrictOrder, P::RespectsInclusion, P::NegligibleUnion, P::LeftDifference,
                 P::UnionBound, P::Modularity})
    if (s == nmc::name(p)) return p;
  throw nmc::InputError("unknown measure property: '" + s + "'");
}

nmc::ConnectiveRule rule_by_name(const std::string& s) {
  using R = nmc::ConnectiveRule;
  for (auto r : {R::AndBothSides, R::NegLeftIntro, R::NegLeftElim, R::OrLeftIntro,
                 R::OrRightIntro, R::ImpRightIntro, R::ImpLeftIntro})
    if (s == nmc::name(r)) return r;
  throw nmc::InputError("unknown rule: '" + s + "'");
}

nmc::KlmAxiom klm_axiom_by_name(const std::string& s) {
  using A = nmc::KlmAxiom;
  for (auto a : {A::Reflexivity, A::LeftLogicalEquivalence, A::RightWeakening, A::AndRule,
                 A::OrRule, A::CautiousMonotonicityRule})
    if (s == nmc::name(a)) return a;
  throw nmc::InputError("unknown axiom: '" + s + "'");
}

struct Options {
  std::string universe_path, choice_path, measure_path, operator_path, relation_path;
  std::string property, postulate, rule, axiom;
  std::string premises, query;
  std::string to, kind, family = "cclm", out_path;
  std::size_t worlds = 3;
  std::size_t samples = 0;
  std::optional<std::uint64_t> seed;
  bool exclude_inconsistent = false;
};

nmc::UniversePtr load_universe(const std::string& path) {
  return nmc::universe_from_json(nmc::load_json(path));
}

nmc::ChoiceFunction load_choice(const Options& o) {
  const Json j = nmc::load_json(o.choice_path);
  const auto dir = std::filesystem::path(o.choice_path).parent_path();
  if (!o.universe_path.empty())
    return nmc::choice_from_json(load_universe(o.universe_path), j);
  return nmc::choice_from_json(j, dir);
}

nmc::QualMeasure load_measure(const Options& o) {
  const Json j = nmc::load_json(o.measure_path);
  const auto dir = std::filesystem::path(o.measure_path).parent_path();
  if (!o.universe_path.empty())
    return nmc::measure_from_json(load_universe(o.universe_path), j);
  return nmc::measure_from_json(j, dir);
}

std::vector<nmc::Formula> parse_premises(const std::string& text) {
  std::vector<nmc::Formula> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string::npos) end = text.size();
    const std::string part = text.substr(start, end - start);
    if (part.find_first_not_of(" \t") != std::string::npos) out.push_back(nmc::parse(part));
    start = end + 1;
  }
  return out;
}

int emit(const std::string& verb, Json inputs, Json results, bool all_hold,
         Json extra = Json::object()) {
  Json report;
  report["verb"] = verb;
  report["inputs"] = std::move(inputs);
  for (auto& [k, v] : extra.items()) report[k] = v;
  report["results"] = std::move(results);
  std::cout << report.dump(2) << '\n';
  return all_hold ? 0 : 1;
}

int run_check_choice(const Options& o) {
  const auto f = load_choice(o);
  std::vector<nmc::ChoiceProperty> props;
  if (!o.property.empty()) {
    props.push_back(choice_property_by_name(o.property));
  } else {
    using P = nmc::ChoiceProperty;
    props = {P::Contraction, P::Coherence, P::LocalMonotonicity, P::Expansion, P::Arrow,
             P::PathIndependence, P::DefinabilityPreservation};
  }
  Json results = Json::array();
  bool all = true;
  for (auto p : props) {
    const auto v = nmc::check_choice_property(f, p);
    all = all && v.holds;
    results.push_back(nmc::verdict_to_json(*f.universe(), v));
  }
  return emit("check-choice",
              Json{{"universe", o.universe_path}, {"choice", o.choice_path}}, std::move(results),
              all);
}

int run_check_measure(const Options& o) {
  const auto m = load_measure(o);
  std::vector<nmc::MeasureProperty> props;
  if (!o.property.empty()) {
    props.push_back(measure_property_by_name(o.property));
  } else {
    using P = nmc::MeasureProperty;
    props = {P::StrictOrder, P::RespectsInclusion, P::NegligibleUnion, P::LeftDifference,
             P::UnionBound};
  }
  Json results = Json::array();
  bool all = true;
  for (auto p : props) {
    const auto v = nmc::check_measure_property(m, p);
    all = all && v.holds;
    results.push_back(nmc::verdict_to_json(*m.universe(), v));
  }
  return emit("check-measure",
              Json{{"universe", o.universe_path}, {"measure", o.measure_path}},
              std::move(results), all);
}

std::vector<nmc::Postulate> selected_postulates(const Options& o) {
  if (!o.postulate.empty()) return {nmc::postulate_by_name(o.postulate)};
  using P = nmc::Postulate;
  return {P::Inclusion, P::Idempotence, P::CautiousMonotonicity, P::ConditionalMonotonicity,
          P::ThresholdMonotonicity};
}

int run_check_operator(const Options& o) {
  Json results = Json::array();
  bool all = true;
  Json inputs;
  if (!o.operator_path.empty()) {
    const auto op = nmc::tabulated_from_json(nmc::load_json(o.operator_path));
    inputs["operator"] = o.operator_path;
    for (auto p : selected_postulates(o)) {
      const auto v = nmc::check_postulate(op, p);
      all = all && v.holds;
      results.push_back(nmc::verdict_to_json(v));
    }
  } else if (!o.choice_path.empty()) {
    const nmc::SemanticOperator op{load_choice(o)};
    inputs["universe"] = o.universe_path;
    inputs["choice"] = o.choice_path;
    for (auto p : selected_postulates(o)) {
      const auto v = nmc::check_postulate(op, p);
      all = all && v.holds;
      results.push_back(nmc::verdict_to_json(v));
    }
  } else {
    throw nmc::InputError("check-operator needs --operator or --choice");
  }
  return emit("check-operator", std::move(inputs), std::move(results), all);
}

int run_check_rules(const Options& o) {
  const nmc::SemanticOperator op{load_choice(o)};
  std::vector<nmc::ConnectiveRule> rules;
  if (!o.rule.empty()) {
    rules.push_back(rule_by_name(o.rule));
  } else {
    using R = nmc::ConnectiveRule;
    rules = {R::AndBothSides, R::NegLeftIntro, R::NegLeftElim, R::OrLeftIntro, R::OrRightIntro,
             R::ImpRightIntro, R::ImpLeftIntro};
  }
  if (o.samples > 0 && !o.seed)
    throw nmc::InputError("--samples requires an explicit --seed");
  Json results = Json::array();
  bool all = true;
  for (auto r : rules) {
    const auto v = o.samples > 0 ? nmc::check_rule_sampled(op, r, o.samples, *o.seed)
                                 : nmc::check_rule(op, r);
    all = all && v.holds;
    results.push_back(nmc::verdict_to_json(v));
  }
  return emit("check-rules", Json{{"universe", o.universe_path}, {"choice", o.choice_path}},
              std::move(results), all);
}

int run_check_klm(const Options& o) {
  const Json j = nmc::load_json(o.relation_path);
  const auto rel =
      nmc::relation_from_json(j, std::filesystem::path(o.relation_path).parent_path());
  std::vector<nmc::KlmAxiom> axioms;
  if (!o.axiom.empty()) {
    axioms.push_back(klm_axiom_by_name(o.axiom));
  } else {
    using A = nmc::KlmAxiom;
    axioms = {A::Reflexivity, A::LeftLogicalEquivalence, A::RightWeakening, A::AndRule,
              A::OrRule, A::CautiousMonotonicityRule};
  }
  Json results = Json::array();
  bool all = true;
  for (auto a : axioms) {
    const auto v = nmc::check_klm(rel, a);
    all = all && v.holds;
    results.push_back(nmc::verdict_to_json(v));
  }
  return emit("check-klm", Json{{"relation", o.relation_path}}, std::move(results), all);
}

int run_entail(const Options& o) {
  bool answer = false;
  Json inputs;
  if (!o.operator_path.empty()) {
    const auto op = nmc::tabulated_from_json(nmc::load_json(o.operator_path));
    inputs = Json{{"operator", o.operator_path}, {"premises", o.premises}, {"query", o.query}};
    std::vector<std::string> names;
    for (const auto& f : parse_premises(o.premises)) {
      if (f.kind() != nmc::Formula::Kind::Atom)
        throw nmc::InputError("tabulated premises must be sentence names");
      names.push_back(f.atom_name());
    }
    answer = op.entails(op.set_of(names), op.sentence_index(o.query));
  } else {
    const nmc::SemanticOperator op{load_choice(o)};
    inputs = Json{{"universe", o.universe_path}, {"choice", o.choice_path},
                  {"premises", o.premises}, {"query", o.query}};
    const auto premises = parse_premises(o.premises);
    const auto query = nmc::parse(o.query);
    if (op.universe()->mode() == nmc::Universe::Mode::Propositional) {
      answer = op.entails(premises, query);
    } else {
      nmc::SentenceSet a = 0;
      for (const auto& f : premises) {
        if (f.kind() != nmc::Formula::Kind::Atom)
          throw nmc::InputError("abstract premises must be sentence names");
        a |= nmc::SentenceSet{1} << op.universe()->sentence_index(f.atom_name());
      }
      if (query.kind() != nmc::Formula::Kind::Atom)
        throw nmc::InputError("abstract query must be a sentence name");
      answer = op.entails(a, op.universe()->sentence_index(o.query));
    }
  }
  Json results = Json::array();
  results.push_back(Json{{"property", "entails"}, {"holds", answer}, {"witness", nullptr}});
  return emit("entail", std::move(inputs), std::move(results), answer,
              Json{{"entails", answer}});
}

int run_convert(const Options& o) {
  Json output;
  if (o.to == "measure") {
    const auto f = load_choice(o);
    output = nmc::to_json(nmc::measure_from_choice(f));
  } else if (o.to == "choice") {
    const auto m = load_measure(o);
    output = nmc::to_json(nmc::choice_from_measure(m));
  } else {
    throw nmc::InputError("--to must be 'measure' or 'choice'");
  }
  if (!o.out_path.empty()) nmc::save_json(o.out_path, output);
  Json inputs{{"universe", o.universe_path}, {"to", o.to}};
  if (o.to == "measure") inputs["choice"] = o.choice_path;
  else inputs["measure"] = o.measure_path;
  return emit("convert", std::move(inputs), Json::array(), true,
              Json{{"output", std::move(output)}});
}

int run_represent(const Options& o) {
  const auto op = nmc::tabulated_from_json(nmc::load_json(o.operator_path));
  const auto rep = [&] {
    try {
      return nmc::represent(op, o.exclude_inconsistent);
    } catch (const std::invalid_argument& e) {
      throw nmc::InputError(e.what());
    }
  }();
  const bool round_trip = nmc::tabulate(rep.op()) == op;
  Json output;
  output["universe"] = nmc::to_json(*rep.universe);
  output["choice"] = nmc::to_json(rep.choice);
  Json results = Json::array();
  results.push_back(
      Json{{"property", "round_trip"}, {"holds", round_trip}, {"witness", nullptr}});
  return emit("represent",
              Json{{"operator", o.operator_path},
                   {"exclude_inconsistent", o.exclude_inconsistent}},
              std::move(results), round_trip, Json{{"output", std::move(output)}});
}

int run_search(const Options& o) {
  if (o.worlds < 1 || o.worlds > 3) throw nmc::InputError("--worlds must be 1..3");
  if (o.kind != "expansion_failure" && o.kind != "arrow_failure" &&
      o.kind != "non_modular_measure")
    throw nmc::InputError("unknown search kind: '" + o.kind + "'");
  const auto u = nmc::Universe::full_abstract(o.worlds);

  std::vector<nmc::ChoiceFunction> candidates;
  if (o.family == "cclm") {
    candidates = nmc::enumerate_cclm(u);
  } else if (o.family == "rank") {
    std::vector<unsigned> grade(o.worlds, 0);
    for (;;) {
      candidates.push_back(nmc::from_rank(u, grade));
      std::size_t i = 0;
      for (; i < grade.size(); ++i) {
        if (++grade[i] < o.worlds) break;
        grade[i] = 0;
      }
      if (i == grade.size()) break;
    }
  } else {
    throw nmc::InputError("--family must be 'cclm' or 'rank'");
  }

  Json witness = nullptr;
  bool found = false;
  for (const auto& f : candidates) {
    if (o.kind == "expansion_failure") {
      const auto v = nmc::check_choice_property(f, nmc::ChoiceProperty::Expansion);
      if (!v.holds) {
        witness = Json{{"choice", nmc::to_json(f)}, {"verdict", nmc::verdict_to_json(*u, v)}};
        found = true;
      }
    } else if (o.kind == "arrow_failure") {
      const auto v = nmc::check_choice_property(f, nmc::ChoiceProperty::Arrow);
      if (!v.holds) {
        witness = Json{{"choice", nmc::to_json(f)}, {"verdict", nmc::verdict_to_json(*u, v)}};
        found = true;
      }
    } else {
      const auto m = nmc::measure_from_choice(f);
      const auto v = nmc::check_measure_property(m, nmc::MeasureProperty::Modularity);
      if (!v.holds) {
        witness = Json{{"choice", nmc::to_json(f)}, {"measure", nmc::to_json(m)},
                       {"verdict", nmc::verdict_to_json(*u, v)}};
        found = true;
      }
    }
    if (found) break;
  }
  Json results = Json::array();
  results.push_back(Json{{"property", o.kind}, {"holds", found}, {"witness", witness}});
  return emit("search",
              Json{{"kind", o.kind}, {"worlds", o.worlds}, {"family", o.family}},
              std::move(results), true);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"nonmonotonic consequence toolkit"};
  app.require_subcommand(1);
  Options o;

  auto* check_choice = app.add_subcommand("check-choice", "check choice-function properties");
  check_choice->add_option("--universe", o.universe_path);
  check_choice->add_option("--choice", o.choice_path)->required();
  check_choice->add_option("--property", o.property);

  auto* check_measure = app.add_subcommand("check-measure", "check measure properties");
  check_measure->add_option("--universe", o.universe_path);
  check_measure->add_option("--measure", o.measure_path)->required();
  check_measure->add_option("--property", o.property);

  auto* check_operator = app.add_subcommand("check-operator", "check operator postulates");
  check_operator->add_option("--operator", o.operator_path);
  check_operator->add_option("--universe", o.universe_path);
  check_operator->add_option("--choice", o.choice_path);
  check_operator->add_option("--postulate", o.postulate);

  auto* check_rules = app.add_subcommand("check-rules", "check connective rules");
  check_rules->add_option("--universe", o.universe_path);
  check_rules->add_option("--choice", o.choice_path)->required();
  check_rules->add_option("--rule", o.rule);
  check_rules->add_option("--samples", o.samples);
  check_rules->add_option("--seed", [&o](const auto& vals) {
    o.seed = std::stoull(vals[0]);
    return true;
  }, "rng seed (required with --samples)");

  auto* check_klm = app.add_subcommand("check-klm", "check preferential-relation axioms");
  check_klm->add_option("--relation", o.relation_path)->required();
  check_klm->add_option("--axiom", o.axiom);

  auto* entail = app.add_subcommand("entail", "entailment query");
  entail->add_option("--universe", o.universe_path);
  entail->add_option("--choice", o.choice_path);
  entail->add_option("--operator", o.operator_path);
  entail->add_option("--premises", o.premises)->required();
  entail->add_option("--query", o.query)->required();

  auto* convert = app.add_subcommand("convert", "convert between choice and measure");
  convert->add_option("--universe", o.universe_path);
  convert->add_option("--choice", o.choice_path);
  convert->add_option("--measure", o.measure_path);
  convert->add_option("--to", o.to)->required();
  convert->add_option("--out", o.out_path);

  auto* represent = app.add_subcommand("represent", "build the theory-universe representation");
  represent->add_option("--operator", o.operator_path)->required();
  represent->add_flag("--exclude-inconsistent", o.exclude_inconsistent);

  auto* search = app.add_subcommand("search", "counterexample search");
  search->add_option("--kind", o.kind)->required();
  search->add_option("--worlds", o.worlds);
  search->add_option("--family", o.family);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : 2;
  }

  try {
    if (check_choice->parsed()) return run_check_choice(o);
    if (check_measure->parsed()) return run_check_measure(o);
    if (check_operator->parsed()) return run_check_operator(o);
    if (check_rules->parsed()) return run_check_rules(o);
    if (check_klm->parsed()) return run_check_klm(o);
    if (entail->parsed()) return run_entail(o);
    if (convert->parsed()) return run_convert(o);
    if (represent->parsed()) return run_represent(o);
    if (search->parsed()) return run_search(o);
  } catch (const nmc::InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const nmc::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const nmc::LanguageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
