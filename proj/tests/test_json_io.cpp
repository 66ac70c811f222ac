#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "nmc/choice.hpp"
#include "nmc/connectives.hpp"
#include "nmc/consequence.hpp"
#include "nmc/json_io.hpp"
#include "nmc/klm.hpp"
#include "nmc/qmeasure.hpp"
#include "nmc/universe.hpp"

using namespace nmc;

namespace {

const std::filesystem::path kTmp = std::filesystem::temp_directory_path();

Json reparse(const Json& j) { return Json::parse(j.dump()); }

}  // namespace

TEST_CASE("universe round trips in both modes") {
  const auto p = Universe::propositional({"p", "q"});
  const auto p2 = universe_from_json(reparse(to_json(*p)));
  CHECK(p2->mode() == Universe::Mode::Propositional);
  CHECK(p2->atoms() == p->atoms());

  const auto a = Universe::abstract({"a", "b"}, {{"w1", {"a"}}, {"w2", {"a", "b"}}});
  const auto a2 = universe_from_json(reparse(to_json(*a)));
  CHECK(a2->world_count() == 2);
  CHECK(a2->world_name(1) == "w2");
  for (std::size_t w = 0; w < 2; ++w)
    for (std::size_t s = 0; s < 2; ++s) CHECK(a2->satisfies(w, s) == a->satisfies(w, s));
}

TEST_CASE("universe parsing reports structural errors") {
  CHECK_THROWS_AS(universe_from_json(Json{{"mode", "modal"}}), InputError);
  CHECK_THROWS_AS(universe_from_json(Json{{"atoms", Json::array({"p"})}}), InputError);
  CHECK_THROWS_AS(universe_from_json(Json{{"mode", "propositional"}, {"atoms", "p"}}),
                  InputError);
  // duplicate atom names are a domain error surfaced as InputError
  CHECK_THROWS_AS(
      universe_from_json(Json{{"mode", "propositional"}, {"atoms", Json::array({"p", "p"})}}),
      InputError);
}

TEST_CASE("a universe field may be a relative file path") {
  const auto dir = kTmp / "nmc_json_test";
  std::filesystem::create_directories(dir);
  save_json(dir / "u.json", to_json(*Universe::propositional({"p"})));

  Json j;
  j["universe"] = "u.json";
  Json table = Json::array();
  table.push_back(Json{{"set", Json::array()}, {"chosen", Json::array()}});
  table.push_back(Json{{"set", Json::array({"p=0"})}, {"chosen", Json::array({"p=0"})}});
  table.push_back(Json{{"set", Json::array({"p=1"})}, {"chosen", Json::array({"p=1"})}});
  table.push_back(
      Json{{"set", Json::array({"p=0", "p=1"})}, {"chosen", Json::array({"p=1"})}});
  j["table"] = std::move(table);

  const auto f = choice_from_json(j, dir);
  CHECK(f.apply(0b11) == 0b10);
  CHECK_THROWS_AS(choice_from_json(Json{{"universe", "missing.json"}, {"table", Json::array()}},
                                   dir),
                  InputError);
}

TEST_CASE("choice functions round trip and reject broken tables") {
  const auto u = Universe::full_abstract(2);
  const auto f = from_order(u, {{0, 1}});
  const auto j = reparse(to_json(f));
  const auto f2 = choice_from_json(j, kTmp);
  CHECK(f2.universe()->world_count() == 2);
  for (WorldSet x = 0; x < 4; ++x) CHECK(f2.apply(x) == f.apply(x));

  Json dup = j;
  dup["table"].push_back(dup["table"][0]);
  CHECK_THROWS_AS(choice_from_json(dup, kTmp), InputError);

  Json missing = j;
  missing["table"].erase(1);
  CHECK_THROWS_AS(choice_from_json(missing, kTmp), InputError);

  Json unknown = j;
  unknown["table"][0]["set"] = Json::array({"w9"});
  CHECK_THROWS_AS(choice_from_json(unknown, kTmp), InputError);

  Json noncontract = j;
  noncontract["table"][1]["chosen"] = Json::array({"w2"});  // row for {w1}
  CHECK_THROWS_AS(choice_from_json(noncontract, kTmp), InputError);
}

TEST_CASE("measures round trip and surface construction errors") {
  const auto u = Universe::full_abstract(2);
  const QualMeasure m(u, {{0b01, 0}, {0b11, 0b10}});
  const auto m2 = measure_from_json(reparse(to_json(m)), kTmp);
  CHECK(m2.pairs() == m.pairs());
  CHECK(m2.greater(0b11, 0b10));
  CHECK_FALSE(m2.greater(0b10, 0b01));

  Json j = to_json(m);
  j["pairs"].push_back(Json{{"greater", Json::array({"w1"})}, {"than", Json::array({"w1"})}});
  CHECK_THROWS_AS(measure_from_json(j, kTmp), InputError);  // irreflexive
  j["pairs"] = "not an array";
  CHECK_THROWS_AS(measure_from_json(j, kTmp), InputError);
}

TEST_CASE("tabulated operators round trip and enforce totality") {
  const auto op = nonmonotone_pair_operator();
  CHECK(tabulated_from_json(reparse(to_json(op))) == op);

  Json j = to_json(op);
  j["table"].erase(2);
  CHECK_THROWS_AS(tabulated_from_json(j), InputError);

  Json j2 = to_json(op);
  j2["table"][1]["C"] = Json::array({"c"});
  CHECK_THROWS_AS(tabulated_from_json(j2), InputError);  // sentence not in language

  Json j3 = to_json(op);
  j3["table"][3]["A"] = j3["table"][0]["A"];
  CHECK_THROWS_AS(tabulated_from_json(j3), InputError);  // duplicate premise set
}

TEST_CASE("preferential relations round trip through formulas") {
  const auto u = Universe::propositional({"b", "f"});
  const auto rel = relation_from_operator(SemanticOperator{from_rank(u, {1, 2, 1, 0})});
  const auto rel2 = relation_from_json(reparse(to_json(rel)), kTmp);
  CHECK(rel2 == rel);

  Json bad;
  bad["universe"] = to_json(*u);
  bad["pairs"] = Json::array({Json{{"lhs", "b &"}, {"rhs", "f"}}});
  CHECK_THROWS_AS(relation_from_json(bad, kTmp), InputError);
  bad["pairs"] = Json::array({Json{{"lhs", "b"}, {"rhs", "x"}}});
  CHECK_THROWS_AS(relation_from_json(bad, kTmp), InputError);  // unknown atom
}

TEST_CASE("verdict serialization carries names and witnesses") {
  const auto u = Universe::full_abstract(2);
  const ChoiceFunction f(u, {0, 0, 0, 0b11});
  const auto good = verdict_to_json(*u, check_choice_property(f, ChoiceProperty::Contraction));
  CHECK(good["property"] == "contraction");
  CHECK(good["holds"] == true);
  CHECK(good["witness"].is_null());

  const auto bad = verdict_to_json(*u, check_choice_property(f, ChoiceProperty::Coherence));
  CHECK(bad["property"] == "coherence");
  CHECK(bad["holds"] == false);
  CHECK(bad["witness"]["sets"] == Json::array({Json::array({"w1"}), Json::array({"w1", "w2"})}));
  CHECK(bad["witness"]["world"] == "w1");

  const auto pv = verdict_to_json(
      check_postulate(nonmonotone_pair_operator(), Postulate::Monotonicity));
  CHECK(pv["property"] == "monotonicity");
  CHECK(pv["witness"]["A"] == Json::array());
  CHECK(pv["witness"]["B"] == Json::array({"b"}));

  const auto up = Universe::propositional({"p"});
  const auto rv = verdict_to_json(
      check_rule(SemanticOperator{identity_choice(up)}, ConnectiveRule::AndBothSides));
  CHECK(rv["property"] == "and_both_sides");
  CHECK(rv["witness"].is_null());

  const auto kv = verdict_to_json(check_klm(
      PreferentialRelation(up, {{up->mod(parse("p")), up->mod(parse("~p"))}}),
      KlmAxiom::Reflexivity));
  CHECK(kv["property"] == "reflexivity");
  CHECK(kv["holds"] == false);
  CHECK(kv["witness"]["formulas"].is_array());
}

TEST_CASE("file loading distinguishes missing and malformed input") {
  CHECK_THROWS_AS(load_json(kTmp / "nmc_does_not_exist.json"), InputError);
  const auto p = kTmp / "nmc_malformed.json";
  std::ofstream(p) << "{ not json";
  CHECK_THROWS_AS(load_json(p), InputError);
}
