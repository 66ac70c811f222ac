#pragma once

// JSON file formats for universes, choice functions, measures, tabulated
// operators and preferential relations, plus verdict serialization.
//
// World sets are arrays of world names: declared names in abstract mode,
// assignment strings like "p=1,q=0" in propositional mode. A "universe"
// field may be an inline object or a string path, resolved relative to the
// referencing file.

#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "nmc/choice.hpp"
#include "nmc/connectives.hpp"
#include "nmc/consequence.hpp"
#include "nmc/klm.hpp"
#include "nmc/qmeasure.hpp"
#include "nmc/universe.hpp"

namespace nmc {

using Json = nlohmann::ordered_json;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline Json load_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open file: " + path.string());
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError("malformed JSON in " + path.string() + ": " + e.what());
  }
}

inline void save_json(const std::filesystem::path& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write file: " + path.string());
  out << j.dump(2) << '\n';
}

namespace detail {

inline std::vector<std::string> string_list(const Json& j, const char* what) {
  if (!j.is_array()) throw InputError(std::string(what) + " must be an array");
  std::vector<std::string> out;
  for (const auto& e : j) {
    if (!e.is_string()) throw InputError(std::string(what) + " entries must be strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

inline const Json& field(const Json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) throw InputError(std::string("missing field '") + key + "'");
  return *it;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Universe

inline UniversePtr universe_from_json(const Json& j) {
  try {
    const std::string mode = detail::field(j, "mode").get<std::string>();
    if (mode == "propositional")
      return Universe::propositional(detail::string_list(detail::field(j, "atoms"), "atoms"));
    if (mode == "abstract") {
      std::vector<Universe::AbstractWorld> worlds;
      for (const auto& w : detail::field(j, "worlds")) {
        worlds.push_back({detail::field(w, "name").get<std::string>(),
                          detail::string_list(detail::field(w, "satisfies"), "satisfies")});
      }
      return Universe::abstract(
          detail::string_list(detail::field(j, "sentences"), "sentences"), worlds);
    }
    throw InputError("unknown universe mode: '" + mode + "'");
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("bad universe JSON: ") + e.what());
  }
}

inline Json to_json(const Universe& u) {
  Json j;
  if (u.mode() == Universe::Mode::Propositional) {
    j["mode"] = "propositional";
    j["atoms"] = u.atoms();
    return j;
  }
  j["mode"] = "abstract";
  j["sentences"] = u.sentences();
  Json worlds = Json::array();
  for (std::size_t w = 0; w < u.world_count(); ++w) {
    Json jw;
    jw["name"] = u.world_name(w);
    Json sat = Json::array();
    for (std::size_t s = 0; s < u.sentences().size(); ++s)
      if (u.satisfies(w, s)) sat.push_back(u.sentences()[s]);
    jw["satisfies"] = std::move(sat);
    worlds.push_back(std::move(jw));
  }
  j["worlds"] = std::move(worlds);
  return j;
}

/// Resolves a "universe" field: inline object or relative path string.
inline UniversePtr universe_ref(const Json& j, const std::filesystem::path& base_dir) {
  if (j.is_string())
    return universe_from_json(load_json(base_dir / j.get<std::string>()));
  return universe_from_json(j);
}

inline WorldSet world_set_from_json(const Universe& u, const Json& j, const char* what) {
  try {
    return u.world_set_from_names(detail::string_list(j, what));
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

inline Json world_set_to_json(const Universe& u, WorldSet x) {
  return Json(u.world_set_names(x));
}

// ---------------------------------------------------------------------------
// Choice functions

inline ChoiceFunction choice_from_json(UniversePtr u, const Json& j) {
  std::vector<WorldSet> table(u->subset_count(), ChoiceFunction::kUndefined);
  std::vector<char> seen(u->subset_count(), 0);
  for (const auto& row : detail::field(j, "table")) {
    const WorldSet x = world_set_from_json(*u, detail::field(row, "set"), "set");
    if (seen[x]) throw InputError("duplicate table entry");
    seen[x] = 1;
    table[x] = world_set_from_json(*u, detail::field(row, "chosen"), "chosen");
  }
  for (WorldSet x = 0; x < table.size(); ++x)
    if (u->is_definable(x) && !seen[x])
      throw InputError("choice table is missing a definable set");
  try {
    return ChoiceFunction(std::move(u), std::move(table));
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

inline ChoiceFunction choice_from_json(const Json& j, const std::filesystem::path& base_dir) {
  return choice_from_json(universe_ref(detail::field(j, "universe"), base_dir), j);
}

inline Json to_json(const ChoiceFunction& f) {
  const auto& u = *f.universe();
  Json j;
  j["universe"] = to_json(u);
  Json table = Json::array();
  for (WorldSet x : f.domain()) {
    Json row;
    row["set"] = world_set_to_json(u, x);
    row["chosen"] = world_set_to_json(u, f.apply(x));
    table.push_back(std::move(row));
  }
  j["table"] = std::move(table);
  return j;
}

// ---------------------------------------------------------------------------
// Measures

inline QualMeasure measure_from_json(UniversePtr u, const Json& j) {
  std::vector<std::pair<WorldSet, WorldSet>> pairs;
  for (const auto& row : detail::field(j, "pairs"))
    pairs.emplace_back(world_set_from_json(*u, detail::field(row, "greater"), "greater"),
                       world_set_from_json(*u, detail::field(row, "than"), "than"));
  try {
    return QualMeasure(std::move(u), pairs);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

inline QualMeasure measure_from_json(const Json& j, const std::filesystem::path& base_dir) {
  return measure_from_json(universe_ref(detail::field(j, "universe"), base_dir), j);
}

inline Json to_json(const QualMeasure& m) {
  const auto& u = *m.universe();
  Json j;
  j["universe"] = to_json(u);
  Json pairs = Json::array();
  for (auto [x, y] : m.pairs()) {
    Json row;
    row["greater"] = world_set_to_json(u, x);
    row["than"] = world_set_to_json(u, y);
    pairs.push_back(std::move(row));
  }
  j["pairs"] = std::move(pairs);
  return j;
}

// ---------------------------------------------------------------------------
// Tabulated operators

inline TabulatedOperator tabulated_from_json(const Json& j) {
  const auto language = detail::string_list(detail::field(j, "language"), "language");
  if (language.size() > 5) throw InputError("language too large");
  std::vector<SentenceSet> table(std::size_t{1} << language.size(), 0);
  std::vector<char> seen(table.size(), 0);
  auto set_of = [&](const Json& names, const char* what) {
    SentenceSet out = 0;
    for (const auto& n : detail::string_list(names, what)) {
      std::size_t i = 0;
      while (i < language.size() && language[i] != n) ++i;
      if (i == language.size()) throw InputError("sentence not in language: '" + n + "'");
      out |= SentenceSet{1} << i;
    }
    return out;
  };
  for (const auto& row : detail::field(j, "table")) {
    const SentenceSet a = set_of(detail::field(row, "A"), "A");
    if (seen[a]) throw InputError("duplicate table entry");
    seen[a] = 1;
    table[a] = set_of(detail::field(row, "C"), "C");
  }
  for (std::size_t a = 0; a < seen.size(); ++a)
    if (!seen[a]) throw InputError("operator table is not total");
  return TabulatedOperator(language, std::move(table));
}

inline Json to_json(const TabulatedOperator& op) {
  Json j;
  j["language"] = op.language();
  Json table = Json::array();
  for (SentenceSet a = 0; a < op.subset_count(); ++a) {
    Json row;
    row["A"] = op.names_of(a);
    row["C"] = op.names_of(op.close(a));
    table.push_back(std::move(row));
  }
  j["table"] = std::move(table);
  return j;
}

// ---------------------------------------------------------------------------
// Preferential relations

inline PreferentialRelation relation_from_json(const Json& j,
                                               const std::filesystem::path& base_dir) {
  auto u = universe_ref(detail::field(j, "universe"), base_dir);
  std::vector<std::pair<WorldSet, WorldSet>> pairs;
  try {
    for (const auto& row : detail::field(j, "pairs"))
      pairs.emplace_back(u->mod(parse(detail::field(row, "lhs").get<std::string>())),
                         u->mod(parse(detail::field(row, "rhs").get<std::string>())));
    return PreferentialRelation(std::move(u), std::move(pairs));
  } catch (const ParseError& e) {
    throw InputError(std::string("bad formula: ") + e.what());
  } catch (const EvalError& e) {
    throw InputError(e.what());
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

inline Json to_json(const PreferentialRelation& rel) {
  const auto& u = *rel.universe();
  Json j;
  j["universe"] = to_json(u);
  Json pairs = Json::array();
  for (auto [a, b] : rel.pairs()) {
    Json row;
    row["lhs"] = render(u.characteristic_formula(a));
    row["rhs"] = render(u.characteristic_formula(b));
    pairs.push_back(std::move(row));
  }
  j["pairs"] = std::move(pairs);
  return j;
}

// ---------------------------------------------------------------------------
// Verdicts

inline Json verdict_to_json(const Universe& u, const PropertyVerdict& v) {
  Json j;
  j["property"] = v.property;
  j["holds"] = v.holds;
  if (v.holds) {
    j["witness"] = nullptr;
  } else {
    Json w;
    Json sets = Json::array();
    for (WorldSet s : v.witness_sets) sets.push_back(world_set_to_json(u, s));
    w["sets"] = std::move(sets);
    if (v.witness_world) w["world"] = u.world_name(*v.witness_world);
    j["witness"] = std::move(w);
  }
  return j;
}

inline Json verdict_to_json(const PostulateVerdict& v) {
  Json j;
  j["property"] = v.postulate;
  j["holds"] = v.holds;
  if (v.holds) {
    j["witness"] = nullptr;
  } else {
    Json w;
    const char* keys[] = {"A", "B", "C"};
    for (std::size_t i = 0; i < v.witness.size() && i < 3; ++i) w[keys[i]] = v.witness[i];
    j["witness"] = std::move(w);
  }
  return j;
}

inline Json verdict_to_json(const RuleVerdict& v) {
  Json j;
  j["property"] = v.rule;
  j["holds"] = v.holds;
  if (v.holds) {
    j["witness"] = nullptr;
  } else {
    Json w;
    w["premises"] = v.premises;
    w["a"] = v.a;
    w["b"] = v.b;
    j["witness"] = std::move(w);
  }
  return j;
}

inline Json verdict_to_json(const KlmVerdict& v) {
  Json j;
  j["property"] = v.axiom;
  j["holds"] = v.holds;
  if (v.holds)
    j["witness"] = nullptr;
  else
    j["witness"] = Json{{"formulas", v.witness}};
  return j;
}

}  // namespace nmc
