#pragma once

// Finite model universes, the satisfaction relation, the Mod/Th Galois
// connection and definability.
//
// A propositional universe over n atoms has exactly one world per valuation
// (2^n worlds, valuation order), so every set of worlds is definable.
// An abstract universe lists its worlds and a satisfaction table explicitly
// and may contain indistinguishable worlds, i.e. non-definable sets.

#include <cstdint>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "nmc/formula.hpp"

namespace nmc {

/// Subset of a universe's worlds, as a bit mask (bit i = world i).
using WorldSet = std::uint32_t;

/// Subset of an abstract universe's sentence list, as a bit mask.
using SentenceSet = std::uint32_t;

constexpr std::size_t kMaxWorlds = 16;

struct LanguageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {
inline void require_distinct(const std::vector<std::string>& names, const char* what) {
  for (std::size_t i = 0; i < names.size(); ++i)
    for (std::size_t j = i + 1; j < names.size(); ++j)
      if (names[i] == names[j])
        throw std::invalid_argument(std::string("duplicate ") + what + ": '" + names[i] + "'");
}
}  // namespace detail

class Universe {
 public:
  enum class Mode { Propositional, Abstract };

  struct AbstractWorld {
    std::string name;
    std::vector<std::string> satisfies;
  };

  static std::shared_ptr<const Universe> propositional(std::vector<std::string> atoms) {
    Universe u;
    u.mode_ = Mode::Propositional;
    for (const auto& a : atoms)
      if (!Formula::valid_atom_name(a))
        throw std::invalid_argument("invalid atom name: '" + a + "'");
    detail::require_distinct(atoms, "atom");
    u.atoms_ = std::move(atoms);
    if ((std::size_t{1} << u.atoms_.size()) > kMaxWorlds)
      throw std::invalid_argument("too many atoms");
    u.world_count_ = std::size_t{1} << u.atoms_.size();
    return std::make_shared<Universe>(std::move(u));
  }

  static std::shared_ptr<const Universe> abstract(std::vector<std::string> sentences,
                                                  const std::vector<AbstractWorld>& worlds) {
    Universe u;
    u.mode_ = Mode::Abstract;
    detail::require_distinct(sentences, "sentence");
    u.sentences_ = std::move(sentences);
    if (worlds.size() > kMaxWorlds) throw std::invalid_argument("too many worlds");
    u.world_count_ = worlds.size();
    for (const auto& w : worlds) {
      SentenceSet sat = 0;
      for (const auto& s : w.satisfies) sat |= SentenceSet{1} << u.sentence_index(s);
      u.world_names_.push_back(w.name);
      u.world_sat_.push_back(sat);
    }
    detail::require_distinct(u.world_names_, "world name");
    return std::make_shared<Universe>(std::move(u));
  }

  /// Fully definable abstract universe with n worlds: sentence s_i is
  /// satisfied exactly by the worlds other than w_i, so the definable sets
  /// (complements of unions of singletons) are all 2^n subsets.
  static std::shared_ptr<const Universe> full_abstract(std::size_t n) {
    std::vector<std::string> sentences;
    std::vector<AbstractWorld> worlds;
    for (std::size_t i = 0; i < n; ++i) sentences.push_back("s" + std::to_string(i + 1));
    for (std::size_t i = 0; i < n; ++i) {
      AbstractWorld w;
      w.name = "w" + std::to_string(i + 1);
      for (std::size_t j = 0; j < n; ++j)
        if (j != i) w.satisfies.push_back(sentences[j]);
      worlds.push_back(std::move(w));
    }
    return abstract(std::move(sentences), worlds);
  }

  Mode mode() const { return mode_; }
  std::size_t world_count() const { return world_count_; }
  WorldSet all_worlds() const { return subset_count() - 1; }
  std::size_t subset_count() const { return std::size_t{1} << world_count_; }
  const std::vector<std::string>& atoms() const { return atoms_; }
  const std::vector<std::string>& sentences() const { return sentences_; }

  std::size_t sentence_index(const std::string& s) const {
    for (std::size_t i = 0; i < sentences_.size(); ++i)
      if (sentences_[i] == s) return i;
    throw LanguageError("sentence not in language: '" + s + "'");
  }

  std::string world_name(std::size_t w) const {
    if (mode_ == Mode::Abstract) return world_names_[w];
    std::string out;
    for (std::size_t j = 0; j < atoms_.size(); ++j) {
      if (j) out += ',';
      out += atoms_[j];
      out += (w >> j) & 1 ? "=1" : "=0";
    }
    return out;
  }

  std::size_t world_by_name(const std::string& name) const {
    for (std::size_t w = 0; w < world_count_; ++w)
      if (world_name(w) == name) return w;
    throw std::invalid_argument("unknown world: '" + name + "'");
  }

  Valuation valuation(std::size_t w) const {
    require(Mode::Propositional);
    Valuation v;
    for (std::size_t j = 0; j < atoms_.size(); ++j) v[atoms_[j]] = (w >> j) & 1;
    return v;
  }

  bool satisfies(std::size_t w, const Formula& f) const {
    require(Mode::Propositional);
    return eval(f, valuation(w));
  }
  bool satisfies(std::size_t w, std::size_t sentence) const {
    require(Mode::Abstract);
    return (world_sat_[w] >> sentence) & 1;
  }

  WorldSet mod(const Formula& f) const {
    require(Mode::Propositional);
    WorldSet out = 0;
    for (std::size_t w = 0; w < world_count_; ++w)
      if (satisfies(w, f)) out |= WorldSet{1} << w;
    return out;
  }
  WorldSet mod(std::size_t sentence) const {
    require(Mode::Abstract);
    WorldSet out = 0;
    for (std::size_t w = 0; w < world_count_; ++w)
      if (satisfies(w, sentence)) out |= WorldSet{1} << w;
    return out;
  }

  WorldSet mod_set(std::span<const Formula> a) const {
    WorldSet out = all_worlds();
    for (const auto& f : a) out &= mod(f);
    return out;
  }
  WorldSet mod_set(SentenceSet a) const {
    require(Mode::Abstract);
    WorldSet out = all_worlds();
    for (std::size_t s = 0; s < sentences_.size(); ++s)
      if ((a >> s) & 1) out &= mod(s);
    return out;
  }

  /// Mod(L): worlds satisfying every sentence of the language. Empty in
  /// propositional mode ("false" is in the language).
  WorldSet mod_of_language() const {
    if (mode_ == Mode::Propositional) return 0;
    WorldSet out = 0;
    const SentenceSet full = (SentenceSet{1} << sentences_.size()) - 1;
    for (std::size_t w = 0; w < world_count_; ++w)
      if (world_sat_[w] == full) out |= WorldSet{1} << w;
    return out;
  }

  /// Th(X) of an abstract universe, as an explicit sentence set.
  SentenceSet theory_sentences(WorldSet x) const {
    require(Mode::Abstract);
    SentenceSet t = (SentenceSet{1} << sentences_.size()) - 1;
    for (std::size_t w = 0; w < world_count_; ++w)
      if ((x >> w) & 1) t &= world_sat_[w];
    return t;
  }

  /// Canonical defining formula of a world set: disjunction of the
  /// characteristic conjunctions of its members ("false" for the empty set).
  Formula characteristic_formula(WorldSet x) const {
    require(Mode::Propositional);
    bool first = true;
    Formula out = Formula::falsity();
    for (std::size_t w = 0; w < world_count_; ++w) {
      if (!((x >> w) & 1)) continue;
      Formula term = Formula::truth();
      bool term_first = true;
      for (std::size_t j = 0; j < atoms_.size(); ++j) {
        Formula lit = (w >> j) & 1 ? Formula::atom(atoms_[j])
                                   : Formula::negate(Formula::atom(atoms_[j]));
        term = term_first ? lit : Formula::conj(std::move(term), std::move(lit));
        term_first = false;
      }
      if (term_first) term = Formula::truth();  // no atoms: single world
      out = first ? term : Formula::disj(std::move(out), std::move(term));
      first = false;
    }
    return out;
  }

  /// Mod(Th(X)): the least definable superset of X.
  WorldSet closure(WorldSet x) const {
    if (mode_ == Mode::Propositional) return mod(characteristic_formula(x));
    return mod_set(theory_sentences(x));
  }

  bool is_definable(WorldSet x) const { return closure(x) == x; }

  bool fully_definable() const {
    for (WorldSet x = 0; x < subset_count(); ++x)
      if (!is_definable(x)) return false;
    return true;
  }

  /// All definable subsets, in increasing mask order.
  std::vector<WorldSet> definable_sets() const {
    std::vector<WorldSet> out;
    for (WorldSet x = 0; x < subset_count(); ++x)
      if (is_definable(x)) out.push_back(x);
    return out;
  }

  std::vector<std::string> world_set_names(WorldSet x) const {
    std::vector<std::string> out;
    for (std::size_t w = 0; w < world_count_; ++w)
      if ((x >> w) & 1) out.push_back(world_name(w));
    return out;
  }
  WorldSet world_set_from_names(const std::vector<std::string>& names) const {
    WorldSet x = 0;
    for (const auto& n : names) x |= WorldSet{1} << world_by_name(n);
    return x;
  }

 private:
  void require(Mode m) const {
    if (mode_ != m)
      throw std::logic_error("operation not available in this universe mode");
  }

  Mode mode_ = Mode::Propositional;
  std::vector<std::string> atoms_;
  std::vector<std::string> sentences_;
  std::vector<std::string> world_names_;
  std::vector<SentenceSet> world_sat_;
  std::size_t world_count_ = 0;
};

using UniversePtr = std::shared_ptr<const Universe>;

/// A theory, represented by its set of models.
struct Theory {
  UniversePtr universe;
  WorldSet worlds = 0;

  bool contains(const Formula& f) const {
    return (worlds & ~universe->mod(f)) == 0;
  }
  bool contains(std::size_t sentence) const {
    return (worlds & ~universe->mod(sentence)) == 0;
  }
  /// Explicit sentence set, abstract mode only.
  SentenceSet sentences() const { return universe->theory_sentences(worlds); }

  /// True iff the theory is the whole language.
  bool is_full_language() const {
    return (worlds & ~universe->mod_of_language()) == 0;
  }
};

inline WorldSet mod_set(const Universe& u, std::span<const Formula> a) { return u.mod_set(a); }

inline Theory theory_of(UniversePtr u, WorldSet x) { return Theory{std::move(u), x}; }

}  // namespace nmc
