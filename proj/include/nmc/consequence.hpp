#pragma once

// Consequence operators C and their postulates:
//
//   Inclusion                  A ⊆ C(A)
//   Idempotence                C(C(A)) = C(A)
//   Cautious Monotonicity      A ⊆ B ⊆ C(A) ⇒ C(A) ⊆ C(B)
//   Conditional Monotonicity   C(A ∪ B) ⊆ C(C(A) ∪ B)
//   Threshold Monotonicity     C(A) ⊆ B ⊆ C ⇒ C(B) ⊆ C(C)
//   Cumulativity               A ⊆ B ⊆ C(A) ⇒ C(B) = C(A)
//   Monotonicity               A ⊆ B ⇒ C(A) ⊆ C(B)
//   Rational Monotonicity      C(C(A) ∪ B) ≠ L ⇒ C(A) ⊆ C(A ∪ B)
//   Weak Compactness           C(A) = L ⇒ C(B) = L for some finite B ⊆ A
//
// Two operator variants. A TabulatedOperator is an explicit table over the
// subsets of a finite abstract language; its checkers quantify over raw
// subsets and are exact. A SemanticOperator is C(A) = Th(f(Mod(A))) for a
// choice function f; its output depends on A only through Mod(A) and equals
// its own closure, so postulate violations on arbitrary premise sets
// reflect into violations on closed sets Th(S), and the checkers quantify
// over those (via formula classes in propositional mode, via the sentence
// tabulation in abstract mode).
//
// Also here: the monotone core Cn, the representation of a tabulated
// operator over its theories (worlds are the sets T = C(T), T ⊨ a iff
// a ∈ T, f(Mod(A)) = Mod(C(A))), intersection via disjoint union of
// representing universes, and background-assumption shifts.

#include <algorithm>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "nmc/choice.hpp"
#include "nmc/universe.hpp"

namespace nmc {

enum class Postulate {
  Inclusion,
  Idempotence,
  CautiousMonotonicity,
  ConditionalMonotonicity,
  ThresholdMonotonicity,
  Cumulativity,
  Monotonicity,
  RationalMonotonicity,
  WeakCompactness,
};

inline const char* name(Postulate p) {
  switch (p) {
    case Postulate::Inclusion: return "inclusion";
    case Postulate::Idempotence: return "idempotence";
    case Postulate::CautiousMonotonicity: return "cautious_monotonicity";
    case Postulate::ConditionalMonotonicity: return "conditional_monotonicity";
    case Postulate::ThresholdMonotonicity: return "threshold_monotonicity";
    case Postulate::Cumulativity: return "cumulativity";
    case Postulate::Monotonicity: return "monotonicity";
    case Postulate::RationalMonotonicity: return "rational_monotonicity";
    case Postulate::WeakCompactness: return "weak_compactness";
  }
  return "?";
}

inline Postulate postulate_by_name(const std::string& s) {
  for (auto p : {Postulate::Inclusion, Postulate::Idempotence, Postulate::CautiousMonotonicity,
                 Postulate::ConditionalMonotonicity, Postulate::ThresholdMonotonicity,
                 Postulate::Cumulativity, Postulate::Monotonicity,
                 Postulate::RationalMonotonicity, Postulate::WeakCompactness})
    if (s == name(p)) return p;
  throw std::invalid_argument("unknown postulate: '" + s + "'");
}

struct PostulateVerdict {
  std::string postulate;
  bool holds = true;
  /// Premise sets of the violated instance (A, then B, then C where the
  /// postulate mentions them), each as a list of sentences/formulas.
  std::vector<std::vector<std::string>> witness;
};

// ---------------------------------------------------------------------------
// Tabulated operators

class TabulatedOperator {
 public:
  TabulatedOperator(std::vector<std::string> language, std::vector<SentenceSet> table)
      : language_(std::move(language)), table_(std::move(table)) {
    if (language_.size() > 5) throw std::invalid_argument("language too large to tabulate");
    if (table_.size() != subset_count())
      throw std::invalid_argument("operator table has wrong size");
    for (SentenceSet c : table_)
      if (c >= subset_count()) throw std::invalid_argument("operator table value out of range");
  }

  const std::vector<std::string>& language() const { return language_; }
  std::size_t subset_count() const { return std::size_t{1} << language_.size(); }
  SentenceSet full_language() const { return static_cast<SentenceSet>(subset_count() - 1); }

  SentenceSet close(SentenceSet a) const { return table_[a]; }

  /// Cn(A) = ⋂ over all B of C(A ∪ B), the largest monotonic core.
  SentenceSet cn(SentenceSet a) const {
    SentenceSet out = full_language();
    for (SentenceSet b = 0; b < subset_count(); ++b) out &= table_[a | b];
    return out;
  }

  bool entails(SentenceSet a, std::size_t sentence) const {
    return (table_[a] >> sentence) & 1;
  }

  std::size_t sentence_index(const std::string& s) const {
    for (std::size_t i = 0; i < language_.size(); ++i)
      if (language_[i] == s) return i;
    throw LanguageError("sentence not in language: '" + s + "'");
  }

  SentenceSet set_of(const std::vector<std::string>& names) const {
    SentenceSet out = 0;
    for (const auto& n : names) out |= SentenceSet{1} << sentence_index(n);
    return out;
  }
  std::vector<std::string> names_of(SentenceSet a) const {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < language_.size(); ++i)
      if ((a >> i) & 1) out.push_back(language_[i]);
    return out;
  }

  /// The fixed points T = C(T), in increasing mask order.
  std::vector<SentenceSet> theories() const {
    std::vector<SentenceSet> out;
    for (SentenceSet t = 0; t < subset_count(); ++t)
      if (table_[t] == t) out.push_back(t);
    return out;
  }

  const std::vector<SentenceSet>& table() const { return table_; }

  /// Extensional equality over every premise set.
  bool operator==(const TabulatedOperator& o) const {
    return language_ == o.language_ && table_ == o.table_;
  }

 private:
  std::vector<std::string> language_;
  std::vector<SentenceSet> table_;
};

inline PostulateVerdict check_postulate(const TabulatedOperator& op, Postulate p) {
  PostulateVerdict v{name(p), true, {}};
  const SentenceSet n = static_cast<SentenceSet>(op.subset_count());
  const SentenceSet full = op.full_language();
  auto fail1 = [&](SentenceSet a) {
    return PostulateVerdict{v.postulate, false, {op.names_of(a)}};
  };
  auto fail2 = [&](SentenceSet a, SentenceSet b) {
    return PostulateVerdict{v.postulate, false, {op.names_of(a), op.names_of(b)}};
  };
  auto fail3 = [&](SentenceSet a, SentenceSet b, SentenceSet c) {
    return PostulateVerdict{v.postulate, false, {op.names_of(a), op.names_of(b), op.names_of(c)}};
  };

  switch (p) {
    case Postulate::Inclusion:
      for (SentenceSet a = 0; a < n; ++a)
        if ((a & ~op.close(a)) != 0) return fail1(a);
      break;
    case Postulate::Idempotence:
      for (SentenceSet a = 0; a < n; ++a)
        if (op.close(op.close(a)) != op.close(a)) return fail1(a);
      break;
    case Postulate::CautiousMonotonicity:
      for (SentenceSet a = 0; a < n; ++a)
        for (SentenceSet b = 0; b < n; ++b) {
          if ((a & ~b) != 0 || (b & ~op.close(a)) != 0) continue;  // A ⊆ B ⊆ C(A)
          if ((op.close(a) & ~op.close(b)) != 0) return fail2(a, b);
        }
      break;
    case Postulate::ConditionalMonotonicity:
      for (SentenceSet a = 0; a < n; ++a)
        for (SentenceSet b = 0; b < n; ++b)
          if ((op.close(a | b) & ~op.close(op.close(a) | b)) != 0) return fail2(a, b);
      break;
    case Postulate::ThresholdMonotonicity:
      for (SentenceSet a = 0; a < n; ++a)
        for (SentenceSet b = 0; b < n; ++b) {
          if ((op.close(a) & ~b) != 0) continue;  // C(A) ⊆ B
          for (SentenceSet c = 0; c < n; ++c) {
            if ((b & ~c) != 0) continue;  // B ⊆ C
            if ((op.close(b) & ~op.close(c)) != 0) return fail3(a, b, c);
          }
        }
      break;
    case Postulate::Cumulativity:
      for (SentenceSet a = 0; a < n; ++a)
        for (SentenceSet b = 0; b < n; ++b) {
          if ((a & ~b) != 0 || (b & ~op.close(a)) != 0) continue;
          if (op.close(b) != op.close(a)) return fail2(a, b);
        }
      break;
    case Postulate::Monotonicity:
      for (SentenceSet a = 0; a < n; ++a)
        for (SentenceSet b = 0; b < n; ++b) {
          if ((a & ~b) != 0) continue;
          if ((op.close(a) & ~op.close(b)) != 0) return fail2(a, b);
        }
      break;
    case Postulate::RationalMonotonicity:
      for (SentenceSet a = 0; a < n; ++a)
        for (SentenceSet b = 0; b < n; ++b) {
          if (op.close(op.close(a) | b) == full) continue;
          if ((op.close(a) & ~op.close(a | b)) != 0) return fail2(a, b);
        }
      break;
    case Postulate::WeakCompactness:
      // Vacuous over a finite language (B = A always works); run the
      // literal search anyway.
      for (SentenceSet a = 0; a < n; ++a) {
        if (op.close(a) != full) continue;
        bool found = false;
        for (SentenceSet b = a;; b = (b - 1) & a) {
          if (op.close(b) == full) { found = true; break; }
          if (b == 0) break;
        }
        if (!found) return fail1(a);
      }
      break;
  }
  return v;
}

inline bool passes_five_postulates(const TabulatedOperator& op) {
  for (auto p : {Postulate::Inclusion, Postulate::Idempotence, Postulate::CautiousMonotonicity,
                 Postulate::ConditionalMonotonicity, Postulate::ThresholdMonotonicity})
    if (!check_postulate(op, p).holds) return false;
  return true;
}

/// C'(A) = C(A ∪ B), the operator shifted by background assumptions.
inline TabulatedOperator with_background(const TabulatedOperator& op, SentenceSet b) {
  std::vector<SentenceSet> t(op.subset_count());
  for (SentenceSet a = 0; a < t.size(); ++a) t[a] = op.close(a | b);
  return TabulatedOperator(op.language(), std::move(t));
}

/// Pointwise intersection of the tables (same language required).
inline TabulatedOperator intersect_tables(const std::vector<TabulatedOperator>& ops) {
  if (ops.empty()) throw std::invalid_argument("empty operator list");
  std::vector<SentenceSet> t = ops.front().table();
  for (std::size_t i = 1; i < ops.size(); ++i) {
    if (ops[i].language() != ops.front().language())
      throw std::invalid_argument("mismatched languages");
    for (SentenceSet a = 0; a < t.size(); ++a) t[a] &= ops[i].close(a);
  }
  return TabulatedOperator(ops.front().language(), std::move(t));
}

/// The two-sentence operator with C(A) = A except C(∅) = {a}: satisfies the
/// five postulates, breaches Monotonicity only at (∅, B).
inline TabulatedOperator nonmonotone_pair_operator() {
  return TabulatedOperator({"a", "b"}, {0b01, 0b01, 0b10, 0b11});
}

/// Its twin with C(∅) = {b}: same theory set, different operator.
inline TabulatedOperator nonmonotone_pair_twin() {
  return TabulatedOperator({"a", "b"}, {0b10, 0b01, 0b10, 0b11});
}

// ---------------------------------------------------------------------------
// Semantic operators

struct SemanticOperator {
  ChoiceFunction f;

  const UniversePtr& universe() const { return f.universe(); }

  /// Models of C(A), for A given by its (definable) model set.
  WorldSet close_models(WorldSet mod_a) const { return f.apply(mod_a); }

  Theory close(std::span<const Formula> premises) const {
    return Theory{universe(), f.apply(universe()->mod_set(premises))};
  }
  Theory close(SentenceSet premises) const {
    return Theory{universe(), f.apply(universe()->mod_set(premises))};
  }

  bool entails(std::span<const Formula> premises, const Formula& query) const {
    return close(premises).contains(query);
  }
  bool entails(SentenceSet premises, std::size_t sentence) const {
    return close(premises).contains(sentence);
  }

  /// Models of Cn(A) = Th(Mod(A)).
  WorldSet cn_models(WorldSet mod_a) const { return universe()->closure(mod_a); }
};

inline SemanticOperator operator_from_choice(ChoiceFunction f) {
  return SemanticOperator{std::move(f)};
}

/// C'(A) = C(A ∪ B): choose from Mod(A) ∩ Mod(B).
inline SemanticOperator with_background(const SemanticOperator& op, WorldSet mod_b) {
  const auto& u = op.universe();
  std::vector<WorldSet> t(u->subset_count(), ChoiceFunction::kUndefined);
  for (WorldSet x = 0; x < t.size(); ++x)
    if (u->is_definable(x)) t[x] = op.f.apply(u->closure(x & mod_b));
  return SemanticOperator{ChoiceFunction(u, std::move(t))};
}

/// Exact tabulation of a semantic operator over an abstract language.
inline TabulatedOperator tabulate(const SemanticOperator& op) {
  const auto& u = op.universe();
  if (u->mode() != Universe::Mode::Abstract)
    throw std::invalid_argument("only abstract-universe operators tabulate exactly");
  const std::size_t n = std::size_t{1} << u->sentences().size();
  std::vector<SentenceSet> t(n);
  for (SentenceSet a = 0; a < n; ++a)
    t[a] = u->theory_sentences(op.f.apply(u->mod_set(a)));
  return TabulatedOperator(u->sentences(), std::move(t));
}

// ---------------------------------------------------------------------------
// Class operators: consequence over formula classes of a propositional
// universe. entail_[X] has bit c set iff the formulas of class c (model set
// c) belong to C of any premise set with model set X. Exact for operators
// that depend on premises only through their models and produce closed
// outputs; this covers semantic operators and the preferential lift.

class ClassOperator {
 public:
  ClassOperator(UniversePtr u, std::vector<std::uint32_t> entail)
      : u_(std::move(u)), entail_(std::move(entail)) {
    if (u_->subset_count() > 32)
      throw std::invalid_argument("universe too large for class tabulation");
    if (entail_.size() != u_->subset_count())
      throw std::invalid_argument("class table has wrong size");
  }

  const UniversePtr& universe() const { return u_; }

  /// Does C(A) contain the formulas of class c, for Mod(A) = x?
  bool entails_class(WorldSet x, WorldSet c) const { return (entail_[x] >> c) & 1; }

  std::uint32_t classes_of(WorldSet x) const { return entail_[x]; }

  bool entails(std::span<const Formula> premises, const Formula& query) const {
    return entails_class(u_->mod_set(premises), u_->mod(query));
  }

  /// Mod(C(A)): intersection of the entailed classes.
  WorldSet models_of_close(WorldSet x) const {
    WorldSet out = u_->all_worlds();
    for (WorldSet c = 0; c < u_->subset_count(); ++c)
      if (entails_class(x, c)) out &= c;
    return out;
  }

  bool close_is_full_language(WorldSet x) const {
    return entail_[x] == full_classes();
  }

  std::uint32_t full_classes() const {
    return static_cast<std::uint32_t>((std::uint64_t{1} << u_->subset_count()) - 1);
  }

  bool operator==(const ClassOperator& o) const { return entail_ == o.entail_; }

 private:
  UniversePtr u_;
  std::vector<std::uint32_t> entail_;
};

inline ClassOperator class_operator(const SemanticOperator& op) {
  const auto& u = op.universe();
  if (u->subset_count() > 32)
    throw std::invalid_argument("universe too large for class tabulation");
  std::vector<std::uint32_t> e(u->subset_count(), 0);
  for (WorldSet x = 0; x < e.size(); ++x) {
    const WorldSet chosen = op.f.apply(x);
    for (WorldSet c = 0; c < u->subset_count(); ++c)
      if ((chosen & ~c) == 0) e[x] |= std::uint32_t{1} << c;
  }
  return ClassOperator(u, std::move(e));
}

namespace detail {

/// One-formula premise set with model set x, for witnesses.
inline std::vector<std::string> class_premises(const Universe& u, WorldSet x) {
  if (u.mode() == Universe::Mode::Propositional)
    return {render(u.characteristic_formula(x))};
  std::vector<std::string> out;
  const SentenceSet t = u.theory_sentences(x);
  for (std::size_t s = 0; s < u.sentences().size(); ++s)
    if ((t >> s) & 1) out.push_back(u.sentences()[s]);
  return out;
}

}  // namespace detail

/// Postulate check over closed premise sets Th(S). The reductions: a
/// premise set enters only through its model set X and through which
/// classes it contains, and the hardest instance of every ⊆-premise is the
/// full closed set Th(S), so the class-level forms below are exact.
inline PostulateVerdict check_postulate(const ClassOperator& op, Postulate p) {
  PostulateVerdict v{name(p), true, {}};
  const auto& u = *op.universe();
  const WorldSet n = static_cast<WorldSet>(u.subset_count());
  const std::uint32_t full = op.full_classes();

  auto up = [&](WorldSet y) {  // classes containing y: the classes of Th(Y)
    std::uint32_t out = 0;
    for (WorldSet c = 0; c < n; ++c)
      if ((y & ~c) == 0) out |= std::uint32_t{1} << c;
    return out;
  };
  auto inter = [&](std::uint32_t classes) {  // Mod of a set with those classes
    WorldSet out = u.all_worlds();
    for (WorldSet c = 0; c < n; ++c)
      if ((classes >> c) & 1) out &= c;
    return out;
  };
  auto fail = [&](std::initializer_list<WorldSet> sets) {
    PostulateVerdict bad{v.postulate, false, {}};
    for (WorldSet s : sets) bad.witness.push_back(detail::class_premises(u, s));
    return bad;
  };

  switch (p) {
    case Postulate::Inclusion:
      for (WorldSet x = 0; x < n; ++x)
        if ((up(x) & ~op.classes_of(x)) != 0) return fail({x});
      break;
    case Postulate::Idempotence:
      for (WorldSet x = 0; x < n; ++x)
        if (op.classes_of(inter(op.classes_of(x))) != op.classes_of(x)) return fail({x});
      break;
    case Postulate::CautiousMonotonicity:
      for (WorldSet x = 0; x < n; ++x)
        for (WorldSet y = 0; y < n; ++y) {
          if ((y & ~x) != 0) continue;                       // A ⊆ B, i.e. Y ⊆ X
          if ((up(y) & ~op.classes_of(x)) != 0) continue;    // B ⊆ C(A)
          if ((op.classes_of(x) & ~op.classes_of(y)) != 0) return fail({x, y});
        }
      break;
    case Postulate::ConditionalMonotonicity:
      for (WorldSet x = 0; x < n; ++x)
        for (WorldSet y = 0; y < n; ++y)
          if ((op.classes_of(x & y) &
               ~op.classes_of(inter(op.classes_of(x)) & y)) != 0)
            return fail({x, y});
      break;
    case Postulate::ThresholdMonotonicity:
      for (WorldSet x = 0; x < n; ++x)
        for (WorldSet y = 0; y < n; ++y) {
          if ((op.classes_of(x) & ~up(y)) != 0) continue;    // C(A) ⊆ B
          for (WorldSet z = 0; z < n; ++z) {
            if ((z & ~y) != 0) continue;                     // B ⊆ C, i.e. Z ⊆ Y
            if ((op.classes_of(y) & ~op.classes_of(z)) != 0) return fail({x, y, z});
          }
        }
      break;
    case Postulate::Cumulativity:
      for (WorldSet x = 0; x < n; ++x)
        for (WorldSet y = 0; y < n; ++y) {
          if ((y & ~x) != 0) continue;
          if ((up(y) & ~op.classes_of(x)) != 0) continue;
          if (op.classes_of(x) != op.classes_of(y)) return fail({x, y});
        }
      break;
    case Postulate::Monotonicity:
      for (WorldSet x = 0; x < n; ++x)
        for (WorldSet y = 0; y < n; ++y) {
          if ((y & ~x) != 0) continue;                       // A ⊆ B
          if ((op.classes_of(x) & ~op.classes_of(y)) != 0) return fail({x, y});
        }
      break;
    case Postulate::RationalMonotonicity:
      for (WorldSet x = 0; x < n; ++x)
        for (WorldSet y = 0; y < n; ++y) {
          if (op.classes_of(inter(op.classes_of(x)) & y) == full) continue;
          if ((op.classes_of(x) & ~op.classes_of(x & y)) != 0) return fail({x, y});
        }
      break;
    case Postulate::WeakCompactness:
      // The one-formula subset {characteristic(X)} has the same models as
      // Th(X), so a finite inconsistent subset always exists.
      for (WorldSet x = 0; x < n; ++x)
        if (op.classes_of(x) == full && op.classes_of(u.closure(x)) != full)
          return fail({x});
      break;
  }
  return v;
}

inline PostulateVerdict check_postulate(const SemanticOperator& op, Postulate p) {
  if (op.universe()->mode() == Universe::Mode::Propositional)
    return check_postulate(class_operator(op), p);
  return check_postulate(tabulate(op), p);
}

inline bool passes_five_postulates(const SemanticOperator& op) {
  for (auto p : {Postulate::Inclusion, Postulate::Idempotence, Postulate::CautiousMonotonicity,
                 Postulate::ConditionalMonotonicity, Postulate::ThresholdMonotonicity})
    if (!check_postulate(op, p).holds) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Representation: an abstract universe whose worlds are the theories of the
// operator, with T ⊨ a iff a ∈ T and f(Mod(A)) = Mod(C(A)).

struct Represented {
  UniversePtr universe;
  ChoiceFunction choice;

  SemanticOperator op() const { return SemanticOperator{choice}; }
};

inline std::string theory_world_name(const TabulatedOperator& op, SentenceSet t) {
  std::string out = "{";
  bool first = true;
  for (const auto& s : op.names_of(t)) {
    if (!first) out += ',';
    out += s;
    first = false;
  }
  return out + "}";
}

/// `exclude_inconsistent` drops the full-language theory from the worlds
/// (needed for the modular/ranked completeness variant).
inline Represented represent(const TabulatedOperator& op, bool exclude_inconsistent = false) {
  if (!passes_five_postulates(op))
    throw std::invalid_argument("representation requires the five postulates");
  std::vector<Universe::AbstractWorld> worlds;
  for (SentenceSet t : op.theories()) {
    if (exclude_inconsistent && t == op.full_language()) continue;
    worlds.push_back({theory_world_name(op, t), op.names_of(t)});
  }
  auto u = Universe::abstract(op.language(), worlds);
  std::vector<WorldSet> table(u->subset_count(), ChoiceFunction::kUndefined);
  for (WorldSet x = 0; x < table.size(); ++x)
    if (u->is_definable(x)) table[x] = u->mod_set(op.close(u->theory_sentences(x)));
  return Represented{u, ChoiceFunction(u, std::move(table))};
}

/// Intersection ⋂ C_i, built semantically: disjoint union of the
/// representing universes, per-component choice.
inline Represented intersect(const std::vector<TabulatedOperator>& ops) {
  if (ops.empty()) throw std::invalid_argument("empty operator list");
  std::vector<Represented> parts;
  for (const auto& op : ops) {
    if (op.language() != ops.front().language())
      throw std::invalid_argument("mismatched languages");
    parts.push_back(represent(op));
  }
  std::vector<Universe::AbstractWorld> worlds;
  std::vector<std::size_t> offset;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const auto& pu = *parts[i].universe;
    offset.push_back(worlds.size());
    for (std::size_t w = 0; w < pu.world_count(); ++w) {
      std::vector<std::string> sat;
      for (std::size_t s = 0; s < pu.sentences().size(); ++s)
        if (pu.satisfies(w, s)) sat.push_back(pu.sentences()[s]);
      worlds.push_back({pu.world_name(w) + "#" + std::to_string(i + 1), std::move(sat)});
    }
  }
  auto u = Universe::abstract(ops.front().language(), worlds);
  std::vector<WorldSet> table(u->subset_count(), ChoiceFunction::kUndefined);
  for (WorldSet x = 0; x < table.size(); ++x) {
    if (!u->is_definable(x)) continue;
    const SentenceSet th = u->theory_sentences(x);
    WorldSet chosen = 0;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      const auto& pu = *parts[i].universe;
      const WorldSet part = parts[i].choice.apply(pu.mod_set(th));
      chosen |= static_cast<WorldSet>(part) << offset[i];
    }
    table[x] = chosen;
  }
  return Represented{u, ChoiceFunction(u, std::move(table))};
}

}  // namespace nmc
