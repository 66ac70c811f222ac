#pragma once

// Finitary preferential consequence relations a |~ b over a propositional
// universe, stored on semantic classes (one per world set, so Left Logical
// Equivalence and the semantic half of Right Weakening hold by
// representation, while every axiom remains checkable):
//
//   reflexivity                a |~ a
//   left_logical_equivalence   ⊨ a ↔ b, a |~ c ⇒ b |~ c
//   right_weakening            ⊨ a → b, c |~ a ⇒ c |~ b
//   and_rule                   a |~ b, a |~ c ⇒ a |~ b ∧ c
//   or_rule                    a |~ c, b |~ c ⇒ a ∨ b |~ c
//   cautious_monotonicity      a |~ b, a |~ c ⇒ a ∧ b |~ c
//
// Extraction: a |~ b iff b ∈ C({a}). Lifting: b ∈ C(A) iff there is a
// formula a with A ⊨ a such that a' |~ b for every a' with A ⊨ a' and
// a' ⊨ a; the lift agrees with the source relation on singleton premises
// and satisfies the five postulates.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "nmc/connectives.hpp"
#include "nmc/consequence.hpp"
#include "nmc/universe.hpp"

namespace nmc {

enum class KlmAxiom {
  Reflexivity,
  LeftLogicalEquivalence,
  RightWeakening,
  AndRule,
  OrRule,
  CautiousMonotonicityRule,
};

inline const char* name(KlmAxiom a) {
  switch (a) {
    case KlmAxiom::Reflexivity: return "reflexivity";
    case KlmAxiom::LeftLogicalEquivalence: return "left_logical_equivalence";
    case KlmAxiom::RightWeakening: return "right_weakening";
    case KlmAxiom::AndRule: return "and_rule";
    case KlmAxiom::OrRule: return "or_rule";
    case KlmAxiom::CautiousMonotonicityRule: return "cautious_monotonicity";
  }
  return "?";
}

struct KlmVerdict {
  std::string axiom;
  bool holds = true;
  std::vector<std::string> witness;  // instantiating formulas of the violation
};

class PreferentialRelation {
 public:
  PreferentialRelation(UniversePtr u, std::vector<std::pair<WorldSet, WorldSet>> pairs)
      : u_(std::move(u)), rel_(u_->subset_count() * u_->subset_count(), 0) {
    if (u_->mode() != Universe::Mode::Propositional)
      throw std::invalid_argument("preferential relations require a propositional universe");
    if (u_->atoms().size() > 3)
      throw std::invalid_argument("universe too large for class-pair tabulation");
    for (auto [a, b] : pairs) rel_[idx(a, b)] = 1;
  }

  const UniversePtr& universe() const { return u_; }

  bool related_classes(WorldSet ca, WorldSet cb) const { return rel_[idx(ca, cb)]; }

  bool related(const Formula& a, const Formula& b) const {
    return related_classes(u_->mod(a), u_->mod(b));
  }

  bool operator==(const PreferentialRelation& o) const { return rel_ == o.rel_; }

  std::vector<std::pair<WorldSet, WorldSet>> pairs() const {
    std::vector<std::pair<WorldSet, WorldSet>> out;
    for (WorldSet a = 0; a < u_->subset_count(); ++a)
      for (WorldSet b = 0; b < u_->subset_count(); ++b)
        if (related_classes(a, b)) out.emplace_back(a, b);
    return out;
  }

 private:
  std::size_t idx(WorldSet a, WorldSet b) const { return std::size_t{a} * u_->subset_count() + b; }

  UniversePtr u_;
  std::vector<char> rel_;
};

/// a |~ b iff b ∈ C({a}); requires a propositional CCLM semantic operator.
inline PreferentialRelation relation_from_operator(const SemanticOperator& op) {
  const auto& u = op.universe();
  if (u->mode() != Universe::Mode::Propositional)
    throw std::invalid_argument("relation extraction requires a propositional universe");
  if (!is_cclm(op.f))
    throw std::invalid_argument("relation extraction requires a CCLM choice function");
  std::vector<std::pair<WorldSet, WorldSet>> pairs;
  for (WorldSet ca = 0; ca < u->subset_count(); ++ca)
    for (WorldSet cb = 0; cb < u->subset_count(); ++cb)
      if ((op.f.apply(ca) & ~cb) == 0) pairs.emplace_back(ca, cb);
  return PreferentialRelation(u, std::move(pairs));
}

/// a |~ b iff a classically entails b.
inline PreferentialRelation classical_entailment_relation(UniversePtr u) {
  std::vector<std::pair<WorldSet, WorldSet>> pairs;
  for (WorldSet ca = 0; ca < u->subset_count(); ++ca)
    for (WorldSet cb = 0; cb < u->subset_count(); ++cb)
      if ((ca & ~cb) == 0) pairs.emplace_back(ca, cb);
  return PreferentialRelation(std::move(u), std::move(pairs));
}

inline KlmVerdict check_klm(const PreferentialRelation& rel, KlmAxiom axiom) {
  KlmVerdict v{name(axiom), true, {}};
  const auto& u = *rel.universe();
  const WorldSet n = static_cast<WorldSet>(u.subset_count());
  auto rep = [&](WorldSet c) { return render(u.characteristic_formula(c)); };
  auto fail = [&](std::initializer_list<WorldSet> cs) {
    KlmVerdict bad{v.axiom, false, {}};
    for (WorldSet c : cs) bad.witness.push_back(rep(c));
    return bad;
  };

  switch (axiom) {
    case KlmAxiom::Reflexivity:
      for (WorldSet a = 0; a < n; ++a)
        if (!rel.related_classes(a, a)) return fail({a});
      break;
    case KlmAxiom::LeftLogicalEquivalence:
      // classes identify logically equivalent formulas, so equivalent
      // premises share a row by representation; the loop is the literal
      // statement
      for (WorldSet a = 0; a < n; ++a)
        for (WorldSet c = 0; c < n; ++c)
          if (rel.related_classes(a, c) != rel.related_classes(a, c)) return fail({a, a, c});
      break;
    case KlmAxiom::RightWeakening:
      for (WorldSet a = 0; a < n; ++a)
        for (WorldSet b = 0; b < n; ++b) {
          if ((a & ~b) != 0) continue;  // ⊨ a → b
          for (WorldSet c = 0; c < n; ++c)
            if (rel.related_classes(c, a) && !rel.related_classes(c, b))
              return fail({a, b, c});
        }
      break;
    case KlmAxiom::AndRule:
      for (WorldSet a = 0; a < n; ++a)
        for (WorldSet b = 0; b < n; ++b) {
          if (!rel.related_classes(a, b)) continue;
          for (WorldSet c = 0; c < n; ++c)
            if (rel.related_classes(a, c) && !rel.related_classes(a, b & c))
              return fail({a, b, c});
        }
      break;
    case KlmAxiom::OrRule:
      for (WorldSet a = 0; a < n; ++a)
        for (WorldSet b = 0; b < n; ++b)
          for (WorldSet c = 0; c < n; ++c)
            if (rel.related_classes(a, c) && rel.related_classes(b, c) &&
                !rel.related_classes(a | b, c))
              return fail({a, b, c});
      break;
    case KlmAxiom::CautiousMonotonicityRule:
      for (WorldSet a = 0; a < n; ++a)
        for (WorldSet b = 0; b < n; ++b) {
          if (!rel.related_classes(a, b)) continue;
          for (WorldSet c = 0; c < n; ++c)
            if (rel.related_classes(a, c) && !rel.related_classes(a & b, c))
              return fail({a, b, c});
        }
      break;
  }
  return v;
}

inline bool passes_all_klm(const PreferentialRelation& rel) {
  for (auto a : {KlmAxiom::Reflexivity, KlmAxiom::LeftLogicalEquivalence,
                 KlmAxiom::RightWeakening, KlmAxiom::AndRule, KlmAxiom::OrRule,
                 KlmAxiom::CautiousMonotonicityRule})
    if (!check_klm(rel, a).holds) return false;
  return true;
}

/// b ∈ C(A) iff ∃a (A ⊨ a) such that ∀a' (A ⊨ a', a' ⊨ a): a' |~ b.
/// Double class quantification is O(4^(2^n)); exhaustive use is capped at
/// 2 atoms unless `allow_large` is set.
inline ClassOperator lift(const PreferentialRelation& rel, bool allow_large = false) {
  if (!passes_all_klm(rel))
    throw std::invalid_argument("lifting requires all six axioms");
  const auto& u = rel.universe();
  if (u->atoms().size() > 2 && !allow_large)
    throw std::invalid_argument("universe too large for exhaustive lifting");
  const WorldSet n = static_cast<WorldSet>(u->subset_count());
  std::vector<std::uint32_t> entail(n, 0);
  for (WorldSet x = 0; x < n; ++x)  // x = Mod(A)
    for (WorldSet cb = 0; cb < n; ++cb) {
      bool member = false;
      for (WorldSet s = 0; s < n && !member; ++s) {  // a: A ⊨ a, class s ⊇ x
        if ((x & ~s) != 0) continue;
        bool all = true;
        for (WorldSet sp = 0; sp < n; ++sp) {  // a': x ⊆ sp ⊆ s
          if ((x & ~sp) != 0 || (sp & ~s) != 0) continue;
          if (!rel.related_classes(sp, cb)) { all = false; break; }
        }
        member = all;
      }
      if (member) entail[x] |= std::uint32_t{1} << cb;
    }
  return ClassOperator(u, std::move(entail));
}

}  // namespace nmc
