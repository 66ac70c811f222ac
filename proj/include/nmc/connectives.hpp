#pragma once

// Introduction/elimination rules tying a consequence operator to the
// classical connectives, consistency, maximal consistent sets, and the
// classical representation built on them.
//
//   and_both_sides   C(A, a ∧ b) = C(A, a, b)
//   neg_left_intro   C(A, a, ¬a) = L
//   neg_left_elim    C(A, ¬a) = L ⇒ a ∈ C(A)
//   or_left_intro    C(A, a) ∩ C(A, b) ⊆ C(A, a ∨ b)
//   or_right_intro   a ∈ C(A) or b ∈ C(A) ⇒ a ∨ b ∈ C(A)
//   imp_right_intro  b ∈ C(A, a) ⇒ a → b ∈ C(A)
//   imp_left_intro   b ∈ C(A, a, a → b)
//
// Rules are quantified with A over closed premise sets (one per world set)
// and a, b over one representative formula per semantic class; every rule's
// satisfaction conditions are semantic, so the class reduction is exact.
// Exhaustive mode is bounded to 2 atoms; a seeded sampling mode covers
// larger universes.

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "nmc/consequence.hpp"
#include "nmc/universe.hpp"

namespace nmc {

enum class ConnectiveRule {
  AndBothSides,
  NegLeftIntro,
  NegLeftElim,
  OrLeftIntro,
  OrRightIntro,
  ImpRightIntro,
  ImpLeftIntro,
};

inline const char* name(ConnectiveRule r) {
  switch (r) {
    case ConnectiveRule::AndBothSides: return "and_both_sides";
    case ConnectiveRule::NegLeftIntro: return "neg_left_intro";
    case ConnectiveRule::NegLeftElim: return "neg_left_elim";
    case ConnectiveRule::OrLeftIntro: return "or_left_intro";
    case ConnectiveRule::OrRightIntro: return "or_right_intro";
    case ConnectiveRule::ImpRightIntro: return "imp_right_intro";
    case ConnectiveRule::ImpLeftIntro: return "imp_left_intro";
  }
  return "?";
}

struct RuleVerdict {
  std::string rule;
  bool holds = true;
  std::vector<std::string> premises;  // the closed premise set A, as one formula
  std::string a, b;                   // the instantiating formulas
};

namespace detail {

/// C(A ∪ E) = L, for a propositional semantic operator: everything follows
/// iff nothing is chosen.
inline bool closes_to_full(const SemanticOperator& op, WorldSet mod_premises) {
  return op.f.apply(mod_premises) == 0;
}

/// Does the single rule instance (A = premise class x, a = class ca,
/// b = class cb) hold?
inline bool rule_instance(const SemanticOperator& op, ConnectiveRule rule, WorldSet x,
                          WorldSet ca, WorldSet cb) {
  const auto& u = *op.universe();
  const auto& f = op.f;
  switch (rule) {
    case ConnectiveRule::AndBothSides: {
      const Formula fa = u.characteristic_formula(ca), fb = u.characteristic_formula(cb);
      const WorldSet both = x & u.mod(Formula::conj(fa, fb));
      const WorldSet separate = x & u.mod(fa) & u.mod(fb);
      return f.apply(both) == f.apply(separate) && both == separate;
    }
    case ConnectiveRule::NegLeftIntro: {
      const Formula fa = u.characteristic_formula(ca);
      return closes_to_full(op, x & u.mod(fa) & u.mod(Formula::negate(fa)));
    }
    case ConnectiveRule::NegLeftElim: {
      const Formula fa = u.characteristic_formula(ca);
      if (!closes_to_full(op, x & u.mod(Formula::negate(fa)))) return true;
      return (f.apply(x) & ~u.mod(fa)) == 0;  // a ∈ C(A)
    }
    case ConnectiveRule::OrLeftIntro: {
      // membership of any class cc in both C(A,a) and C(A,b) must carry
      // over to C(A, a ∨ b)
      for (WorldSet cc = 0; cc < u.subset_count(); ++cc) {
        const bool in_a = (f.apply(x & ca) & ~cc) == 0;
        const bool in_b = (f.apply(x & cb) & ~cc) == 0;
        if (in_a && in_b && (f.apply(x & (ca | cb)) & ~cc) != 0) return false;
      }
      return true;
    }
    case ConnectiveRule::OrRightIntro: {
      const WorldSet chosen = f.apply(x);
      if ((chosen & ~ca) == 0 && (chosen & ~(ca | cb)) != 0) return false;
      if ((chosen & ~cb) == 0 && (chosen & ~(ca | cb)) != 0) return false;
      return true;
    }
    case ConnectiveRule::ImpRightIntro: {
      if ((f.apply(x & ca) & ~cb) != 0) return true;  // b ∉ C(A, a)
      const WorldSet imp = (u.all_worlds() & ~ca) | cb;  // Mod(a → b)
      return (f.apply(x) & ~imp) == 0;
    }
    case ConnectiveRule::ImpLeftIntro: {
      const WorldSet imp = (u.all_worlds() & ~ca) | cb;
      return (f.apply(x & ca & imp) & ~cb) == 0;
    }
  }
  return true;
}

inline RuleVerdict rule_failure(const Universe& u, ConnectiveRule rule, WorldSet x, WorldSet ca,
                                WorldSet cb) {
  return RuleVerdict{name(rule), false,
                     {render(u.characteristic_formula(x))},
                     render(u.characteristic_formula(ca)),
                     render(u.characteristic_formula(cb))};
}

}  // namespace detail

/// Exhaustive over all closed premise sets and class pairs; propositional
/// universes with at most 2 atoms.
inline RuleVerdict check_rule(const SemanticOperator& op, ConnectiveRule rule) {
  const auto& u = *op.universe();
  if (u.mode() != Universe::Mode::Propositional)
    throw std::invalid_argument("connective rules require a propositional universe");
  if (u.atoms().size() > 2)
    throw std::invalid_argument("universe too large for exhaustive rule check");
  for (WorldSet x = 0; x < u.subset_count(); ++x)
    for (WorldSet ca = 0; ca < u.subset_count(); ++ca)
      for (WorldSet cb = 0; cb < u.subset_count(); ++cb)
        if (!detail::rule_instance(op, rule, x, ca, cb))
          return detail::rule_failure(u, rule, x, ca, cb);
  return RuleVerdict{name(rule), true, {}, {}, {}};
}

/// Seeded random instances, for universes beyond the exhaustive bound.
inline RuleVerdict check_rule_sampled(const SemanticOperator& op, ConnectiveRule rule,
                                      std::size_t samples, std::uint64_t seed) {
  const auto& u = *op.universe();
  if (u.mode() != Universe::Mode::Propositional)
    throw std::invalid_argument("connective rules require a propositional universe");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<WorldSet> pick(0, static_cast<WorldSet>(u.subset_count() - 1));
  for (std::size_t i = 0; i < samples; ++i) {
    const WorldSet x = pick(rng), ca = pick(rng), cb = pick(rng);
    if (!detail::rule_instance(op, rule, x, ca, cb))
      return detail::rule_failure(u, rule, x, ca, cb);
  }
  return RuleVerdict{name(rule), true, {}, {}, {}};
}

inline bool passes_all_rules(const SemanticOperator& op) {
  for (auto r : {ConnectiveRule::AndBothSides, ConnectiveRule::NegLeftIntro,
                 ConnectiveRule::NegLeftElim, ConnectiveRule::OrLeftIntro,
                 ConnectiveRule::OrRightIntro, ConnectiveRule::ImpRightIntro,
                 ConnectiveRule::ImpLeftIntro})
    if (!check_rule(op, r).holds) return false;
  return true;
}

inline bool is_consistent(const SemanticOperator& op, std::span<const Formula> premises) {
  return op.f.apply(op.universe()->mod_set(premises)) != 0;
}

inline bool is_consistent(const TabulatedOperator& op, SentenceSet a) {
  return op.close(a) != op.full_language();
}

/// The ⊆-maximal consistent supersets of A: the per-world theories Th({w})
/// for w ∈ Mod(A) with f({w}) ≠ ∅.
inline std::vector<Theory> maximal_consistent_extensions(const SemanticOperator& op,
                                                         std::span<const Formula> premises) {
  const auto& u = op.universe();
  if (!is_consistent(op, premises))
    throw std::invalid_argument("premises are inconsistent");
  std::vector<Theory> out;
  const WorldSet mod = u->mod_set(premises);
  for (std::size_t w = 0; w < u->world_count(); ++w) {
    const WorldSet single = WorldSet{1} << w;
    if ((mod & single) && op.f.apply(single) != 0) out.push_back(Theory{u, single});
  }
  return out;
}

/// Representation over maximal consistent sets: an abstract universe with
/// one world per consistent valuation and one sentence per semantic class,
/// T ⊨ a iff a ∈ T. Requires the five postulates, weak compactness and all
/// seven rules; for propositional semantic operators these reduce to CCLM,
/// which is what is validated.
inline Represented represent_classical(const SemanticOperator& op) {
  const auto& u = op.universe();
  if (u->mode() != Universe::Mode::Propositional)
    throw std::invalid_argument("classical representation requires a propositional universe");
  if (!is_cclm(op.f))
    throw std::invalid_argument("classical representation requires a CCLM choice function");

  std::vector<std::size_t> kept;  // consistent worlds, i.e. f({w}) ≠ ∅
  for (std::size_t w = 0; w < u->world_count(); ++w)
    if (op.f.apply(WorldSet{1} << w) != 0) kept.push_back(w);

  std::vector<std::string> sentences;
  for (WorldSet c = 0; c < u->subset_count(); ++c)
    sentences.push_back(render(u->characteristic_formula(c)));
  std::vector<Universe::AbstractWorld> worlds;
  for (std::size_t w : kept) {
    Universe::AbstractWorld aw;
    aw.name = u->world_name(w);
    for (WorldSet c = 0; c < u->subset_count(); ++c)
      if ((c >> w) & 1) aw.satisfies.push_back(sentences[c]);
    worlds.push_back(std::move(aw));
  }
  auto nu = Universe::abstract(std::move(sentences), worlds);

  auto expand = [&](WorldSet x) {
    WorldSet out = 0;
    for (std::size_t i = 0; i < kept.size(); ++i)
      if ((x >> i) & 1) out |= WorldSet{1} << kept[i];
    return out;
  };
  auto compress = [&](WorldSet x) {
    WorldSet out = 0;
    for (std::size_t i = 0; i < kept.size(); ++i)
      if ((x >> kept[i]) & 1) out |= WorldSet{1} << i;
    return out;
  };
  std::vector<WorldSet> table(nu->subset_count(), ChoiceFunction::kUndefined);
  for (WorldSet x = 0; x < table.size(); ++x)
    if (nu->is_definable(x)) table[x] = compress(op.f.apply(expand(x)));
  return Represented{nu, ChoiceFunction(nu, std::move(table))};
}

/// Conservative extension of an operator over a finite atom set P to a
/// propositional operator over formulas built from P, with
/// P ∩ C'(A) = C(A) for every A ⊆ P. Worlds are the theories read as
/// valuations; the choice function is extended from theory sets to
/// arbitrary valuation sets through the closure.
inline SemanticOperator conservative_extension(const TabulatedOperator& op) {
  for (const auto& s : op.language())
    if (!Formula::valid_atom_name(s))
      throw std::invalid_argument("language is not a set of atoms: '" + s + "'");
  const Represented rep = represent(op);
  const auto& tu = *rep.universe;
  auto pu = Universe::propositional(op.language());

  // theory world i, seen as a valuation, is the propositional world whose
  // index is the theory's sentence mask
  std::vector<std::size_t> val;
  for (std::size_t w = 0; w < tu.world_count(); ++w) {
    SentenceSet t = 0;
    for (std::size_t s = 0; s < tu.sentences().size(); ++s)
      if (tu.satisfies(w, s)) t |= SentenceSet{1} << s;
    val.push_back(t);
  }

  std::vector<WorldSet> table(pu->subset_count());
  for (WorldSet x = 0; x < table.size(); ++x) {
    WorldSet y = 0;  // the theory worlds among x
    for (std::size_t i = 0; i < val.size(); ++i)
      if ((x >> val[i]) & 1) y |= WorldSet{1} << i;
    const WorldSet chosen = y & rep.choice.apply(tu.closure(y));
    WorldSet out = 0;
    for (std::size_t i = 0; i < val.size(); ++i)
      if ((chosen >> i) & 1) out |= WorldSet{1} << val[i];
    table[x] = out;
  }
  return SemanticOperator{ChoiceFunction(std::move(pu), std::move(table))};
}

}  // namespace nmc
