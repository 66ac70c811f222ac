#pragma once

// Qualitative measures: a strict relation > over world sets expressing
// "an order of magnitude larger", with checkers for
//
//   strict_order        irreflexive and transitive
//   respects_inclusion  W ⊇ X > Y ⊇ Z ⇒ W > Z
//   negligible_union    X ≯ ∅ and Y ≯ ∅ ⇒ X ∪ Y ≯ ∅        (binary form)
//   left_difference     X ∪ Y > Y ⇒ X > Y
//   union_bound         X > Y and X > Z ⇒ X > Y ∪ Z          (binary form)
//   modularity          X > Y ⇒ X > Z or Z > Y
//
// and the two conversions between measures and choice functions: from f,
// X > Y iff f(X) ≠ ∅ and Y ∩ f(X ∪ Y) = ∅; from >, f(X) is the set of
// heavy elements of X (x with X ≯ {x}).
//
// The binary forms of negligible_union and union_bound generate the finite
// versions by induction on the family size, so nothing is lost over a
// finite universe.

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "nmc/choice.hpp"
#include "nmc/universe.hpp"

namespace nmc {

class QualMeasure {
 public:
  /// `pairs` lists the true entries of >. Irreflexivity is enforced; the
  /// other properties are checkable, not enforced. Requires a fully
  /// definable universe.
  QualMeasure(UniversePtr u, const std::vector<std::pair<WorldSet, WorldSet>>& pairs)
      : u_(std::move(u)), rel_(u_->subset_count() * u_->subset_count(), 0) {
    if (!u_->fully_definable())
      throw std::invalid_argument("qualitative measures require a fully definable universe");
    for (auto [x, y] : pairs) {
      if (x >= u_->subset_count() || y >= u_->subset_count())
        throw std::invalid_argument("measure pair outside the universe");
      if (x == y) throw std::invalid_argument("measure is not irreflexive");
      rel_[idx(x, y)] = 1;
    }
  }

  const UniversePtr& universe() const { return u_; }

  bool greater(WorldSet x, WorldSet y) const { return rel_[idx(x, y)]; }

  /// x is heavy in X iff X ≯ {x}.
  bool heavy(std::size_t x, WorldSet big) const {
    const WorldSet single = WorldSet{1} << x;
    if ((big & single) == 0) throw std::invalid_argument("element not in the set");
    return !greater(big, single);
  }

  bool operator==(const QualMeasure& o) const { return rel_ == o.rel_; }

  std::vector<std::pair<WorldSet, WorldSet>> pairs() const {
    std::vector<std::pair<WorldSet, WorldSet>> out;
    for (WorldSet x = 0; x < u_->subset_count(); ++x)
      for (WorldSet y = 0; y < u_->subset_count(); ++y)
        if (greater(x, y)) out.emplace_back(x, y);
    return out;
  }

 private:
  std::size_t idx(WorldSet x, WorldSet y) const { return std::size_t{x} * u_->subset_count() + y; }

  UniversePtr u_;
  std::vector<char> rel_;
};

enum class MeasureProperty {
  StrictOrder,
  RespectsInclusion,
  NegligibleUnion,
  LeftDifference,
  UnionBound,
  Modularity,
};

inline const char* name(MeasureProperty p) {
  switch (p) {
    case MeasureProperty::StrictOrder: return "strict_order";
    case MeasureProperty::RespectsInclusion: return "respects_inclusion";
    case MeasureProperty::NegligibleUnion: return "negligible_union";
    case MeasureProperty::LeftDifference: return "left_difference";
    case MeasureProperty::UnionBound: return "union_bound";
    case MeasureProperty::Modularity: return "modularity";
  }
  return "?";
}

inline PropertyVerdict check_measure_property(const QualMeasure& m, MeasureProperty prop) {
  PropertyVerdict v{name(prop), true, {}, std::nullopt};
  const WorldSet n = static_cast<WorldSet>(m.universe()->subset_count());

  switch (prop) {
    case MeasureProperty::StrictOrder:
      for (WorldSet x = 0; x < n; ++x)
        if (m.greater(x, x)) return {v.property, false, {x, x}, std::nullopt};
      for (WorldSet x = 0; x < n; ++x)
        for (WorldSet y = 0; y < n; ++y) {
          if (!m.greater(x, y)) continue;
          for (WorldSet z = 0; z < n; ++z)
            if (m.greater(y, z) && !m.greater(x, z))
              return {v.property, false, {x, y, z}, std::nullopt};
        }
      break;
    case MeasureProperty::RespectsInclusion:
      for (WorldSet x = 0; x < n; ++x)
        for (WorldSet y = 0; y < n; ++y) {
          if (!m.greater(x, y)) continue;
          for (WorldSet w = 0; w < n; ++w) {
            if ((x & ~w) != 0) continue;  // W ⊇ X
            for (WorldSet z = 0; z < n; ++z)
              if ((z & ~y) == 0 && !m.greater(w, z))  // Y ⊇ Z
                return {v.property, false, {w, x, y}, std::nullopt};
          }
        }
      break;
    case MeasureProperty::NegligibleUnion:
      for (WorldSet x = 0; x < n; ++x)
        for (WorldSet y = 0; y < n; ++y)
          if (!m.greater(x, 0) && !m.greater(y, 0) && m.greater(x | y, 0))
            return {v.property, false, {x, y}, std::nullopt};
      break;
    case MeasureProperty::LeftDifference:
      for (WorldSet x = 0; x < n; ++x)
        for (WorldSet y = 0; y < n; ++y)
          if (m.greater(x | y, y) && !m.greater(x, y))
            return {v.property, false, {x, y}, std::nullopt};
      break;
    case MeasureProperty::UnionBound:
      for (WorldSet x = 0; x < n; ++x)
        for (WorldSet y = 0; y < n; ++y) {
          if (!m.greater(x, y)) continue;
          for (WorldSet z = 0; z < n; ++z)
            if (m.greater(x, z) && !m.greater(x, y | z))
              return {v.property, false, {x, y, z}, std::nullopt};
        }
      break;
    case MeasureProperty::Modularity:
      for (WorldSet x = 0; x < n; ++x)
        for (WorldSet y = 0; y < n; ++y) {
          if (!m.greater(x, y)) continue;
          for (WorldSet z = 0; z < n; ++z)
            if (!m.greater(x, z) && !m.greater(z, y))
              return {v.property, false, {x, y, z}, std::nullopt};
        }
      break;
  }
  return v;
}

/// The five core measure properties, excluding modularity.
inline bool is_qualitative(const QualMeasure& m) {
  for (auto p : {MeasureProperty::StrictOrder, MeasureProperty::RespectsInclusion,
                 MeasureProperty::NegligibleUnion, MeasureProperty::LeftDifference,
                 MeasureProperty::UnionBound})
    if (!check_measure_property(m, p).holds) return false;
  return true;
}

/// X > Y iff Y = ∅ and X ≠ ∅; the classical (monotone) measure.
inline QualMeasure tarski_measure(UniversePtr u) {
  std::vector<std::pair<WorldSet, WorldSet>> pairs;
  for (WorldSet x = 1; x < u->subset_count(); ++x) pairs.emplace_back(x, 0);
  return QualMeasure(std::move(u), pairs);
}

inline QualMeasure empty_measure(UniversePtr u) { return QualMeasure(std::move(u), {}); }

/// X > Y iff Y = ∅ ≠ X or min grade over X < min grade over Y.
inline QualMeasure rank_measure(UniversePtr u, const std::vector<unsigned>& grade) {
  if (grade.size() != u->world_count())
    throw std::invalid_argument("grade map must be total on worlds");
  auto rank_of = [&](WorldSet x) {
    unsigned best = ~0u;
    for (std::size_t w = 0; w < grade.size(); ++w)
      if ((x >> w) & 1) best = std::min(best, grade[w]);
    return best;  // ~0u for the empty set
  };
  std::vector<std::pair<WorldSet, WorldSet>> pairs;
  for (WorldSet x = 1; x < u->subset_count(); ++x)
    for (WorldSet y = 0; y < u->subset_count(); ++y)
      if (rank_of(x) < rank_of(y)) pairs.emplace_back(x, y);
  return QualMeasure(std::move(u), pairs);
}

/// X > Y iff f(X) ≠ ∅ and Y ∩ f(X ∪ Y) = ∅. Requires f to satisfy
/// Contraction, Coherence and Local Monotonicity over a fully definable
/// universe; the result then passes the five measure properties.
inline QualMeasure measure_from_choice(const ChoiceFunction& f) {
  const auto& u = f.universe();
  if (!u->fully_definable())
    throw std::invalid_argument("measure conversion requires a fully definable universe");
  if (!is_cclm(f))
    throw std::invalid_argument("measure conversion requires a CCLM choice function");
  std::vector<std::pair<WorldSet, WorldSet>> pairs;
  for (WorldSet x = 0; x < u->subset_count(); ++x) {
    if (f.apply(x) == 0) continue;
    for (WorldSet y = 0; y < u->subset_count(); ++y)
      if (x != y && (y & f.apply(x | y)) == 0) pairs.emplace_back(x, y);
  }
  return QualMeasure(u, pairs);
}

/// f(X) = the heavy elements of X. Requires the five measure properties;
/// the result then satisfies Contraction, Coherence and Local Monotonicity.
inline ChoiceFunction choice_from_measure(const QualMeasure& m) {
  if (!is_qualitative(m))
    throw std::invalid_argument("choice conversion requires a qualitative measure");
  const auto& u = m.universe();
  std::vector<WorldSet> t(u->subset_count(), 0);
  for (WorldSet x = 0; x < t.size(); ++x)
    for (std::size_t w = 0; w < u->world_count(); ++w)
      if (((x >> w) & 1) && m.heavy(w, x)) t[x] |= WorldSet{1} << w;
  return ChoiceFunction(u, std::move(t));
}

/// a follows from A iff Mod(A) ∩ Mod(a) > Mod(A) − Mod(a), or Mod(A) ≯ ∅.
inline bool consequence_by_measure(const QualMeasure& m, WorldSet mod_a, WorldSet mod_q) {
  return m.greater(mod_a & mod_q, mod_a & ~mod_q) || !m.greater(mod_a, 0);
}

inline bool consequence_by_measure(const QualMeasure& m, std::span<const Formula> premises,
                                   const Formula& query) {
  const auto& u = *m.universe();
  return consequence_by_measure(m, u.mod_set(premises), u.mod(query));
}

}  // namespace nmc
