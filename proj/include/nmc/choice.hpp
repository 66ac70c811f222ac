#pragma once

// Choice functions on the definable sets of a universe, their constructors
// and the checkers for the choice-function properties:
//
//   Contraction            f(X) ⊆ X                      (enforced on construction)
//   Coherence              X ⊆ Y ⇒ X ∩ f(Y) ⊆ f(X)
//   Local Monotonicity     f(X) ⊆ Y ⊆ X ⇒ f(Y) ⊆ f(X)
//   Expansion              f(X) ∩ f(Y) ⊆ f(X ∪ Y)
//   Arrow                  X ⊆ Y, X ∩ f(Y) ≠ ∅ ⇒ f(X) ⊆ f(Y)
//   Path Independence      f(X ∪ Y) = f(f(X) ∪ Y)
//   Definability Pres.     f sends definable sets to definable sets
//
// Checkers quantify exhaustively over the definable sets in increasing mask
// order and report the first violation, so failures are deterministic.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "nmc/universe.hpp"

namespace nmc {

struct NonDefinableError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct PropertyVerdict {
  std::string property;
  bool holds = true;
  std::vector<WorldSet> witness_sets;          // the violating sets, in rule order
  std::optional<std::size_t> witness_world;    // the offending element, where relevant
};

class ChoiceFunction {
 public:
  static constexpr WorldSet kUndefined = ~WorldSet{0};

  /// `table[x]` is f(x) for every definable x; non-definable entries must be
  /// kUndefined. Contraction and totality over definable sets are enforced.
  ChoiceFunction(UniversePtr u, std::vector<WorldSet> table)
      : u_(std::move(u)), table_(std::move(table)) {
    if (table_.size() != u_->subset_count())
      throw std::invalid_argument("choice table has wrong size");
    for (WorldSet x = 0; x < table_.size(); ++x) {
      const bool definable = u_->is_definable(x);
      if (table_[x] == kUndefined) {
        if (definable)
          throw std::invalid_argument("choice table not total over definable sets");
        continue;
      }
      if ((table_[x] & ~x) != 0)
        throw std::invalid_argument("choice table violates Contraction");
    }
  }

  const UniversePtr& universe() const { return u_; }

  bool defined_on(WorldSet x) const { return table_[x] != kUndefined; }

  WorldSet apply(WorldSet x) const {
    if (!defined_on(x))
      throw NonDefinableError("choice function applied to a non-definable set");
    return table_[x];
  }

  const std::vector<WorldSet>& table() const { return table_; }

  bool operator==(const ChoiceFunction& o) const { return table_ == o.table_; }

  /// Sets the choice function is defined on, in increasing mask order.
  std::vector<WorldSet> domain() const {
    std::vector<WorldSet> out;
    for (WorldSet x = 0; x < table_.size(); ++x)
      if (defined_on(x)) out.push_back(x);
    return out;
  }

 private:
  UniversePtr u_;
  std::vector<WorldSet> table_;
};

enum class ChoiceProperty {
  Contraction,
  Coherence,
  LocalMonotonicity,
  Expansion,
  Arrow,
  PathIndependence,
  DefinabilityPreservation,
};

inline const char* name(ChoiceProperty p) {
  switch (p) {
    case ChoiceProperty::Contraction: return "contraction";
    case ChoiceProperty::Coherence: return "coherence";
    case ChoiceProperty::LocalMonotonicity: return "local_monotonicity";
    case ChoiceProperty::Expansion: return "expansion";
    case ChoiceProperty::Arrow: return "arrow";
    case ChoiceProperty::PathIndependence: return "path_independence";
    case ChoiceProperty::DefinabilityPreservation: return "definability_preservation";
  }
  return "?";
}

inline std::optional<std::size_t> first_world(WorldSet x) {
  if (x == 0) return std::nullopt;
  std::size_t w = 0;
  while (!((x >> w) & 1)) ++w;
  return w;
}

inline PropertyVerdict check_choice_property(const ChoiceFunction& f, ChoiceProperty prop) {
  PropertyVerdict v{name(prop), true, {}, std::nullopt};
  const auto& u = *f.universe();
  const auto dom = f.domain();

  switch (prop) {
    case ChoiceProperty::Contraction:
      for (WorldSet x : dom)
        if ((f.apply(x) & ~x) != 0)
          return {v.property, false, {x}, first_world(f.apply(x) & ~x)};
      break;
    case ChoiceProperty::Coherence:
      for (WorldSet x : dom)
        for (WorldSet y : dom) {
          if ((x & ~y) != 0) continue;  // X ⊆ Y
          const WorldSet bad = (x & f.apply(y)) & ~f.apply(x);
          if (bad) return {v.property, false, {x, y}, first_world(bad)};
        }
      break;
    case ChoiceProperty::LocalMonotonicity:
      for (WorldSet x : dom)
        for (WorldSet y : dom) {
          if ((f.apply(x) & ~y) != 0 || (y & ~x) != 0) continue;  // f(X) ⊆ Y ⊆ X
          const WorldSet bad = f.apply(y) & ~f.apply(x);
          if (bad) return {v.property, false, {x, y}, first_world(bad)};
        }
      break;
    case ChoiceProperty::Expansion:
      for (WorldSet x : dom)
        for (WorldSet y : dom) {
          if (!f.defined_on(x | y)) continue;
          const WorldSet bad = (f.apply(x) & f.apply(y)) & ~f.apply(x | y);
          if (bad) return {v.property, false, {x, y}, first_world(bad)};
        }
      break;
    case ChoiceProperty::Arrow:
      for (WorldSet x : dom)
        for (WorldSet y : dom) {
          if ((x & ~y) != 0 || (x & f.apply(y)) == 0) continue;
          const WorldSet bad = f.apply(x) & ~f.apply(y);
          if (bad) return {v.property, false, {x, y}, first_world(bad)};
        }
      break;
    case ChoiceProperty::PathIndependence:
      for (WorldSet x : dom)
        for (WorldSet y : dom) {
          if (!f.defined_on(x | y) || !f.defined_on(f.apply(x) | y)) continue;
          if (f.apply(x | y) != f.apply(f.apply(x) | y))
            return {v.property, false, {x, y}, std::nullopt};
        }
      break;
    case ChoiceProperty::DefinabilityPreservation:
      for (WorldSet x : dom)
        if (!u.is_definable(f.apply(x)))
          return {v.property, false, {x}, std::nullopt};
      break;
  }
  return v;
}

inline bool is_cclm(const ChoiceFunction& f) {
  return check_choice_property(f, ChoiceProperty::Contraction).holds &&
         check_choice_property(f, ChoiceProperty::Coherence).holds &&
         check_choice_property(f, ChoiceProperty::LocalMonotonicity).holds;
}

namespace detail {

inline std::vector<WorldSet> fresh_table(const Universe& u) {
  std::vector<WorldSet> t(u.subset_count(), ChoiceFunction::kUndefined);
  for (WorldSet x = 0; x < t.size(); ++x)
    if (u.is_definable(x)) t[x] = 0;
  return t;
}

}  // namespace detail

inline ChoiceFunction identity_choice(UniversePtr u) {
  auto t = detail::fresh_table(*u);
  for (WorldSet x = 0; x < t.size(); ++x)
    if (t[x] != ChoiceFunction::kUndefined) t[x] = x;
  return ChoiceFunction(std::move(u), std::move(t));
}

/// f ≡ ∅ on every definable set.
inline ChoiceFunction empty_choice(UniversePtr u) {
  return ChoiceFunction(std::move(u), detail::fresh_table(*u));
}

using OrderPairs = std::vector<std::pair<std::size_t, std::size_t>>;  // (smaller, larger)

namespace detail {

inline void validate_strict_partial_order(const OrderPairs& rel, std::size_t n) {
  std::vector<char> lt(n * n, 0);
  for (auto [a, b] : rel) {
    if (a >= n || b >= n) throw std::invalid_argument("order relates unknown world");
    lt[a * n + b] = 1;
  }
  for (std::size_t i = 0; i < n; ++i)
    if (lt[i * n + i]) throw std::invalid_argument("order is not irreflexive");
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (lt[a * n + b] && lt[b * n + c] && !lt[a * n + c])
          throw std::invalid_argument("order is not transitive");
}

inline WorldSet minima(const OrderPairs& rel, WorldSet x, std::size_t n) {
  WorldSet out = 0;
  for (std::size_t w = 0; w < n; ++w) {
    if (!((x >> w) & 1)) continue;
    bool dominated = false;
    for (auto [a, b] : rel)
      if (b == w && ((x >> a) & 1)) { dominated = true; break; }
    if (!dominated) out |= WorldSet{1} << w;
  }
  return out;
}

}  // namespace detail

/// Shoham minima under a strict partial order.
inline ChoiceFunction from_order(UniversePtr u, const OrderPairs& rel) {
  detail::validate_strict_partial_order(rel, u->world_count());
  auto t = detail::fresh_table(*u);
  for (WorldSet x = 0; x < t.size(); ++x)
    if (t[x] != ChoiceFunction::kUndefined)
      t[x] = detail::minima(rel, x, u->world_count());
  return ChoiceFunction(std::move(u), std::move(t));
}

/// Pseudo-rationalizable choice: union of the minima under each order.
inline ChoiceFunction from_order_family(UniversePtr u, const std::vector<OrderPairs>& rels) {
  if (rels.empty()) throw std::invalid_argument("empty order family");
  for (const auto& rel : rels)
    detail::validate_strict_partial_order(rel, u->world_count());
  auto t = detail::fresh_table(*u);
  for (WorldSet x = 0; x < t.size(); ++x) {
    if (t[x] == ChoiceFunction::kUndefined) continue;
    WorldSet chosen = 0;
    for (const auto& rel : rels) chosen |= detail::minima(rel, x, u->world_count());
    t[x] = chosen;
  }
  return ChoiceFunction(std::move(u), std::move(t));
}

/// Ranked choice: the worlds of minimal grade (lower grade = preferred).
inline ChoiceFunction from_rank(UniversePtr u, const std::vector<unsigned>& grade) {
  if (grade.size() != u->world_count())
    throw std::invalid_argument("grade map must be total on worlds");
  auto t = detail::fresh_table(*u);
  for (WorldSet x = 0; x < t.size(); ++x) {
    if (t[x] == ChoiceFunction::kUndefined || x == 0) continue;
    unsigned best = ~0u;
    for (std::size_t w = 0; w < u->world_count(); ++w)
      if ((x >> w) & 1) best = std::min(best, grade[w]);
    WorldSet chosen = 0;
    for (std::size_t w = 0; w < u->world_count(); ++w)
      if (((x >> w) & 1) && grade[w] == best) chosen |= WorldSet{1} << w;
    t[x] = chosen;
  }
  return ChoiceFunction(std::move(u), std::move(t));
}

/// All choice functions satisfying Contraction + Coherence + Local
/// Monotonicity, by exhaustive enumeration of the contraction candidates in
/// canonical order (the value for the smallest set advances fastest).
/// Exhaustive mode requires at most 3 worlds (4096 candidates at |M| = 3).
inline std::vector<ChoiceFunction> enumerate_cclm(const UniversePtr& u) {
  if (u->world_count() > 3)
    throw std::invalid_argument("universe too large for exhaustive CCLM enumeration");
  std::vector<WorldSet> sets;  // definable nonempty sets; f(∅) = ∅ is forced
  for (WorldSet x = 1; x < u->subset_count(); ++x)
    if (u->is_definable(x)) sets.push_back(x);

  std::vector<ChoiceFunction> out;
  std::vector<WorldSet> value(sets.size(), 0);  // value[i] ⊆ sets[i], submask cursor
  for (;;) {
    auto t = detail::fresh_table(*u);
    for (std::size_t i = 0; i < sets.size(); ++i) t[sets[i]] = value[i];
    ChoiceFunction f(u, std::move(t));
    if (is_cclm(f)) out.push_back(std::move(f));

    // advance the submask odometer
    std::size_t i = 0;
    for (; i < sets.size(); ++i) {
      if (value[i] != sets[i]) {
        value[i] = (value[i] - sets[i]) & sets[i];  // next submask of sets[i]
        break;
      }
      value[i] = 0;
    }
    if (i == sets.size()) break;
  }
  return out;
}

/// Extension of f to arbitrary subsets by f'(X) = X ∩ f(Mod(Th(X))). Keeps
/// Contraction and Coherence; Local Monotonicity may be lost on
/// non-definable sets.
inline ChoiceFunction extend_by_closure(const ChoiceFunction& f) {
  const auto& u = f.universe();
  std::vector<WorldSet> t(u->subset_count());
  for (WorldSet x = 0; x < t.size(); ++x) t[x] = x & f.apply(u->closure(x));
  return ChoiceFunction(u, std::move(t));
}

}  // namespace nmc
