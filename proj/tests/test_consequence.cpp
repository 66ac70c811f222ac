#include <doctest.h>

#include <vector>

#include "nmc/choice.hpp"
#include "nmc/consequence.hpp"
#include "nmc/universe.hpp"

using namespace nmc;

namespace {

const std::vector<Postulate> kFive = {Postulate::Inclusion, Postulate::Idempotence,
                                      Postulate::CautiousMonotonicity,
                                      Postulate::ConditionalMonotonicity,
                                      Postulate::ThresholdMonotonicity};

std::vector<TabulatedOperator> all_pair_tables() {
  std::vector<TabulatedOperator> out;
  for (SentenceSet t0 = 0; t0 < 4; ++t0)
    for (SentenceSet t1 = 0; t1 < 4; ++t1)
      for (SentenceSet t2 = 0; t2 < 4; ++t2)
        for (SentenceSet t3 = 0; t3 < 4; ++t3)
          out.push_back(TabulatedOperator({"a", "b"}, {t0, t1, t2, t3}));
  return out;
}

// ranked choice over atoms {b, f}: the (b, f) world is most plausible, the
// (b, ~f) world least
SemanticOperator birds_operator() {
  const auto u = Universe::propositional({"b", "f"});
  return SemanticOperator{from_rank(u, {1, 2, 1, 0})};
}

}  // namespace

TEST_CASE("the nonmonotone pair fixture closes as expected") {
  const auto op = nonmonotone_pair_operator();
  CHECK(op.close(op.set_of({})) == op.set_of({"a"}));
  CHECK(op.close(op.set_of({"b"})) == op.set_of({"b"}));
  CHECK_FALSE(op.entails(op.set_of({"b"}), op.sentence_index("a")));
  CHECK(op.entails(SentenceSet{0}, op.sentence_index("a")));
  CHECK(op.cn(SentenceSet{0}) == 0);  // {a} ∩ {a} ∩ {b} ∩ {a,b}
}

TEST_CASE("the fixture passes the five postulates and fails monotonicity at (∅, {b})") {
  const auto op = nonmonotone_pair_operator();
  for (auto p : kFive) CHECK(check_postulate(op, p).holds);
  CHECK(check_postulate(op, Postulate::WeakCompactness).holds);
  const auto v = check_postulate(op, Postulate::Monotonicity);
  REQUIRE_FALSE(v.holds);
  REQUIRE(v.witness.size() == 2);
  CHECK(v.witness[0].empty());
  CHECK(v.witness[1] == std::vector<std::string>{"b"});
}

TEST_CASE("theory sets: fixture and twin share theories but differ at ∅") {
  const auto op = nonmonotone_pair_operator();
  const auto twin = nonmonotone_pair_twin();
  CHECK(op.theories() == std::vector<SentenceSet>{0b01, 0b10, 0b11});
  CHECK(op.theories() == twin.theories());
  CHECK_FALSE(op == twin);
  CHECK(op.close(0) != twin.close(0));
  for (auto p : kFive) CHECK(check_postulate(twin, p).holds);

  // C({a}) ∩ C({b}) = ∅ is not a theory
  const SentenceSet meet = op.close(0b01) & op.close(0b10);
  CHECK(meet == 0);
  CHECK(op.close(meet) != meet);
}

TEST_CASE("cumulativity follows from idempotence and cautious monotonicity") {
  for (const auto& op : all_pair_tables()) {
    if (!check_postulate(op, Postulate::Idempotence).holds) continue;
    if (!check_postulate(op, Postulate::CautiousMonotonicity).holds) continue;
    CHECK(check_postulate(op, Postulate::Cumulativity).holds);
  }
}

TEST_CASE("cn is below close and monotone operators equal their core") {
  for (const auto& op : all_pair_tables()) {
    if (!passes_five_postulates(op)) continue;
    for (SentenceSet a = 0; a < op.subset_count(); ++a) {
      CHECK((op.cn(a) & ~op.close(a)) == 0);  // Cn(A) ⊆ C(A)
      CHECK((a & ~op.cn(a)) == 0);            // A ⊆ Cn(A), by inclusion
    }
    if (check_postulate(op, Postulate::Monotonicity).holds)
      for (SentenceSet a = 0; a < op.subset_count(); ++a) CHECK(op.cn(a) == op.close(a));
  }
}

TEST_CASE("background shift preserves the five postulates") {
  const auto op = nonmonotone_pair_operator();
  CHECK(with_background(op, 0) == op);
  for (SentenceSet b = 0; b < op.subset_count(); ++b) {
    const auto shifted = with_background(op, b);
    for (auto p : kFive) CHECK(check_postulate(shifted, p).holds);
  }
}

TEST_CASE("representation: worlds are the theories, round trip is exact") {
  const auto op = nonmonotone_pair_operator();
  const auto rep = represent(op);
  CHECK(rep.universe->world_count() == 3);
  CHECK(rep.universe->world_by_name("{a}") == 0);
  CHECK(rep.universe->world_by_name("{b}") == 1);
  CHECK(rep.universe->world_by_name("{a,b}") == 2);
  CHECK(is_cclm(rep.choice));
  CHECK(check_choice_property(rep.choice, ChoiceProperty::DefinabilityPreservation).holds);
  CHECK(tabulate(rep.op()) == op);

  CHECK_THROWS_AS(represent(TabulatedOperator({"a", "b"}, {0, 0, 0, 0})),
                  std::invalid_argument);  // fails inclusion
}

TEST_CASE("completeness sweep: all postulate-satisfying pair tables round-trip") {
  std::size_t survivors = 0;
  for (const auto& op : all_pair_tables()) {
    if (!passes_five_postulates(op)) continue;
    ++survivors;
    const auto rep = represent(op);
    CHECK(tabulate(rep.op()) == op);
    CHECK(is_cclm(rep.choice));
  }
  CHECK(survivors == 9);
}

TEST_CASE("representing a monotone operator gives the identity on definable sets") {
  // classical closure over one sentence: C(A) = A
  const auto op = TabulatedOperator({"a"}, {0, 1});
  const auto rep = represent(op);
  for (WorldSet x : rep.choice.domain()) CHECK(rep.choice.apply(x) == x);
}

TEST_CASE("excluding the inconsistent theory drops the full-language world") {
  // C(∅) = ∅, C({a}) = {a}: both theories, {a} = L is the inconsistent one
  const auto op = TabulatedOperator({"a"}, {0, 1});
  CHECK(represent(op).universe->world_count() == 2);
  const auto rep = represent(op, true);
  CHECK(rep.universe->world_count() == 1);
  CHECK(rep.universe->world_name(0) == "{}");
}

TEST_CASE("intersection agrees with pointwise table intersection") {
  const auto op = nonmonotone_pair_operator();
  const auto twin = nonmonotone_pair_twin();

  CHECK(tabulate(intersect({op}).op()) == op);

  const auto both = intersect({op, twin});
  const auto tab = tabulate(both.op());
  CHECK(tab == intersect_tables({op, twin}));
  CHECK(tab.close(0) == 0);  // C(∅) ∩ C'(∅) = {a} ∩ {b}
  for (auto p : kFive) CHECK(check_postulate(tab, p).holds);
}

TEST_CASE("semantic closure and entailment on the ranked-birds fixture") {
  const auto op = birds_operator();
  const auto u = op.universe();
  CHECK(op.entails(std::vector<Formula>{parse("b")}, parse("f")));
  CHECK_FALSE(op.entails(std::vector<Formula>{parse("b"), parse("~f")}, parse("f")));
  CHECK(op.entails(std::vector<Formula>{parse("b"), parse("~f")}, parse("b & ~f")));

  // shifting by the background ~f retracts f
  const auto shifted = with_background(op, u->mod(parse("~f")));
  CHECK_FALSE(shifted.entails(std::vector<Formula>{parse("b")}, parse("f")));

  for (auto p : kFive) CHECK(check_postulate(op, p).holds);
  CHECK_FALSE(check_postulate(op, Postulate::Monotonicity).holds);
  CHECK(check_postulate(op, Postulate::RationalMonotonicity).holds);
}

TEST_CASE("identity choice gives classical entailment") {
  const auto u = Universe::propositional({"p", "q"});
  const SemanticOperator op{identity_choice(u)};
  for (WorldSet x = 0; x < u->subset_count(); ++x) {
    const std::vector<Formula> premises = {u->characteristic_formula(x)};
    for (WorldSet c = 0; c < u->subset_count(); ++c)
      CHECK(op.entails(premises, u->characteristic_formula(c)) == ((x & ~c) == 0));
  }
  for (auto p : kFive) CHECK(check_postulate(op, p).holds);
  CHECK(check_postulate(op, Postulate::Monotonicity).holds);
}

TEST_CASE("soundness: every CCLM function yields a five-postulate operator") {
  // abstract route (exact tabulation) at |M| = 2 and propositional route
  // (class quantification) at n = 1
  for (const auto& f : enumerate_cclm(Universe::full_abstract(2)))
    CHECK(passes_five_postulates(SemanticOperator{f}));
  for (const auto& f : enumerate_cclm(Universe::propositional({"p"})))
    CHECK(passes_five_postulates(SemanticOperator{f}));
}

TEST_CASE("rational monotonicity is arrow, in both operator modes") {
  for (const auto& f : enumerate_cclm(Universe::full_abstract(2))) {
    const bool arrow = check_choice_property(f, ChoiceProperty::Arrow).holds;
    CHECK(check_postulate(SemanticOperator{f}, Postulate::RationalMonotonicity).holds == arrow);
  }
  for (const auto& f : enumerate_cclm(Universe::propositional({"p"}))) {
    const bool arrow = check_choice_property(f, ChoiceProperty::Arrow).holds;
    CHECK(check_postulate(SemanticOperator{f}, Postulate::RationalMonotonicity).holds == arrow);
  }
}

TEST_CASE("absorption and the conditional-threshold consequence") {
  const auto u = Universe::propositional({"p", "q"});
  for (const auto& f : {identity_choice(u), from_rank(u, {1, 2, 1, 0}),
                        from_rank(u, {0, 0, 1, 1})}) {
    const SemanticOperator op{f};
    for (WorldSet x = 0; x < u->subset_count(); ++x) {
      // right absorption C(Cn(A)) = C(A): Cn(A) has the same models as A
      CHECK(op.close_models(op.cn_models(x)) == op.close_models(x));
      // left absorption Cn(C(A)) = C(A): closing adds no models
      CHECK(u->closure(op.close_models(x)) == op.close_models(x));
      // C(A ∪ B) ⊆ Cn(C(A) ∪ B), as model-set containment
      for (WorldSet y = 0; y < u->subset_count(); ++y)
        CHECK(((op.close_models(x) & y) & ~u->closure(op.close_models(x & y))) == 0);
    }
  }
}

TEST_CASE("postulate verdicts carry usable witnesses") {
  // f empty on the full set but identity below it fails cautious
  // monotonicity as an operator: C(true) = L but C(p) stays consistent
  const auto u = Universe::propositional({"p"});
  const ChoiceFunction f(u, {0, 0b01, 0b10, 0});
  const SemanticOperator op{f};
  const auto v = check_postulate(op, Postulate::Idempotence);
  if (!v.holds) CHECK(v.witness.size() == 1);
  bool some_failure = false;
  for (auto p : kFive) some_failure = some_failure || !check_postulate(op, p).holds;
  CHECK(some_failure);
}
