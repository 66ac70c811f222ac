#include <doctest.h>

#include <vector>

#include "nmc/choice.hpp"
#include "nmc/connectives.hpp"
#include "nmc/consequence.hpp"
#include "nmc/universe.hpp"

using namespace nmc;

namespace {

const std::vector<ConnectiveRule> kAllRules = {
    ConnectiveRule::AndBothSides, ConnectiveRule::NegLeftIntro, ConnectiveRule::NegLeftElim,
    ConnectiveRule::OrLeftIntro, ConnectiveRule::OrRightIntro, ConnectiveRule::ImpRightIntro,
    ConnectiveRule::ImpLeftIntro};

std::vector<SemanticOperator> fixture_operators() {
  const auto u = Universe::propositional({"p", "q"});
  std::vector<SemanticOperator> out;
  out.push_back(SemanticOperator{identity_choice(u)});
  out.push_back(SemanticOperator{from_rank(u, {1, 2, 1, 0})});
  out.push_back(SemanticOperator{from_rank(u, {0, 1, 2, 3})});
  out.push_back(SemanticOperator{from_rank(u, {0, 0, 1, 1})});
  out.push_back(SemanticOperator{from_order(u, {{0, 3}, {1, 3}, {2, 3}})});
  out.push_back(
      SemanticOperator{from_order_family(u, {{{0, 1}, {0, 2}}, {{3, 1}, {3, 2}}})});
  return out;
}

}  // namespace

TEST_CASE("every fixture operator passes all seven rules") {
  for (const auto& op : fixture_operators())
    for (auto r : kAllRules) {
      const auto v = check_rule(op, r);
      CHECK(v.holds);
    }
}

TEST_CASE("rules are exhaustive over the one-atom CCLM enumeration") {
  for (const auto& f : enumerate_cclm(Universe::propositional({"p"})))
    for (auto r : kAllRules) CHECK(check_rule(SemanticOperator{f}, r).holds);
}

TEST_CASE("sampled rule checking matches the exhaustive verdicts") {
  const auto op = fixture_operators()[1];
  for (auto r : kAllRules)
    CHECK(check_rule_sampled(op, r, 500, 42).holds == check_rule(op, r).holds);
}

TEST_CASE("rule checking rejects non-propositional operators") {
  const SemanticOperator op{identity_choice(Universe::full_abstract(2))};
  CHECK_THROWS_AS(check_rule(op, ConnectiveRule::AndBothSides), std::invalid_argument);
}

TEST_CASE("consistency") {
  const auto u = Universe::propositional({"p", "q"});
  const SemanticOperator op{identity_choice(u)};
  CHECK_FALSE(is_consistent(op, std::vector<Formula>{parse("p"), parse("~p")}));
  CHECK(is_consistent(op, std::vector<Formula>{}));
  CHECK(is_consistent(op, std::vector<Formula>{parse("p & q")}));

  // tabulated: the full premise set always closes to the whole language
  const auto tab = nonmonotone_pair_operator();
  for (SentenceSet a = 0; a < tab.subset_count() - 1; ++a) CHECK(is_consistent(tab, a));
  CHECK_FALSE(is_consistent(tab, tab.subset_count() - 1));
}

TEST_CASE("maximal consistent extensions are the consistent worlds") {
  const auto u = Universe::propositional({"p", "q"});
  const SemanticOperator op{identity_choice(u)};
  CHECK(maximal_consistent_extensions(op, std::vector<Formula>{}).size() == 4);
  const auto exts = maximal_consistent_extensions(op, std::vector<Formula>{parse("p")});
  REQUIRE(exts.size() == 2);
  for (const auto& t : exts) CHECK(t.contains(parse("p")));
  CHECK_THROWS_AS(maximal_consistent_extensions(op, std::vector<Formula>{parse("false")}),
                  std::invalid_argument);

  // a world judged inconsistent by the operator is not an extension
  const auto rank = SemanticOperator{ChoiceFunction(
      u, {0b0000, 0b0001, 0b0010, 0b0011, 0b0100, 0b0101, 0b0110, 0b0111, 0b0000, 0b0001,
          0b0010, 0b0011, 0b0100, 0b0101, 0b0110, 0b0111})};  // f drops w3 everywhere
  CHECK(maximal_consistent_extensions(rank, std::vector<Formula>{}).size() == 3);
}

TEST_CASE("maximal consistent sets satisfy the membership clauses") {
  const auto u = Universe::propositional({"p", "q"});
  const SemanticOperator op{from_rank(u, {1, 2, 1, 0})};
  for (const auto& t : maximal_consistent_extensions(op, std::vector<Formula>{})) {
    for (WorldSet ca = 0; ca < u->subset_count(); ++ca)
      for (WorldSet cb = 0; cb < u->subset_count(); ++cb) {
        const Formula a = u->characteristic_formula(ca), b = u->characteristic_formula(cb);
        CHECK(t.contains(Formula::conj(a, b)) == (t.contains(a) && t.contains(b)));
        CHECK(t.contains(Formula::negate(a)) == !t.contains(a));
        CHECK(t.contains(Formula::disj(a, b)) == (t.contains(a) || t.contains(b)));
        CHECK(t.contains(Formula::implies(a, b)) == (!t.contains(a) || t.contains(b)));
      }
  }
}

TEST_CASE("classical representation round-trips the choice function") {
  for (const auto& op : fixture_operators()) {
    const auto& u = *op.universe();
    const auto rep = represent_classical(op);
    CHECK(is_cclm(rep.choice));

    std::vector<std::size_t> kept;
    for (std::size_t w = 0; w < u.world_count(); ++w)
      if (op.f.apply(WorldSet{1} << w) != 0) kept.push_back(w);
    CHECK(rep.universe->world_count() == kept.size());

    auto compress = [&](WorldSet x) {
      WorldSet out = 0;
      for (std::size_t i = 0; i < kept.size(); ++i)
        if ((x >> kept[i]) & 1) out |= WorldSet{1} << i;
      return out;
    };
    for (WorldSet x = 0; x < u.subset_count(); ++x) {
      CHECK((op.f.apply(x) & ~u.closure(x)) == 0);
      if (compress(x) < rep.universe->subset_count())
        CHECK(rep.choice.apply(compress(x)) == compress(op.f.apply(x)));
    }

    // satisfaction in the rebuilt universe respects the connective clauses:
    // sentence index c is the class with model set c
    for (std::size_t w = 0; w < rep.universe->world_count(); ++w)
      for (WorldSet ca = 0; ca < u.subset_count(); ++ca)
        for (WorldSet cb = 0; cb < u.subset_count(); ++cb) {
          const bool sa = rep.universe->satisfies(w, ca), sb = rep.universe->satisfies(w, cb);
          CHECK(rep.universe->satisfies(w, ca & cb) == (sa && sb));
          CHECK(rep.universe->satisfies(w, u.all_worlds() & ~ca) == !sa);
          CHECK(rep.universe->satisfies(w, ca | cb) == (sa || sb));
        }
  }
}

TEST_CASE("classical representation drops inconsistent worlds") {
  // f(X) = X ∩ {w0} is CCLM and judges w1 inconsistent
  const auto u = Universe::propositional({"p"});
  const SemanticOperator op{ChoiceFunction(u, {0b00, 0b01, 0b00, 0b01})};
  REQUIRE(is_cclm(op.f));
  const auto rep = represent_classical(op);
  CHECK(rep.universe->world_count() == 1);
  CHECK(rep.universe->world_name(0) == "p=0");
}

TEST_CASE("five-way equivalence on singleton premises, over the fixture family") {
  const auto family = fixture_operators();
  const auto u = family.front().universe();
  for (WorldSet ca = 0; ca < u->subset_count(); ++ca)
    for (WorldSet cb = 0; cb < u->subset_count(); ++cb) {
      const Formula a = u->characteristic_formula(ca), b = u->characteristic_formula(cb);
      const bool classical = (ca & ~cb) == 0;
      bool all_entail = true, all_explode = true;
      for (const auto& op : family) {
        if (!op.entails(std::vector<Formula>{a}, b)) all_entail = false;
        if (op.f.apply(ca & (u->all_worlds() & ~cb)) != 0) all_explode = false;
      }
      CHECK(classical == all_entail);
      CHECK(classical == all_explode);  // C({a, ~b}) = L for every operator
    }
}

TEST_CASE("conservative extension restricts exactly to the base operator") {
  for (SentenceSet t0 = 0; t0 < 4; ++t0)
    for (SentenceSet t1 = 0; t1 < 4; ++t1)
      for (SentenceSet t2 = 0; t2 < 4; ++t2)
        for (SentenceSet t3 = 0; t3 < 4; ++t3) {
          const TabulatedOperator op({"a", "b"}, {t0, t1, t2, t3});
          if (!passes_five_postulates(op)) continue;
          const auto ext = conservative_extension(op);
          CHECK(is_cclm(ext.f));
          CHECK(passes_five_postulates(ext));
          for (SentenceSet a = 0; a < op.subset_count(); ++a) {
            std::vector<Formula> prem;
            for (const auto& s : op.names_of(a)) prem.push_back(Formula::atom(s));
            for (std::size_t s = 0; s < op.language().size(); ++s)
              CHECK(ext.entails(prem, Formula::atom(op.language()[s])) == op.entails(a, s));
          }
        }
}
