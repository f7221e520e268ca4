#include <doctest.h>

#include "ratinf/correspondence.hpp"
#include "ratinf/ranked.hpp"
#include "test_util.hpp"

using namespace ratinf;
using testutil::env1;
using testutil::env2;
using testutil::parse;

namespace {

RationalOrdering fixture_ordering() { return RationalOrdering(env1(), {0, 0, 1, 2}); }

InferenceRelation classical_relation(const AtomEnv& env) {
  RankedChain chain(env, {testutil::theory_of({}, env)});
  return relation_from_chain(chain, Context::full(env));
}

}  // namespace

TEST_CASE("bold translation of the fixture ordering") {
  AtomEnv env = env1();
  InferenceRelation rel =
      relation_from_ordering(fixture_ordering(), Context::full(env), ConditionVariant::bold);
  CHECK(rel.holds(parse("true", env), parse("a", env)));
  CHECK(rel.holds(parse("false", env), parse("a", env)));
  CHECK(rel.holds(parse("a", env), parse("a", env)));
  CHECK_FALSE(rel.holds(parse("true", env), parse("!a", env)));
}

TEST_CASE("translation rejects an invalid ordering") {
  AtomEnv env = env1();
  RationalOrdering bad(env, {0, 1, 1, 2});
  CHECK_THROWS_AS(relation_from_ordering(bad, Context::full(env), ConditionVariant::bold),
                  ValidationError);
}

TEST_CASE("ordering induced by the classical relation") {
  RationalOrdering ord = ordering_from_relation(classical_relation(env1()),
                                                ConditionVariant::bold);
  CHECK(ord.levels == std::vector<int>{0, 0, 0, 1});
}

TEST_CASE("round trip through the relation recovers the fixture ordering") {
  AtomEnv env = env1();
  InferenceRelation rel =
      relation_from_ordering(fixture_ordering(), Context::full(env), ConditionVariant::bold);
  CHECK(ordering_from_relation(rel, ConditionVariant::bold) == fixture_ordering());
}

TEST_CASE("both round trips are the identity, exhaustively at n=2") {
  AtomEnv env = env2();
  Context full = Context::full(env);
  testutil::for_each_strict_chain(env, [&](const RankedChain& chain) {
    InferenceRelation rel = relation_from_chain(chain, full);
    RationalOrdering ord = ordering_from_chain(chain);

    RationalOrdering induced = ordering_from_relation(rel, ConditionVariant::bold);
    CHECK(relation_from_ordering(induced, full, ConditionVariant::bold).same_matrix(rel));

    InferenceRelation from_ord = relation_from_ordering(ord, full, ConditionVariant::bold);
    CHECK(ordering_from_relation(from_ord, ConditionVariant::bold) == ord.normalized());
  });
}

TEST_CASE("every chain relation satisfies the full rule set, exhaustively at n<=2") {
  for (const AtomEnv& env : {env1(), env2()}) {
    Context full = Context::full(env);
    int chains = 0;
    testutil::for_each_strict_chain(env, [&](const RankedChain& chain) {
      ++chains;
      InferenceRelation rel = relation_from_chain(chain, full);
      for (RuleId rule : rational_rules()) CHECK(check_postulate(rel, rule).empty());
      CHECK(check_derived_rules(rel).empty());
      // the induced ordering translates back to the same relation
      CHECK(relation_from_ordering(ordering_from_chain(chain), full, ConditionVariant::bold)
                .same_matrix(rel));
    });
    CHECK(chains == (env.atom_count() == 1 ? 5 : 149));
  }
}

TEST_CASE("the legacy maps round-trip expectation relations") {
  AtomEnv env = env2();
  Context full = Context::full(env);
  // grounding the chain in the empty theory forces consistency preservation
  testutil::for_each_strict_chain(env, [&](const RankedChain& chain) {
    if (!(chain.theory(0).models == ModelSet::all(4))) return;
    InferenceRelation rel = relation_from_chain(chain, full);
    RationalOrdering ord = ordering_from_relation(rel, ConditionVariant::gm);
    CHECK(validate_rational(ord).ok());
    CHECK(relation_from_ordering(ord, full, ConditionVariant::gm).same_matrix(rel));
  });
}

TEST_CASE("single-entry corruption is caught by the rules iff it leaves the rational class") {
  AtomEnv env = env1();
  RankedChain chain = testutil::chain_of({{}, {"a"}}, env);
  InferenceRelation rel = relation_from_chain(chain, Context::full(env));

  int preorder_errors = 0;
  int undetected = 0;
  for (std::uint32_t a = 0; a < 4; ++a) {
    for (std::uint32_t b = 0; b < 4; ++b) {
      InferenceRelation corrupted = rel;
      corrupted.set_mask(a, b, !corrupted.holds_mask(a, b));

      bool rule_broken = false;
      for (RuleId rule : rational_rules())
        if (!check_postulate(corrupted, rule).empty()) rule_broken = true;

      bool translation_broken = false;
      try {
        RationalOrdering ord = ordering_from_relation(corrupted, ConditionVariant::bold);
        translation_broken =
            !validate_rational(ord).ok() ||
            !relation_from_ordering(ord, Context::full(env), ConditionVariant::bold)
                 .same_matrix(corrupted);
      } catch (const PreorderError&) {
        translation_broken = true;
        ++preorder_errors;
      }
      // The round trip is the identity exactly on rational relations, so the
      // two detectors must agree.
      CHECK(rule_broken == translation_broken);
      if (!rule_broken) {
        ++undetected;
        // the one undetectable flip lands on the classical relation
        CHECK(a == testutil::mask_of("true", env));
        CHECK(b == testutil::mask_of("a", env));
      }
    }
  }
  CHECK(undetected == 1);
  CHECK(preorder_errors > 0);
}

TEST_CASE("counterexamples carry the first witness and a total count") {
  AtomEnv env = env1();
  InferenceRelation rel = classical_relation(env);
  rel.set_mask(3, 3, false);  // drop true |~ true
  auto ces = check_postulate(rel, RuleId::supraclassicality);
  REQUIRE(ces.size() == 1);
  CHECK(ces[0].rule == RuleId::supraclassicality);
  CHECK(ces[0].witnesses == std::vector<std::uint32_t>{3, 3});
  CHECK(ces[0].total == 1);
  std::string line = render_counterexamples(ces, env);
  CHECK(line == "Supraclassicality\ttrue\ttrue\n");
}

TEST_CASE("the classical relation satisfies all postulates and derived rules") {
  InferenceRelation rel = classical_relation(env1());
  for (RuleId rule : rational_rules()) CHECK(check_postulate(rel, rule).empty());
  CHECK(check_postulate(rel, RuleId::consistency_preservation).empty());
  CHECK(check_derived_rules(rel).empty());
}

TEST_CASE("derived rules break when the falsity row is corrupted") {
  InferenceRelation rel = classical_relation(env1());
  rel.set_mask(3, 0, true);  // plant true |~ false
  CHECK_FALSE(check_derived_rules(rel).empty());
  CHECK_FALSE(check_postulate(rel, RuleId::consistency_preservation).empty());
}

TEST_CASE("context shift absorbs hard constraints") {
  AtomEnv env = env2();
  Context full = Context::full(env);
  RankedChain chain = testutil::chain_of({{"!b"}, {"!b", "a"}}, env);
  InferenceRelation rel = relation_from_chain(chain, full);

  // the classes inferring falsity are exactly those entailing b
  for (std::uint32_t c = 0; c < 16; ++c)
    CHECK(rel.holds_mask(c, 0) == ((c & ~testutil::mask_of("b", env)) == 0));

  Context shifted = shift_context(rel);
  CHECK(shifted.models.to_mask() == testutil::mask_of("!b", env));

  CHECK_FALSE(check_postulate(rel, RuleId::consistency_preservation).empty());
  InferenceRelation rejudged = rel.with_context(shifted);
  CHECK(check_postulate(rejudged, RuleId::consistency_preservation).empty());
}

TEST_CASE("context shift of a consistency-preserving relation is the full context") {
  InferenceRelation rel = classical_relation(env1());
  CHECK(shift_context(rel).models == ModelSet::all(2));
}

TEST_CASE("classification by rule groups") {
  AtomEnv env2_ = env2();
  RelationClass classical = classify_relation(classical_relation(env1()));
  CHECK(classical.inference);
  CHECK(classical.preferential);
  CHECK(classical.rational);
  CHECK(classical.expectation);

  RankedChain chain = testutil::chain_of({{"!b"}, {"!b", "a"}}, env2_);
  InferenceRelation rel = relation_from_chain(chain, Context::full(env2_));
  RelationClass flags = classify_relation(rel);
  CHECK(flags.rational);
  CHECK_FALSE(flags.expectation);

  RelationClass shifted = classify_relation(rel.with_context(shift_context(rel)));
  CHECK(shifted.rational);
  CHECK(shifted.expectation);
}
