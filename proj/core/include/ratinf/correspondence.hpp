#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ratinf/ordering.hpp"
#include "ratinf/relation.hpp"

namespace ratinf {

/// The postulates of preferential, rational and expectation inference, plus
/// the five rules derivable in any preferential relation.
enum class RuleId {
  supraclassicality,
  left_logical_equivalence,
  right_weakening,
  and_rule,
  cut,
  cautious_monotonicity,
  or_rule,
  rational_monotonicity,
  consistency_preservation,
  // derived
  reciprocity,
  s_rule,
  bot_and,
  and_bot,
  or_bot,
};

std::string rule_name(RuleId rule);

/// The eight rules of rational inference, in checking order.
const std::vector<RuleId>& rational_rules();
/// The five derived rules.
const std::vector<RuleId>& derived_rules();

/// First rule violation found in deterministic class order, with the total
/// number of violating tuples; re-evaluating the rule on the witnesses
/// reproduces the violation.
struct Counterexample {
  RuleId rule;
  std::vector<std::uint32_t> witnesses;  // class masks instantiating the premises
  long total = 0;
};

/// Checks one rule over all quantified class tuples, with the entailment in
/// rule premises judged against rel.ctx(). Empty iff the rule holds.
/// Quantifying over semantic classes rather than raw formulas is sound here:
/// every rule is invariant under replacing formulas by classical equivalents
/// given that the relation is class-defined.
std::vector<Counterexample> check_postulate(const InferenceRelation& rel, RuleId rule);

/// Checks the five derived rules.
std::vector<Counterexample> check_derived_rules(const InferenceRelation& rel);

/// Machine-readable report: one `rule<TAB>witness...` line per counterexample,
/// witnesses rendered in minimal DNF.
std::string render_counterexamples(const std::vector<Counterexample>& list, const AtomEnv& env);

struct RelationClass {
  bool inference = false;
  bool preferential = false;
  bool rational = false;
  bool expectation = false;
};

/// Classifies rel by the rule groups, evaluated against rel.ctx().
RelationClass classify_relation(const InferenceRelation& rel);

/// Context whose models are the complement of the union of all classes with
/// c |~ false. Judging the same matrix against this stronger entailment makes
/// every rational relation an expectation relation: hard constraints are
/// absorbed into the underlying entailment.
Context shift_context(const InferenceRelation& rel);

/// Which reading of the ordering <-> relation translations to use: this
/// library's own conditions, or the legacy Gardenfors-Makinson ones. The
/// legacy maps are not injective on orderings.
enum class ConditionVariant { bold, gm };

/// Ordering -> relation. For the bold variant: a |~ c iff the class of !a sits
/// at the maximum level, or level(!a) < level(a -> c). The level test is
/// equivalent to the existential over all classes, by Dominance; the brute
/// oracle in oracle.hpp evaluates the existential directly.
/// Throws ValidationError if the ordering fails validate_rational.
InferenceRelation relation_from_ordering(const RationalOrdering& ord, const Context& ctx,
                                         ConditionVariant variant);

/// Relation -> ordering: a <= b iff !(a & b) |~ false or not !(a & b) |~ a
/// (bold), returned as a normalized level map. If the induced comparison is
/// not a total preorder (the input was not rational), throws PreorderError
/// with a witness pair.
RationalOrdering ordering_from_relation(const InferenceRelation& rel, ConditionVariant variant);

}  // namespace ratinf
