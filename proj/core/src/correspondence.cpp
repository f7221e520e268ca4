#include "ratinf/correspondence.hpp"

#include <map>

#include "ratinf/dnf.hpp"

namespace ratinf {

namespace {

// Class-mask view of the context-relative entailment.
struct MaskOps {
  std::uint32_t world;  // all valuations
  std::uint32_t ctx;

  std::uint32_t neg(std::uint32_t x) const { return world & ~x; }
  std::uint32_t imp(std::uint32_t a, std::uint32_t b) const { return neg(a) | b; }
  bool ent(std::uint32_t a, std::uint32_t b) const { return (ctx & a & ~b) == 0; }
  bool valid(std::uint32_t a) const { return (ctx & ~a) == 0; }
};

MaskOps ops_for(const InferenceRelation& rel) {
  std::uint32_t world = (rel.env().valuation_count() >= 32)
                            ? ~std::uint32_t{0}
                            : (std::uint32_t{1} << rel.env().valuation_count()) - 1;
  return MaskOps{world, rel.ctx().models.to_mask()};
}

int rule_arity(RuleId rule) {
  switch (rule) {
    case RuleId::consistency_preservation: return 1;
    case RuleId::supraclassicality:
    case RuleId::bot_and:
    case RuleId::and_bot:
    case RuleId::or_bot: return 2;
    default: return 3;
  }
}

// Premises hold and the conclusion fails, for one class tuple.
bool violates(const InferenceRelation& r, const MaskOps& o, RuleId rule, std::uint32_t a,
              std::uint32_t b, std::uint32_t c) {
  switch (rule) {
    case RuleId::supraclassicality:
      return o.ent(a, b) && !r.holds_mask(a, b);
    case RuleId::left_logical_equivalence:
      return r.holds_mask(a, c) && o.ent(a, b) && o.ent(b, a) && !r.holds_mask(b, c);
    case RuleId::right_weakening:
      return r.holds_mask(a, b) && o.valid(o.imp(b, c)) && !r.holds_mask(a, c);
    case RuleId::and_rule:
      return r.holds_mask(a, b) && r.holds_mask(a, c) && !r.holds_mask(a, b & c);
    case RuleId::cut:
      return r.holds_mask(a, b) && r.holds_mask(a & b, c) && !r.holds_mask(a, c);
    case RuleId::cautious_monotonicity:
      return r.holds_mask(a, b) && r.holds_mask(a, c) && !r.holds_mask(a & b, c);
    case RuleId::or_rule:
      return r.holds_mask(a, c) && r.holds_mask(b, c) && !r.holds_mask(a | b, c);
    case RuleId::rational_monotonicity:
      return !r.holds_mask(a, o.neg(b)) && r.holds_mask(a, c) && !r.holds_mask(a & b, c);
    case RuleId::consistency_preservation:
      return r.holds_mask(a, 0) && !o.ent(a, 0);
    case RuleId::reciprocity:
      return r.holds_mask(a, b) && r.holds_mask(b, a) && r.holds_mask(a, c) &&
             !r.holds_mask(b, c);
    case RuleId::s_rule:
      return r.holds_mask(a & b, c) && !r.holds_mask(a, o.imp(b, c));
    case RuleId::bot_and:
      return r.holds_mask(a, 0) && !r.holds_mask(a & b, 0);
    case RuleId::and_bot:
      return r.holds_mask(a & b, 0) && !r.holds_mask(a, o.neg(b));
    case RuleId::or_bot:
      return r.holds_mask(a | b, 0) && !r.holds_mask(a, 0);
  }
  return false;
}

}  // namespace

std::string rule_name(RuleId rule) {
  switch (rule) {
    case RuleId::supraclassicality: return "Supraclassicality";
    case RuleId::left_logical_equivalence: return "LeftLogicalEquivalence";
    case RuleId::right_weakening: return "RightWeakening";
    case RuleId::and_rule: return "And";
    case RuleId::cut: return "Cut";
    case RuleId::cautious_monotonicity: return "CautiousMonotonicity";
    case RuleId::or_rule: return "Or";
    case RuleId::rational_monotonicity: return "RationalMonotonicity";
    case RuleId::consistency_preservation: return "ConsistencyPreservation";
    case RuleId::reciprocity: return "Reciprocity";
    case RuleId::s_rule: return "S";
    case RuleId::bot_and: return "BotAnd";
    case RuleId::and_bot: return "AndBot";
    case RuleId::or_bot: return "OrBot";
  }
  return "?";
}

const std::vector<RuleId>& rational_rules() {
  static const std::vector<RuleId> rules = {
      RuleId::supraclassicality,      RuleId::left_logical_equivalence,
      RuleId::right_weakening,        RuleId::and_rule,
      RuleId::cut,                    RuleId::cautious_monotonicity,
      RuleId::or_rule,                RuleId::rational_monotonicity,
  };
  return rules;
}

const std::vector<RuleId>& derived_rules() {
  static const std::vector<RuleId> rules = {
      RuleId::reciprocity, RuleId::s_rule, RuleId::bot_and, RuleId::and_bot, RuleId::or_bot,
  };
  return rules;
}

std::vector<Counterexample> check_postulate(const InferenceRelation& rel, RuleId rule) {
  const MaskOps ops = ops_for(rel);
  const std::uint32_t n = static_cast<std::uint32_t>(rel.classes());
  const int arity = rule_arity(rule);

  Counterexample ce{rule, {}, 0};
  for (std::uint32_t a = 0; a < n; ++a) {
    if (arity == 1) {
      if (violates(rel, ops, rule, a, 0, 0)) {
        if (ce.total == 0) ce.witnesses = {a};
        ++ce.total;
      }
      continue;
    }
    for (std::uint32_t b = 0; b < n; ++b) {
      if (arity == 2) {
        if (violates(rel, ops, rule, a, b, 0)) {
          if (ce.total == 0) ce.witnesses = {a, b};
          ++ce.total;
        }
        continue;
      }
      for (std::uint32_t c = 0; c < n; ++c) {
        if (violates(rel, ops, rule, a, b, c)) {
          if (ce.total == 0) ce.witnesses = {a, b, c};
          ++ce.total;
        }
      }
    }
  }

  if (ce.total == 0) return {};
  return {ce};
}

std::vector<Counterexample> check_derived_rules(const InferenceRelation& rel) {
  std::vector<Counterexample> out;
  for (RuleId rule : derived_rules()) {
    auto found = check_postulate(rel, rule);
    out.insert(out.end(), found.begin(), found.end());
  }
  return out;
}

std::string render_counterexamples(const std::vector<Counterexample>& list, const AtomEnv& env) {
  std::string out;
  for (const auto& ce : list) {
    out += rule_name(ce.rule);
    for (std::uint32_t w : ce.witnesses) {
      out += '\t';
      out += dnf_string(ModelSet::from_mask(env.valuation_count(), w), env);
    }
    out += '\n';
  }
  return out;
}

RelationClass classify_relation(const InferenceRelation& rel) {
  auto group_holds = [&](std::initializer_list<RuleId> rules) {
    for (RuleId rule : rules)
      if (!check_postulate(rel, rule).empty()) return false;
    return true;
  };

  RelationClass flags;
  flags.inference = group_holds({RuleId::supraclassicality, RuleId::left_logical_equivalence,
                                 RuleId::right_weakening, RuleId::and_rule});
  flags.preferential = flags.inference && group_holds({RuleId::cut, RuleId::cautious_monotonicity,
                                                       RuleId::or_rule});
  flags.rational = flags.preferential && group_holds({RuleId::rational_monotonicity});
  flags.expectation = flags.rational && group_holds({RuleId::consistency_preservation});
  return flags;
}

Context shift_context(const InferenceRelation& rel) {
  const std::uint32_t n = static_cast<std::uint32_t>(rel.classes());
  std::uint32_t falsity_antecedents = 0;
  for (std::uint32_t a = 0; a < n; ++a)
    if (rel.holds_mask(a, 0)) falsity_antecedents |= a;
  const MaskOps ops = ops_for(rel);
  return Context{
      ModelSet::from_mask(rel.env().valuation_count(), ops.neg(falsity_antecedents))};
}

InferenceRelation relation_from_ordering(const RationalOrdering& ord, const Context& ctx,
                                         ConditionVariant variant) {
  if (!validate_rational(ord).ok())
    throw ValidationError("relation_from_ordering requires a valid rational ordering");

  InferenceRelation rel(ord.env, ctx);
  const MaskOps ops = ops_for(rel);
  const std::uint32_t n = static_cast<std::uint32_t>(rel.classes());
  const int top = ord.max_level();
  const std::uint32_t non_ctx = ops.neg(ops.ctx);

  for (std::uint32_t a = 0; a < n; ++a) {
    const int level_not_a = ord.level_of_mask(ops.neg(a));
    const bool everything_below = (level_not_a == top);
    for (std::uint32_t c = 0; c < n; ++c) {
      bool yes;
      // The witness beta of the existential can always be taken to be the
      // implication class itself, by Dominance.
      const int level_imp = ord.level_of_mask(non_ctx | ops.imp(a, c));
      if (variant == ConditionVariant::bold)
        yes = everything_below || level_not_a < level_imp;
      else
        yes = ops.ent(a, c) || level_not_a < level_imp;
      if (yes) rel.set_mask(a, c);
    }
  }
  return rel;
}

RationalOrdering ordering_from_relation(const InferenceRelation& rel, ConditionVariant variant) {
  const MaskOps ops = ops_for(rel);
  const std::uint32_t n = static_cast<std::uint32_t>(rel.classes());

  auto leq = [&](std::uint32_t a, std::uint32_t b) {
    const std::uint32_t not_both = ops.neg(a & b);
    if (variant == ConditionVariant::bold)
      return rel.holds_mask(not_both, 0) || !rel.holds_mask(not_both, a);
    return ops.valid(a & b) || !rel.holds_mask(not_both, a);
  };

  // Rank classes by the size of their down-sets, then verify the candidate
  // level map reproduces the comparison; any mismatch means the comparison
  // was not a total preorder.
  std::vector<int> down(n, 0);
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b)
      if (leq(b, a)) ++down[a];

  std::map<int, int> dense;
  for (int d : down) dense.emplace(d, 0);
  int next = 0;
  for (auto& [_, rank] : dense) rank = next++;

  std::vector<int> levels(n);
  for (std::uint32_t a = 0; a < n; ++a) levels[a] = dense.at(down[a]);

  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b)
      if (leq(a, b) != (levels[a] <= levels[b]))
        throw PreorderError("induced comparison is not a total preorder", a, b);

  return RationalOrdering(rel.env(), std::move(levels));
}

}  // namespace ratinf
