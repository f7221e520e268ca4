#include "ratinf/ranked.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "ratinf/dnf.hpp"

namespace ratinf {

RankedChain::RankedChain(AtomEnv env, std::vector<Theory> theories)
    : env_(std::move(env)), theories_(std::move(theories)) {
  if (theories_.empty()) throw ValidationError("a ranked chain needs at least one theory");
  for (std::size_t i = 0; i + 1 < theories_.size(); ++i)
    if (!theories_[i + 1].models.is_subset_of(theories_[i].models))
      throw ValidationError("chain theories must be increasing (model sets weakly decreasing)");
  bool some_consistent =
      std::any_of(theories_.begin(), theories_.end(), [](const Theory& t) { return t.consistent(); });
  if (!some_consistent)
    throw ValidationError("every theory in the chain is inconsistent; the induced relation "
                          "would violate Supraclassicality");
}

namespace {

// First index whose ctx-restricted theory is inconsistent; the ctx-consistent
// members form a prefix because model sets weakly decrease along the chain.
int consistent_prefix(const RankedChain& chain, const Context& ctx) {
  int p = 0;
  while (p < chain.size() && (ctx.models & chain.theory(p).models).any_set()) ++p;
  return p;
}

}  // namespace

bool chain_query(const RankedChain& chain, const Context& ctx, const ModelSet& antecedent,
                 const ModelSet& consequent) {
  const int prefix = consistent_prefix(chain, ctx);
  if (prefix == 0)
    throw ValidationError("no theory of the chain is consistent with the context");

  // Some level consistent with the antecedent proves the implication.
  for (int i = 0; i < chain.size(); ++i) {
    ModelSet restricted = ctx.models & chain.theory(i).models & antecedent;
    if (restricted.any_set() && restricted.is_subset_of(consequent)) return true;
  }
  // Every consistent level proves the negated antecedent; by the prefix
  // property this reduces to the weakest member.
  return (ctx.models & chain.theory(0).models & antecedent).none_set();
}

InferenceRelation relation_from_chain(const RankedChain& chain, const Context& ctx) {
  InferenceRelation rel(chain.env(), ctx);
  const int prefix = consistent_prefix(chain, ctx);
  if (prefix == 0)
    throw ValidationError("no theory of the chain is consistent with the context");

  const std::uint32_t n = static_cast<std::uint32_t>(rel.classes());
  std::vector<std::uint32_t> level_models;
  for (int i = 0; i < chain.size(); ++i)
    level_models.push_back((ctx.models & chain.theory(i).models).to_mask());

  for (std::uint32_t a = 0; a < n; ++a) {
    if ((level_models[0] & a) == 0) {
      // hard antecedent: every consistent level proves !a
      for (std::uint32_t b = 0; b < n; ++b) rel.set_mask(a, b);
      continue;
    }
    for (std::uint32_t b = 0; b < n; ++b) {
      for (std::uint32_t lm : level_models) {
        std::uint32_t restricted = lm & a;
        if (restricted != 0 && (restricted & ~b) == 0) {
          rel.set_mask(a, b);
          break;
        }
      }
    }
  }
  return rel;
}

namespace {

// Least chain index entailing the class, or chain.size() if none does.
std::vector<int> entailment_thresholds(const RankedChain& chain) {
  const std::uint32_t n = static_cast<std::uint32_t>(class_count(chain.env()));
  std::vector<std::uint32_t> theory_masks;
  for (const Theory& t : chain.theories()) theory_masks.push_back(t.models.to_mask());

  std::vector<int> t(n, chain.size());
  for (std::uint32_t c = 0; c < n; ++c)
    for (int i = 0; i < chain.size(); ++i)
      if ((theory_masks[static_cast<std::size_t>(i)] & ~c) == 0) {
        t[c] = i;
        break;
      }
  return t;
}

}  // namespace

RationalOrdering ordering_from_chain(const RankedChain& chain) {
  std::vector<int> thresholds = entailment_thresholds(chain);
  // A later threshold means entailed by fewer members, i.e. expected less.
  std::map<int, int> dense;
  for (int t : thresholds) dense.emplace(t, 0);
  int next = static_cast<int>(dense.size());
  for (auto& [_, level] : dense) level = --next;

  std::vector<int> levels(thresholds.size());
  for (std::size_t c = 0; c < thresholds.size(); ++c) levels[c] = dense.at(thresholds[c]);
  return RationalOrdering(chain.env(), std::move(levels));
}

RankedChain chain_from_ordering(const RationalOrdering& ord) {
  if (!validate_rational(ord).ok())
    throw ValidationError("chain_from_ordering requires a valid rational ordering");

  const AtomEnv& env = ord.env;
  const int bits = env.valuation_count();
  const int top = ord.max_level();

  std::vector<Theory> theories;
  for (int level = top; level >= 1; --level) {
    ModelSet intersection = ModelSet::all(bits);
    for (std::uint32_t c = 0; c < ord.levels.size(); ++c)
      if (ord.level_of_mask(c) >= level)
        intersection = intersection & ModelSet::from_mask(bits, c);
    theories.push_back(Theory{intersection, {dnf_formula(intersection, env)}});
  }
  if (theories.empty()) {
    ModelSet full = ModelSet::all(bits);
    theories.push_back(Theory{full, {dnf_formula(full, env)}});
  }
  return RankedChain(env, std::move(theories));
}

RankedChain complete_chain(const RankedChain& chain) {
  // Unions and intersections of subfamilies of a finite chain are the
  // subfamily maxima and minima; the constructor re-checks the invariant.
  return RankedChain(chain.env(), chain.theories());
}

AssertionRank assertion_rank(const RankedChain& chain, const Formula& antecedent,
                             const Formula& consequent, const Context& ctx) {
  const ModelSet a = models_of(antecedent, chain.env());
  const ModelSet b = models_of(consequent, chain.env());
  if (!chain_query(chain, ctx, a, b))
    throw NotAConsequenceError("the assertion does not hold in the chain");

  if ((ctx.models & chain.theory(0).models & a).none_set())
    return AssertionRank{0, 0, chain.size() - 1, true};

  AssertionRank result;
  bool found = false;
  for (int i = 0; i < chain.size(); ++i) {
    ModelSet restricted = ctx.models & chain.theory(i).models & a;
    bool fires = restricted.any_set() && restricted.is_subset_of(b);
    if (fires && !found) {
      result.rank = result.lo = result.hi = i;
      found = true;
    } else if (fires) {
      result.hi = i;
    }
  }
  return result;
}

SyntacticChain::SyntacticChain(AtomEnv env, std::vector<std::vector<Formula>> sets)
    : env_(std::move(env)), sets_(std::move(sets)) {
  if (sets_.empty()) throw ValidationError("a syntactic chain needs at least one set");
  for (std::size_t i = 0; i + 1 < sets_.size(); ++i)
    for (const Formula& f : sets_[i])
      if (std::find(sets_[i + 1].begin(), sets_[i + 1].end(), f) == sets_[i + 1].end())
        throw ValidationError("syntactic chain sets must be increasing as literal formula sets");
}

bool SyntacticChain::contains(int i, const Formula& f) const {
  const auto& set = sets_[static_cast<std::size_t>(i)];
  return std::find(set.begin(), set.end(), f) != set.end();
}

bool SyntacticChain::holds(const Formula& antecedent, const Formula& consequent) const {
  const Formula negated = Formula::negation(antecedent);
  const Formula implication = Formula::implication(antecedent, consequent);
  bool negated_everywhere = true;
  for (int i = 0; i < size(); ++i) {
    bool has_negation = contains(i, negated);
    if (!has_negation && contains(i, implication)) return true;
    negated_everywhere = negated_everywhere && has_negation;
  }
  return negated_everywhere;
}

InferenceRelation relation_from_syntactic_chain(const SyntacticChain& chain, const AtomEnv& env) {
  InferenceRelation rel(env, Context::full(env));
  const std::uint32_t n = static_cast<std::uint32_t>(rel.classes());
  std::vector<Formula> representative;
  for (std::uint32_t c = 0; c < n; ++c)
    representative.push_back(dnf_formula(ModelSet::from_mask(env.valuation_count(), c), env));

  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b)
      if (chain.holds(representative[a], representative[b])) rel.set_mask(a, b);
  return rel;
}

RankedChain parse_chain_literal(const std::string& text, const AtomEnv& env) {
  std::istringstream in(text);
  std::string line;
  bool header_seen = false;
  std::vector<Theory> theories;
  while (std::getline(in, line)) {
    std::string trimmed = line;
    trimmed.erase(0, trimmed.find_first_not_of(" \t\r"));
    trimmed.erase(trimmed.find_last_not_of(" \t\r") + 1);
    if (trimmed.empty()) continue;
    if (!header_seen) {
      if (trimmed != "chain:") throw ParseError("expected 'chain:' header", 0);
      header_seen = true;
      continue;
    }
    Theory t{ModelSet::all(env.valuation_count()), {}};
    std::size_t pos = 0;
    while (pos <= trimmed.size()) {
      std::size_t comma = trimmed.find(',', pos);
      std::string axiom = trimmed.substr(pos, comma == std::string::npos ? comma : comma - pos);
      axiom.erase(0, axiom.find_first_not_of(" \t"));
      axiom.erase(axiom.find_last_not_of(" \t") + 1);
      if (!axiom.empty()) {
        Formula f = parse_formula(axiom, env);
        t.models = t.models & models_of(f, env);
        t.origin.push_back(std::move(f));
      }
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    theories.push_back(std::move(t));
  }
  if (!header_seen) throw ParseError("expected 'chain:' header", 0);
  return RankedChain(env, std::move(theories));
}

}  // namespace ratinf
