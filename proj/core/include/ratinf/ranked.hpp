#pragma once

#include <string>
#include <vector>

#include "ratinf/ordering.hpp"
#include "ratinf/relation.hpp"

namespace ratinf {

/// An inclusion chain of theories B0 <= B1 <= ... (model sets weakly
/// decreasing). At least one member must be consistent: a chain of nothing but
/// inconsistent theories would induce the empty relation, which breaks
/// Supraclassicality. Inconsistent members are tolerated; the consequence
/// operator skips them.
class RankedChain {
 public:
  RankedChain(AtomEnv env, std::vector<Theory> theories);

  const AtomEnv& env() const { return env_; }
  int size() const { return static_cast<int>(theories_.size()); }
  const Theory& theory(int i) const { return theories_[static_cast<std::size_t>(i)]; }
  const std::vector<Theory>& theories() const { return theories_; }

 private:
  AtomEnv env_;
  std::vector<Theory> theories_;
};

/// Point query of the consequence operator induced by the chain:
/// a |~ b iff some level consistent with a proves a -> b, or every consistent
/// level proves !a. All entailments are relative to ctx.
/// Throws ValidationError when no member is ctx-consistent.
bool chain_query(const RankedChain& chain, const Context& ctx, const ModelSet& antecedent,
                 const ModelSet& consequent);

/// The full consequence matrix of the chain (n <= 3).
InferenceRelation relation_from_chain(const RankedChain& chain, const Context& ctx);

/// Ordering induced by the chain: a <= b iff every member proving a proves b.
/// Always passes validate_rational, and its bold translation reproduces the
/// chain's consequence matrix.
RationalOrdering ordering_from_chain(const RankedChain& chain);

/// Reconstructs a canonical chain from the upward closures of the ordering's
/// levels, top level first and omitting the level-0 closure (which is the
/// inconsistent set of all formulas). A single-level ordering maps to the
/// chain holding only the empty theory.
RankedChain chain_from_ordering(const RationalOrdering& ord);

/// Closure of a finite chain under arbitrary unions and intersections: every
/// subfamily's union and intersection is already its max and min element, so
/// this verifies the inclusion invariant and returns an identical chain. The
/// closure is only contentful for infinite chains.
RankedChain complete_chain(const RankedChain& chain);

/// Least index at which a |~ b fires, plus the interval of indices where it
/// keeps firing. The degenerate case (every consistent level proves !a) is
/// ranked 0 with the full index range.
struct AssertionRank {
  int rank = 0;
  int lo = 0;
  int hi = 0;
  bool degenerate = false;
};

/// Throws NotAConsequenceError when a |~ b does not hold in the chain.
AssertionRank assertion_rank(const RankedChain& chain, const Formula& antecedent,
                             const Formula& consequent, const Context& ctx);

/// Upward chain of explicit finite formula sets; membership is syntactic
/// (structural equality on ASTs), not closed under entailment.
class SyntacticChain {
 public:
  SyntacticChain(AtomEnv env, std::vector<std::vector<Formula>> sets);

  const AtomEnv& env() const { return env_; }
  int size() const { return static_cast<int>(sets_.size()); }
  const std::vector<Formula>& set(int i) const { return sets_[static_cast<std::size_t>(i)]; }

  /// Literal membership-based evaluation on the given ASTs:
  /// a |~ b iff some set lacks !a and contains a -> b, or every set contains !a.
  bool holds(const Formula& antecedent, const Formula& consequent) const;

 private:
  bool contains(int i, const Formula& f) const;

  AtomEnv env_;
  std::vector<std::vector<Formula>> sets_;
};

/// Lift of the syntactic operator to classes for storage: each matrix entry is
/// the literal evaluation on the minimal-DNF representatives of the two
/// classes. Membership itself is not class-invariant, so point queries on
/// other ASTs should go through SyntacticChain::holds.
InferenceRelation relation_from_syntactic_chain(const SyntacticChain& chain, const AtomEnv& env);

/// Parses the chain literal format: a `chain:` header line, then one theory
/// per line as a comma-separated axiom list, lowest theory first.
RankedChain parse_chain_literal(const std::string& text, const AtomEnv& env);

}  // namespace ratinf
