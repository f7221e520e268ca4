#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ratinf/correspondence.hpp"
#include "ratinf/ranked.hpp"

namespace ratinf {

/// How the weakest theory of a generated chain is constrained.
enum class ChainBottom {
  any,               // any nonempty model set
  full_theory,       // the empty theory (all valuations) — forces expectation
  proper_nontrivial  // consistent but not the empty theory — forces a hard constraint
};

/// Deterministic random chain: a weakly decreasing sequence of nonempty model
/// sets, each step removing a random subset of the previous one. The same
/// (env, depth, seed) always yields the same chain.
RankedChain random_chain(const AtomEnv& env, int depth, std::uint64_t seed,
                         ChainBottom bottom = ChainBottom::any);

/// Literal evaluation of the bold ordering-to-relation condition, quantifying
/// the witness formula over every class with no level-test shortcut. Oracle
/// for relation_from_ordering; capped at 2 atoms because the cost is cubic in
/// the class count.
InferenceRelation brute_relation_from_ordering(const RationalOrdering& ord, const Context& ctx);

struct VerifyFailure {
  int trial = 0;
  std::uint64_t seed = 0;
  std::string check;
  std::string witness;
};

struct VerifyReport {
  int trials = 0;
  std::vector<VerifyFailure> failures;

  bool ok() const { return failures.empty(); }
  /// One line per failure: trial<TAB>seed<TAB>check<TAB>witness.
  std::string to_text() const;
};

struct VerifyOptions {
  /// Flip one matrix entry of the first trial's relation before checking;
  /// lets tests confirm the checker reports planted faults.
  bool inject_fault = false;
};

/// Runs, for `trials` random chains: the eight rational rules, both
/// translation round trips, the five derived rules, and (once) the
/// non-injectivity fixture of the legacy maps. Report-based; never throws on
/// check failures.
VerifyReport verify_theorems(const AtomEnv& env, int trials, std::uint64_t seed,
                             const VerifyOptions& options = {});

/// Round-trip checks only, for `trials` random chains.
VerifyReport verify_round_trips(const AtomEnv& env, int trials, std::uint64_t seed);

/// The pair of orderings induced by the chains [empty theory, Cn({a})] and
/// [Cn({a})]: unequal, both rational, yet the legacy translation maps them to
/// the same relation.
std::pair<RationalOrdering, RationalOrdering> gm_example_fixture(const AtomEnv& env);

}  // namespace ratinf
