#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ratinf/logic.hpp"

namespace ratinf {

enum class Cmp { lt, eq, gt };

/// Total preorder of formulas as a level map over semantic classes;
/// a larger level means the class is expected more. Stored extensionally over
/// the 2^(2^n) classes of the environment, which is what makes equality of
/// orderings decidable. Requires an exhaustive-scale environment (n <= 3).
///
/// A valid level map satisfies
///   Dominance:        models(a) subset of models(b)  =>  level(a) <= level(b)
///   Conjunctiveness:  level(a & b) = min(level(a), level(b))
/// Transitivity and connectivity hold automatically for any numeric map.
struct RationalOrdering {
  AtomEnv env;
  std::vector<int> levels;  // indexed by class mask

  RationalOrdering(AtomEnv env, std::vector<int> levels);

  int level_of_mask(std::uint32_t mask) const {
    return levels[static_cast<std::size_t>(mask)];
  }
  int level_of(const Formula& f) const {
    return level_of_mask(models_of(f, env).to_mask());
  }
  int max_level() const;

  /// Relabels levels to a dense 0..k with every level nonempty. Ordering
  /// equality is level-map equality after normalization.
  RationalOrdering normalized() const;

  bool operator==(const RationalOrdering&) const = default;
};

struct OrderingViolation {
  std::string property;                 // "Dominance" or "Conjunctiveness"
  std::vector<std::uint32_t> witnesses;  // class masks
};

struct OrderingReport {
  std::vector<OrderingViolation> violations;
  bool ok() const { return violations.empty(); }
};

/// Reports every Dominance and Conjunctiveness violation with witnesses.
OrderingReport validate_rational(const RationalOrdering& ord);

/// Level comparison; logically equivalent formulas compare eq.
Cmp compare(const RationalOrdering& ord, const Formula& a, const Formula& b);

/// True iff every class at the maximum level is valid under the context.
bool is_expectation(const RationalOrdering& ord, const Context& ctx);

/// One line per level, descending: `level k: <representatives>` in minimal DNF.
std::string dump_levels(const RationalOrdering& ord);

}  // namespace ratinf
