#pragma once

#include <cstdint>
#include <vector>

#include "ratinf/logic.hpp"

namespace ratinf {

/// A nonmonotonic consequence relation |~ as a boolean matrix over semantic
/// classes, paired with the context its underlying entailment is judged
/// against. Because the representation is already a quotient by classical
/// equivalence, Left Logical Equivalence w.r.t. classical equivalence is
/// structural. Requires an exhaustive-scale environment (n <= 3).
class InferenceRelation {
 public:
  InferenceRelation(AtomEnv env, Context ctx);

  const AtomEnv& env() const { return env_; }
  const Context& ctx() const { return ctx_; }
  int classes() const { return classes_; }

  bool holds_mask(std::uint32_t antecedent, std::uint32_t consequent) const {
    std::size_t idx = static_cast<std::size_t>(antecedent) * static_cast<std::size_t>(classes_) +
                      consequent;
    return (bits_[idx >> 6] >> (idx & 63)) & 1;
  }
  void set_mask(std::uint32_t antecedent, std::uint32_t consequent, bool value = true);

  bool holds(const Formula& antecedent, const Formula& consequent) const {
    return holds_mask(models_of(antecedent, env_).to_mask(),
                      models_of(consequent, env_).to_mask());
  }

  /// Same matrix re-judged against a different underlying entailment.
  InferenceRelation with_context(Context ctx) const;

  bool same_matrix(const InferenceRelation& other) const { return bits_ == other.bits_; }
  bool operator==(const InferenceRelation&) const = default;

 private:
  AtomEnv env_;
  Context ctx_;
  int classes_;
  std::vector<std::uint64_t> bits_;
};

}  // namespace ratinf
