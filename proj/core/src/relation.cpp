#include "ratinf/relation.hpp"

namespace ratinf {

InferenceRelation::InferenceRelation(AtomEnv env, Context ctx)
    : env_(std::move(env)), ctx_(std::move(ctx)), classes_(class_count(env_)) {
  std::size_t cells = static_cast<std::size_t>(classes_) * static_cast<std::size_t>(classes_);
  bits_.assign((cells + 63) / 64, 0);
}

void InferenceRelation::set_mask(std::uint32_t antecedent, std::uint32_t consequent, bool value) {
  std::size_t idx =
      static_cast<std::size_t>(antecedent) * static_cast<std::size_t>(classes_) + consequent;
  std::uint64_t bit = std::uint64_t{1} << (idx & 63);
  if (value)
    bits_[idx >> 6] |= bit;
  else
    bits_[idx >> 6] &= ~bit;
}

InferenceRelation InferenceRelation::with_context(Context ctx) const {
  InferenceRelation copy = *this;
  copy.ctx_ = std::move(ctx);
  return copy;
}

}  // namespace ratinf
