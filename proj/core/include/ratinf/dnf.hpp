#pragma once

#include <string>

#include "ratinf/logic.hpp"

namespace ratinf {

/// Minimal-DNF representative of a model set: a greedy prime-implicant cover,
/// pruned to an irredundant disjunction of conjunctions of literals.
/// The full set renders as `true`, the empty set as `false`.
/// Deterministic for a given set, so it is safe to pin in fixtures.
Formula dnf_formula(const ModelSet& models, const AtomEnv& env);

/// Same cover rendered in the textual grammar.
std::string dnf_string(const ModelSet& models, const AtomEnv& env);

}  // namespace ratinf
