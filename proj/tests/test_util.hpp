#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "ratinf/defaults.hpp"
#include "ratinf/dnf.hpp"
#include "ratinf/ranked.hpp"

namespace testutil {

inline ratinf::AtomEnv env1() { return ratinf::AtomEnv({"a"}); }
inline ratinf::AtomEnv env2() { return ratinf::AtomEnv({"a", "b"}); }
inline ratinf::AtomEnv env3() { return ratinf::AtomEnv({"a", "b", "c"}); }

inline ratinf::Formula parse(const std::string& text, const ratinf::AtomEnv& env) {
  return ratinf::parse_formula(text, env);
}

inline std::uint32_t mask_of(const std::string& text, const ratinf::AtomEnv& env) {
  return ratinf::models_of(parse(text, env), env).to_mask();
}

inline ratinf::Theory theory_of(const std::vector<std::string>& axioms,
                                const ratinf::AtomEnv& env) {
  ratinf::Theory t{ratinf::ModelSet::all(env.valuation_count()), {}};
  for (const auto& text : axioms) {
    ratinf::Formula f = parse(text, env);
    t.models = t.models & ratinf::models_of(f, env);
    t.origin.push_back(f);
  }
  return t;
}

inline ratinf::RankedChain chain_of(const std::vector<std::vector<std::string>>& theories,
                                    const ratinf::AtomEnv& env) {
  std::vector<ratinf::Theory> ts;
  for (const auto& axioms : theories) ts.push_back(theory_of(axioms, env));
  return ratinf::RankedChain(env, std::move(ts));
}

inline ratinf::Formula random_formula(std::mt19937_64& rng, const ratinf::AtomEnv& env,
                                      int depth) {
  std::uniform_int_distribution<int> pick(0, depth > 0 ? 5 : 1);
  switch (pick(rng)) {
    case 0: {
      std::uniform_int_distribution<int> atom(0, env.atom_count() - 1);
      return ratinf::Formula::atom(atom(rng));
    }
    case 1: {
      std::uniform_int_distribution<int> constant(0, 1);
      return constant(rng) ? ratinf::Formula::top() : ratinf::Formula::bot();
    }
    case 2:
      return ratinf::Formula::negation(random_formula(rng, env, depth - 1));
    case 3:
      return ratinf::Formula::conjunction(random_formula(rng, env, depth - 1),
                                          random_formula(rng, env, depth - 1));
    case 4:
      return ratinf::Formula::disjunction(random_formula(rng, env, depth - 1),
                                          random_formula(rng, env, depth - 1));
    default:
      return ratinf::Formula::implication(random_formula(rng, env, depth - 1),
                                          random_formula(rng, env, depth - 1));
  }
}

/// Every strictly decreasing sequence of nonempty valuation sets over env,
/// i.e. every canonical chain; 149 of them at two atoms.
inline void for_each_strict_chain(const ratinf::AtomEnv& env,
                                  const std::function<void(const ratinf::RankedChain&)>& fn) {
  const std::uint32_t world = (std::uint32_t{1} << env.valuation_count()) - 1;

  std::vector<std::uint32_t> stack;
  std::function<void()> emit = [&] {
    std::vector<ratinf::Theory> theories;
    for (std::uint32_t mask : stack) {
      ratinf::ModelSet models = ratinf::ModelSet::from_mask(env.valuation_count(), mask);
      theories.push_back(ratinf::Theory{models, {ratinf::dnf_formula(models, env)}});
    }
    fn(ratinf::RankedChain(env, std::move(theories)));
  };
  std::function<void(std::uint32_t)> extend = [&](std::uint32_t current) {
    stack.push_back(current);
    emit();
    // proper nonempty subsets of current
    for (std::uint32_t sub = (current - 1) & current; sub != 0; sub = (sub - 1) & current) {
      extend(sub);
    }
    stack.pop_back();
  };
  for (std::uint32_t start = 1; start <= world; ++start) extend(start);
}

inline ratinf::DefaultBase worked_base() {
  return ratinf::parse_base_text(
      "atoms: a b c\n"
      "[level 1]\n"
      "a -> b\n"
      "[level 2]\n"
      "!b\n"
      "[level 3]\n"
      "b -> c\n");
}

inline ratinf::DefaultBase random_base(std::mt19937_64& rng, const ratinf::AtomEnv& env,
                                       int max_levels) {
  std::uniform_int_distribution<int> level_count(1, max_levels);
  std::uniform_int_distribution<int> formulas_per_level(1, 2);
  std::vector<std::vector<ratinf::Formula>> levels;
  int m = level_count(rng);
  for (int i = 0; i < m; ++i) {
    std::vector<ratinf::Formula> level;
    int k = formulas_per_level(rng);
    for (int j = 0; j < k; ++j) level.push_back(random_formula(rng, env, 3));
    levels.push_back(std::move(level));
  }
  return ratinf::DefaultBase(env, std::move(levels));
}

}  // namespace testutil
