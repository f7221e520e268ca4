#include "ratinf/dnf.hpp"

#include <vector>

namespace ratinf {

namespace {

// A cube fixes some atoms (care bit set) to the values given by the value bits.
struct Cube {
  int care;   // bitmask over atom positions, bit k = atom k is fixed
  int value;  // truth values for the fixed atoms, in atom positions
};

int atom_bit(const AtomEnv& env, int atom) { return 1 << (env.atom_count() - 1 - atom); }

bool cube_covers(const Cube& c, int valuation) {
  return (valuation & c.care) == (c.value & c.care);
}

bool cube_inside(const Cube& c, const ModelSet& models, const AtomEnv& env) {
  for (int v = 0; v < env.valuation_count(); ++v)
    if (cube_covers(c, v) && !models.test(v)) return false;
  return true;
}

// Grow a cube around the seed valuation by dropping atoms while it stays
// inside the set. Atom order makes the result deterministic.
Cube maximal_cube(int seed, const ModelSet& models, const AtomEnv& env) {
  Cube cube{(1 << env.atom_count()) - 1, seed};
  for (int a = 0; a < env.atom_count(); ++a) {
    Cube widened = cube;
    widened.care &= ~atom_bit(env, a);
    if (cube_inside(widened, models, env)) cube = widened;
  }
  return cube;
}

}  // namespace

Formula dnf_formula(const ModelSet& models, const AtomEnv& env) {
  if (models.none_set()) return Formula::bot();
  const int valuations = env.valuation_count();

  std::vector<Cube> cubes;
  std::vector<bool> covered(static_cast<std::size_t>(valuations), false);
  for (int v = 0; v < valuations; ++v) {
    if (!models.test(v) || covered[static_cast<std::size_t>(v)]) continue;
    Cube cube = maximal_cube(v, models, env);
    cubes.push_back(cube);
    for (int u = 0; u < valuations; ++u)
      if (cube_covers(cube, u)) covered[static_cast<std::size_t>(u)] = true;
  }

  // Drop cubes whose valuations are all covered by the others.
  for (std::size_t i = cubes.size(); i-- > 0;) {
    bool redundant = true;
    for (int v = 0; v < valuations && redundant; ++v) {
      if (!cube_covers(cubes[i], v)) continue;
      bool elsewhere = false;
      for (std::size_t j = 0; j < cubes.size() && !elsewhere; ++j)
        if (j != i && cube_covers(cubes[j], v)) elsewhere = true;
      if (!elsewhere) redundant = false;
    }
    if (redundant) cubes.erase(cubes.begin() + static_cast<std::ptrdiff_t>(i));
  }

  if (cubes.size() == 1 && cubes[0].care == 0) return Formula::top();

  Formula result = Formula::bot();
  bool first = true;
  for (const Cube& cube : cubes) {
    Formula term = Formula::top();
    bool term_first = true;
    for (int a = 0; a < env.atom_count(); ++a) {
      if (!(cube.care & atom_bit(env, a))) continue;
      Formula lit = (cube.value & atom_bit(env, a)) ? Formula::atom(a)
                                                    : Formula::negation(Formula::atom(a));
      term = term_first ? lit : Formula::conjunction(std::move(term), std::move(lit));
      term_first = false;
    }
    if (term_first) term = Formula::top();
    result = first ? term : Formula::disjunction(std::move(result), std::move(term));
    first = false;
  }
  return result;
}

std::string dnf_string(const ModelSet& models, const AtomEnv& env) {
  return dnf_formula(models, env).to_string(env);
}

}  // namespace ratinf
