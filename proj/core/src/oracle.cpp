#include "ratinf/oracle.hpp"

#include "ratinf/dnf.hpp"

namespace ratinf {

namespace {

// splitmix64; stable across platforms, unlike std::mt19937 distributions.
struct Rng {
  std::uint64_t state;
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  std::uint32_t below(std::uint32_t n) { return static_cast<std::uint32_t>(next() % n); }
};

}  // namespace

RankedChain random_chain(const AtomEnv& env, int depth, std::uint64_t seed, ChainBottom bottom) {
  if (depth < 1) throw ValidationError("chain depth must be at least 1");
  const int valuations = env.valuation_count();
  Rng rng{seed};

  std::uint32_t world = (std::uint32_t{1} << valuations) - 1;
  std::uint32_t current = 0;
  switch (bottom) {
    case ChainBottom::full_theory:
      current = world;
      break;
    case ChainBottom::proper_nontrivial:
      if (valuations < 2)
        throw ValidationError("proper nontrivial bottom needs at least two valuations");
      do {
        current = rng.below(world + 1);
      } while (current == 0 || current == world);
      break;
    case ChainBottom::any:
      do {
        current = rng.below(world + 1);
      } while (current == 0);
      break;
  }

  std::vector<Theory> theories;
  for (int i = 0; i < depth; ++i) {
    if (i > 0) {
      std::uint32_t removal = static_cast<std::uint32_t>(rng.next()) & current;
      std::uint32_t next = current & ~removal;
      if (next == 0) {
        // keep one surviving valuation so every theory stays consistent
        std::uint32_t pick = rng.below(static_cast<std::uint32_t>(__builtin_popcount(current)));
        for (int v = 0; v < valuations; ++v)
          if (current & (1u << v)) {
            if (pick == 0) {
              next = 1u << v;
              break;
            }
            --pick;
          }
      }
      current = next;
    }
    ModelSet models = ModelSet::from_mask(valuations, current);
    theories.push_back(Theory{models, {dnf_formula(models, env)}});
  }
  return RankedChain(env, std::move(theories));
}

InferenceRelation brute_relation_from_ordering(const RationalOrdering& ord, const Context& ctx) {
  if (ord.env.atom_count() > 2)
    throw LimitError("brute-force evaluation is limited to 2 atoms");
  if (!validate_rational(ord).ok())
    throw ValidationError("brute_relation_from_ordering requires a valid rational ordering");

  InferenceRelation rel(ord.env, ctx);
  const std::uint32_t n = static_cast<std::uint32_t>(rel.classes());
  const std::uint32_t world = (std::uint32_t{1} << ord.env.valuation_count()) - 1;
  const std::uint32_t ctx_mask = ctx.models.to_mask();
  const int top = ord.max_level();

  for (std::uint32_t a = 0; a < n; ++a) {
    const std::uint32_t not_a = world & ~a;
    for (std::uint32_t c = 0; c < n; ++c) {
      bool yes = ord.level_of_mask(not_a) == top;  // beta <= !a for every class beta
      for (std::uint32_t beta = 0; beta < n && !yes; ++beta) {
        bool premise_proves = (ctx_mask & a & beta & ~c) == 0;
        bool strictly_above = ord.level_of_mask(not_a) < ord.level_of_mask(beta);
        yes = premise_proves && strictly_above;
      }
      if (yes) rel.set_mask(a, c);
    }
  }
  return rel;
}

std::string VerifyReport::to_text() const {
  std::string out;
  for (const auto& f : failures) {
    out += std::to_string(f.trial);
    out += '\t';
    out += std::to_string(f.seed);
    out += '\t';
    out += f.check;
    out += '\t';
    out += f.witness;
    out += '\n';
  }
  return out;
}

namespace {

std::uint64_t trial_seed(std::uint64_t master, int trial) {
  Rng rng{master ^ (0x51ed2701u + static_cast<std::uint64_t>(trial) * 0x9e3779b9ull)};
  return rng.next();
}

void check_gm_fixture(const AtomEnv& env, VerifyReport& report) {
  auto [first, second] = gm_example_fixture(env);
  Context full = Context::full(env);
  bool distinct = !(first.normalized() == second.normalized());
  bool both_valid = validate_rational(first).ok() && validate_rational(second).ok();
  bool same_relation =
      relation_from_ordering(first, full, ConditionVariant::gm)
          .same_matrix(relation_from_ordering(second, full, ConditionVariant::gm));
  if (!(distinct && both_valid && same_relation))
    report.failures.push_back({-1, 0, "gm-fixture", "legacy-map non-injectivity not reproduced"});
}

VerifyReport run_trials(const AtomEnv& env, int trials, std::uint64_t master,
                        const VerifyOptions& options, bool rules_too) {
  VerifyReport report;
  report.trials = trials;
  if (rules_too) check_gm_fixture(env, report);

  const Context full = Context::full(env);
  const int max_depth = env.valuation_count() + 1;

  for (int trial = 0; trial < trials; ++trial) {
    std::uint64_t seed = trial_seed(master, trial);
    Rng rng{seed};
    int depth = 1 + static_cast<int>(rng.below(static_cast<std::uint32_t>(max_depth)));
    RankedChain chain = random_chain(env, depth, seed);
    InferenceRelation rel = relation_from_chain(chain, full);

    if (options.inject_fault && trial == 0) {
      std::uint32_t a = rng.below(static_cast<std::uint32_t>(rel.classes()));
      std::uint32_t b = rng.below(static_cast<std::uint32_t>(rel.classes()));
      rel.set_mask(a, b, !rel.holds_mask(a, b));
    }

    auto record = [&](const std::string& check, const std::string& witness) {
      report.failures.push_back({trial, seed, check, witness});
    };

    if (rules_too) {
      for (RuleId rule : rational_rules()) {
        auto ces = check_postulate(rel, rule);
        if (!ces.empty())
          record("rule:" + rule_name(rule), render_counterexamples(ces, env));
      }
      auto derived = check_derived_rules(rel);
      if (!derived.empty()) record("derived-rules", render_counterexamples(derived, env));
    }

    // relation -> ordering -> relation
    try {
      RationalOrdering induced = ordering_from_relation(rel, ConditionVariant::bold);
      if (!validate_rational(induced).ok())
        record("ordering-validity", "induced ordering failed validation");
      InferenceRelation back = relation_from_ordering(induced, full, ConditionVariant::bold);
      if (!back.same_matrix(rel)) record("relation-round-trip", "C(O(rel)) differs from rel");
    } catch (const Error& e) {
      record("relation-round-trip", e.what());
    }

    // ordering -> relation -> ordering
    RationalOrdering ord = ordering_from_chain(chain);
    try {
      InferenceRelation from_ord = relation_from_ordering(ord, full, ConditionVariant::bold);
      RationalOrdering back = ordering_from_relation(from_ord, ConditionVariant::bold);
      if (!(back.normalized() == ord.normalized()))
        record("ordering-round-trip", "O(C(ord)) differs from ord");
    } catch (const Error& e) {
      record("ordering-round-trip", e.what());
    }
  }
  return report;
}

}  // namespace

VerifyReport verify_theorems(const AtomEnv& env, int trials, std::uint64_t seed,
                             const VerifyOptions& options) {
  return run_trials(env, trials, seed, options, /*rules_too=*/true);
}

VerifyReport verify_round_trips(const AtomEnv& env, int trials, std::uint64_t seed) {
  return run_trials(env, trials, seed, {}, /*rules_too=*/false);
}

std::pair<RationalOrdering, RationalOrdering> gm_example_fixture(const AtomEnv& env) {
  const int bits = env.valuation_count();
  Formula a = Formula::atom(0);
  ModelSet a_models = models_of(a, env);

  RankedChain two_step(env, {Theory{ModelSet::all(bits), {Formula::top()}},
                             Theory{a_models, {a}}});
  RankedChain one_step(env, {Theory{a_models, {a}}});
  return {ordering_from_chain(two_step), ordering_from_chain(one_step)};
}

}  // namespace ratinf
