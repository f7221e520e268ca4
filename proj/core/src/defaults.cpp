#include "ratinf/defaults.hpp"

#include <algorithm>
#include <istream>
#include <sstream>

#include "ratinf/dnf.hpp"

namespace ratinf {

DefaultBase::DefaultBase(AtomEnv env, std::vector<std::vector<Formula>> levels, int max_levels)
    : env_(std::move(env)), levels_(std::move(levels)) {
  if (levels_.empty()) throw ValidationError("a default base needs at least one level");
  if (static_cast<int>(levels_.size()) > max_levels)
    throw ValidationError("default base exceeds the configured cap of " +
                          std::to_string(max_levels) + " levels");
  for (const auto& level : levels_) {
    ModelSet models = ModelSet::all(env_.valuation_count());
    for (const Formula& f : level) models = models & models_of(f, env_);
    level_models_.push_back(std::move(models));
  }
}

namespace {

// Priority index 1 is the most significant digit of the mirrored order, so
// ascending numeric value of the reversed mask is exactly ascending mirrored
// order. The literal reading is its reverse.
std::uint32_t mirrored_weight(SubsetKey key, int m) {
  std::uint32_t w = 0;
  for (int i = 1; i <= m; ++i)
    if (key & (1u << (i - 1))) w |= 1u << (m - i);
  return w;
}

}  // namespace

Cmp compare_subsets(SubsetKey k, SubsetKey l, int level_count, SubsetOrder order) {
  if (k == 0 || l == 0) throw ValidationError("subset keys must be nonempty");
  if (k == l) return Cmp::eq;
  std::uint32_t wk = mirrored_weight(k, level_count);
  std::uint32_t wl = mirrored_weight(l, level_count);
  bool less = (order == SubsetOrder::mirrored) ? wk < wl : wk > wl;
  return less ? Cmp::lt : Cmp::gt;
}

std::vector<SubsetKey> subset_keys_ascending(int level_count, SubsetOrder order) {
  std::vector<SubsetKey> keys;
  for (SubsetKey key = 1; key < (1u << level_count); ++key) keys.push_back(key);
  std::sort(keys.begin(), keys.end(), [&](SubsetKey a, SubsetKey b) {
    return compare_subsets(a, b, level_count, order) == Cmp::lt;
  });
  return keys;
}

std::string subset_to_string(SubsetKey key, int level_count) {
  std::string out = "{";
  bool first = true;
  for (int i = 1; i <= level_count; ++i) {
    if (!(key & (1u << (i - 1)))) continue;
    if (!first) out += ",";
    out += std::to_string(i);
    first = false;
  }
  return out + "}";
}

Theory subset_theory(const DefaultBase& base, SubsetKey key, SubsetOrder order) {
  const int m = base.level_count();
  ModelSet result = ModelSet::none(base.env().valuation_count());
  for (SubsetKey l = 1; l < (1u << m); ++l) {
    if (compare_subsets(key, l, m, order) == Cmp::gt) continue;
    ModelSet inter = ModelSet::all(base.env().valuation_count());
    for (int i = 1; i <= m; ++i)
      if (l & (1u << (i - 1))) inter = inter & base.level_models(i - 1);
    result = result | inter;
  }
  return Theory{result, {dnf_formula(result, base.env())}};
}

namespace {

// Theories walked by the extension machinery, without the input and without
// the empty-theory prefix: cumulative priority prefixes for strict,
// cumulative A_K unions in subset order for liberal.
std::vector<ModelSet> extension_steps(const DefaultBase& base, ExtensionMode mode,
                                      SubsetOrder order) {
  std::vector<ModelSet> steps;
  ModelSet acc = ModelSet::all(base.env().valuation_count());
  if (mode == ExtensionMode::strict) {
    for (int i = 0; i < base.level_count(); ++i) {
      acc = acc & base.level_models(i);
      steps.push_back(acc);
    }
  } else {
    for (SubsetKey key : subset_keys_ascending(base.level_count(), order)) {
      acc = acc & subset_theory(base, key, order).models;
      steps.push_back(acc);
    }
  }
  return steps;
}

Extension extension_along(const std::vector<ModelSet>& steps, const ModelSet& input,
                          const AtomEnv& env) {
  ModelSet best = input;
  bool any_level = false;
  bool prefix_over = false;
  for (const ModelSet& step : steps) {
    ModelSet candidate = input & step;
    if (candidate.any_set()) {
      // consistent steps must form a prefix
      if (prefix_over)
        throw ValidationError("consistent extension steps are not downward closed");
      best = candidate;
      any_level = true;
    } else {
      prefix_over = true;
    }
  }
  if (any_level) return Extension{Theory{best, {dnf_formula(best, env)}}, false};
  // No level could be applied: fall back to the consequences of the input
  // alone, inconsistent when the input itself is.
  return Extension{Theory{input, {dnf_formula(input, env)}}, true};
}

}  // namespace

Extension strict_extension(const DefaultBase& base, const Formula& input) {
  return extension_along(extension_steps(base, ExtensionMode::strict, SubsetOrder::mirrored),
                         models_of(input, base.env()), base.env());
}

Extension liberal_extension(const DefaultBase& base, const Formula& input, SubsetOrder order) {
  return extension_along(extension_steps(base, ExtensionMode::liberal, order),
                         models_of(input, base.env()), base.env());
}

Extension extension(const DefaultBase& base, ExtensionMode mode, const Formula& input,
                    SubsetOrder order) {
  return mode == ExtensionMode::strict ? strict_extension(base, input)
                                       : liberal_extension(base, input, order);
}

DefaultBase cumulate_strict(const DefaultBase& base) {
  std::vector<std::vector<Formula>> levels;
  std::vector<Formula> acc;
  for (int i = 0; i < base.level_count(); ++i) {
    for (const Formula& f : base.level(i))
      if (std::find(acc.begin(), acc.end(), f) == acc.end()) acc.push_back(f);
    levels.push_back(acc);
  }
  return DefaultBase(base.env(), std::move(levels));
}

DefaultBase flatten_liberal(const DefaultBase& base, SubsetOrder order) {
  std::vector<std::vector<Formula>> levels;
  for (SubsetKey key : subset_keys_ascending(base.level_count(), order))
    levels.push_back({dnf_formula(subset_theory(base, key, order).models, base.env())});
  int cap = std::max<int>(DefaultBase::kDefaultMaxLevels, static_cast<int>(levels.size()));
  return DefaultBase(base.env(), std::move(levels), cap);
}

RankedChain base_chain(const DefaultBase& base, ExtensionMode mode, SubsetOrder order) {
  std::vector<Theory> theories;
  ModelSet full = ModelSet::all(base.env().valuation_count());
  theories.push_back(Theory{full, {}});
  for (const ModelSet& step : extension_steps(base, mode, order))
    theories.push_back(Theory{step, {dnf_formula(step, base.env())}});
  return RankedChain(base.env(), std::move(theories));
}

RationalOrdering ordering_from_base(const DefaultBase& base, ExtensionMode mode,
                                    SubsetOrder order) {
  return ordering_from_chain(base_chain(base, mode, order));
}

bool query(const DefaultBase& base, ExtensionMode mode, const Formula& antecedent,
           const Formula& consequent, SubsetOrder order) {
  RankedChain chain = base_chain(base, mode, order);
  Context ctx = Context::full(base.env());
  bool answer = chain_query(chain, ctx, models_of(antecedent, base.env()),
                            models_of(consequent, base.env()));
  return answer;
}

DefaultBase parse_base_file(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  std::vector<std::string> atom_names;
  std::vector<std::vector<Formula>> levels;
  bool atoms_seen = false;

  auto trim = [](std::string s) {
    s.erase(0, s.find_first_not_of(" \t\r"));
    s.erase(s.find_last_not_of(" \t\r") + 1);
    return s;
  };

  std::vector<std::vector<std::string>> level_texts;

  while (std::getline(in, line)) {
    ++line_no;
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    if (!atoms_seen) {
      if (!t.starts_with("atoms:"))
        throw ParseError("base file must start with an 'atoms:' line", line_no);
      std::istringstream names(t.substr(6));
      std::string name;
      while (names >> name) atom_names.push_back(name);
      atoms_seen = true;
      continue;
    }
    if (t.starts_with("[level ") && t.ends_with("]")) {
      std::string num = trim(t.substr(7, t.size() - 8));
      int expected = static_cast<int>(level_texts.size()) + 1;
      if (num != std::to_string(expected))
        throw ParseError("expected [level " + std::to_string(expected) + "]", line_no);
      level_texts.emplace_back();
      continue;
    }
    if (level_texts.empty())
      throw ParseError("formula before the first [level 1] header", line_no);
    level_texts.back().push_back(t);
  }

  if (!atoms_seen) throw ParseError("base file must start with an 'atoms:' line", line_no);
  if (level_texts.empty()) throw ParseError("base file declares no levels", line_no);

  AtomEnv env(atom_names);
  for (const auto& texts : level_texts) {
    std::vector<Formula> level;
    for (const std::string& text : texts) level.push_back(parse_formula(text, env));
    levels.push_back(std::move(level));
  }
  return DefaultBase(env, std::move(levels));
}

DefaultBase parse_base_text(const std::string& text) {
  std::istringstream in(text);
  return parse_base_file(in);
}

}  // namespace ratinf
