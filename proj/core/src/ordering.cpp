#include "ratinf/ordering.hpp"

#include <algorithm>
#include <map>

#include "ratinf/dnf.hpp"

namespace ratinf {

RationalOrdering::RationalOrdering(AtomEnv env_in, std::vector<int> levels_in)
    : env(std::move(env_in)), levels(std::move(levels_in)) {
  std::size_t expected = static_cast<std::size_t>(class_count(env));
  if (levels.size() != expected)
    throw ValidationError("level map must be total over all " + std::to_string(expected) +
                          " classes, got " + std::to_string(levels.size()));
  for (int l : levels)
    if (l < 0) throw ValidationError("levels must be non-negative");
}

int RationalOrdering::max_level() const {
  return *std::max_element(levels.begin(), levels.end());
}

RationalOrdering RationalOrdering::normalized() const {
  std::map<int, int> relabel;
  for (int l : levels) relabel.emplace(l, 0);
  int next = 0;
  for (auto& [_, dense] : relabel) dense = next++;
  std::vector<int> out(levels.size());
  for (std::size_t i = 0; i < levels.size(); ++i) out[i] = relabel.at(levels[i]);
  return RationalOrdering(env, std::move(out));
}

OrderingReport validate_rational(const RationalOrdering& ord) {
  OrderingReport report;
  const std::uint32_t n = static_cast<std::uint32_t>(ord.levels.size());
  const std::uint32_t full = n - 1;

  // Dominance over subset pairs: enumerate supersets of each mask.
  for (std::uint32_t x = 0; x < n; ++x) {
    for (std::uint32_t y = x;; y = (y + 1) | x) {
      if (ord.level_of_mask(x) > ord.level_of_mask(y))
        report.violations.push_back({"Dominance", {x, y}});
      if (y == full) break;
    }
  }

  for (std::uint32_t x = 0; x < n; ++x)
    for (std::uint32_t y = x; y < n; ++y)
      if (ord.level_of_mask(x & y) != std::min(ord.level_of_mask(x), ord.level_of_mask(y)))
        report.violations.push_back({"Conjunctiveness", {x, y}});

  return report;
}

Cmp compare(const RationalOrdering& ord, const Formula& a, const Formula& b) {
  int la = ord.level_of(a);
  int lb = ord.level_of(b);
  if (la < lb) return Cmp::lt;
  if (la > lb) return Cmp::gt;
  return Cmp::eq;
}

bool is_expectation(const RationalOrdering& ord, const Context& ctx) {
  int top = ord.max_level();
  for (std::uint32_t mask = 0; mask < ord.levels.size(); ++mask) {
    if (ord.level_of_mask(mask) != top) continue;
    ModelSet cls = ModelSet::from_mask(ord.env.valuation_count(), mask);
    if (!ctx.models.is_subset_of(cls)) return false;
  }
  return true;
}

std::string dump_levels(const RationalOrdering& ord) {
  std::string out;
  for (int level = ord.max_level(); level >= 0; --level) {
    std::string line = "level " + std::to_string(level) + ":";
    bool any = false;
    for (std::uint32_t mask = 0; mask < ord.levels.size(); ++mask) {
      if (ord.level_of_mask(mask) != level) continue;
      line += any ? ", " : " ";
      line += dnf_string(ModelSet::from_mask(ord.env.valuation_count(), mask), ord.env);
      any = true;
    }
    if (!any) continue;  // non-normalized maps may skip levels
    out += line;
    out += '\n';
  }
  return out;
}

}  // namespace ratinf
