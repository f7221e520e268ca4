#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "ratinf/ordering.hpp"
#include "ratinf/ranked.hpp"

namespace ratinf {

/// Prioritized family of default sets A1..Am; a lower index is a higher
/// priority. The liberal machinery enumerates the 2^m - 1 nonempty index
/// subsets, hence the small cap.
class DefaultBase {
 public:
  static constexpr int kDefaultMaxLevels = 6;

  DefaultBase(AtomEnv env, std::vector<std::vector<Formula>> levels,
              int max_levels = kDefaultMaxLevels);

  const AtomEnv& env() const { return env_; }
  int level_count() const { return static_cast<int>(levels_.size()); }
  const std::vector<Formula>& level(int i) const { return levels_[static_cast<std::size_t>(i)]; }

  /// Models of the conjunction of the i-th level (0-based).
  const ModelSet& level_models(int i) const { return level_models_[static_cast<std::size_t>(i)]; }

 private:
  AtomEnv env_;
  std::vector<std::vector<Formula>> levels_;
  std::vector<ModelSet> level_models_;
};

/// Nonempty subset of priority indices {1..m}, bit i-1 standing for index i.
using SubsetKey = std::uint32_t;

/// Which reading of the subset order to use. The mirrored reading (smaller
/// at the first differing index means the index belongs to the larger side)
/// makes {1..m} the maximum and {m} the minimum and is the default; the
/// literal reading is its reverse.
enum class SubsetOrder { mirrored, literal };

/// Total strict order on nonempty subsets (eq only for identical keys).
Cmp compare_subsets(SubsetKey k, SubsetKey l, int level_count, SubsetOrder order);

/// All nonempty subsets of {1..m} in ascending order.
std::vector<SubsetKey> subset_keys_ascending(int level_count, SubsetOrder order);

std::string subset_to_string(SubsetKey key, int level_count);

/// The theory A_K: the intersection over all L >= K of the consequences of
/// the union of the levels indexed by L (as a model set, the union over such
/// L of the intersections of the level models).
Theory subset_theory(const DefaultBase& base, SubsetKey key, SubsetOrder order);

enum class ExtensionMode { strict, liberal };

/// Extension of an input formula. Degenerate marks the case where no default
/// level could be applied consistently; the theory is then the consequences
/// of the input alone, or the inconsistent theory for an inconsistent input.
struct Extension {
  Theory theory;
  bool degenerate = false;
};

/// Consequences of the input plus the largest consistent priority prefix.
Extension strict_extension(const DefaultBase& base, const Formula& input);

/// Consequences obtained by greedily skipping unusable levels, via the
/// cumulative A_K theories in subset order.
Extension liberal_extension(const DefaultBase& base, const Formula& input,
                            SubsetOrder order = SubsetOrder::mirrored);

Extension extension(const DefaultBase& base, ExtensionMode mode, const Formula& input,
                    SubsetOrder order = SubsetOrder::mirrored);

/// Replaces each level with the cumulative union of the levels up to it;
/// the liberal extension of the result equals the strict extension of the
/// original base.
DefaultBase cumulate_strict(const DefaultBase& base);

/// Levels become the A_K theories in ascending subset order (one minimal-DNF
/// axiom each); the strict extension of the result equals the liberal
/// extension of the original base.
DefaultBase flatten_liberal(const DefaultBase& base, SubsetOrder order = SubsetOrder::mirrored);

/// Chain of theories the extension machinery walks for the given mode, with
/// the empty theory prepended: for strict the cumulative prefixes, for
/// liberal the cumulative A_K unions in subset order. The input formula is
/// not part of the chain.
RankedChain base_chain(const DefaultBase& base, ExtensionMode mode,
                       SubsetOrder order = SubsetOrder::mirrored);

/// Ordering induced by the base: ordering_from_chain of base_chain.
RationalOrdering ordering_from_base(const DefaultBase& base, ExtensionMode mode,
                                    SubsetOrder order = SubsetOrder::mirrored);

/// True iff the consequent belongs to the extension of the antecedent,
/// evaluated through the ranked consequence operator over base_chain.
bool query(const DefaultBase& base, ExtensionMode mode, const Formula& antecedent,
           const Formula& consequent, SubsetOrder order = SubsetOrder::mirrored);

/// Base file format:
///   atoms: a b c
///   [level 1]
///   a -> b
/// Levels are listed in priority order; blank lines and # comments ignored.
DefaultBase parse_base_file(std::istream& in);
DefaultBase parse_base_text(const std::string& text);

}  // namespace ratinf
