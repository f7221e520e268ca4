#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ratinf/errors.hpp"

namespace ratinf {

/// Ordered list of atom names fixing the propositional language.
///
/// Valuations are indexed 0 .. 2^n - 1; bit k of a valuation index is the truth
/// value of atom k, with atom 0 in the most significant position. All model
/// sets, classes and theories below are bit sets over this valuation order, so
/// every fixture in the test suite is bit-exact.
class AtomEnv {
 public:
  static constexpr int kDefaultMaxAtoms = 16;

  explicit AtomEnv(std::vector<std::string> names, int max_atoms = kDefaultMaxAtoms);

  int atom_count() const { return static_cast<int>(names_.size()); }
  int valuation_count() const { return 1 << atom_count(); }
  const std::string& name(int atom) const { return names_[static_cast<std::size_t>(atom)]; }
  std::optional<int> index_of(std::string_view name) const;

  /// Truth value of `atom` in the valuation with the given index.
  bool atom_true_in(int valuation, int atom) const {
    return (valuation >> (atom_count() - 1 - atom)) & 1;
  }

  bool operator==(const AtomEnv&) const = default;

 private:
  std::vector<std::string> names_;
};

/// Set of valuations as a bit set of length 2^n (bit i = valuation i).
class ModelSet {
 public:
  ModelSet() = default;
  static ModelSet none(int bit_count);
  static ModelSet all(int bit_count);
  /// Rebuilds a set from its compact mask form; only for bit_count <= 32.
  static ModelSet from_mask(int bit_count, std::uint32_t mask);

  int bit_count() const { return bit_count_; }
  bool test(int i) const { return (words_[static_cast<std::size_t>(i) >> 6] >> (i & 63)) & 1; }
  void set(int i, bool value = true);

  bool none_set() const;
  bool any_set() const { return !none_set(); }
  int count() const;
  bool is_subset_of(const ModelSet& other) const;

  ModelSet operator&(const ModelSet& o) const;
  ModelSet operator|(const ModelSet& o) const;
  ModelSet complement() const;

  /// Compact form used by the class-indexed modules; only for bit_count <= 32.
  std::uint32_t to_mask() const;

  bool operator==(const ModelSet&) const = default;

 private:
  int bit_count_ = 0;
  std::vector<std::uint64_t> words_;
};

/// A semantic class: the canonical identity of a formula modulo classical
/// equivalence, represented by its set of satisfying valuations.
using SemClass = ModelSet;

/// Propositional formula over an AtomEnv. Immutable; cheap to copy.
class Formula {
 public:
  enum class Kind { atom, top, bot, negation, conjunction, disjunction, implication };

  static Formula atom(int index);
  static Formula top();
  static Formula bot();
  static Formula negation(Formula f);
  static Formula conjunction(Formula a, Formula b);
  static Formula disjunction(Formula a, Formula b);
  static Formula implication(Formula a, Formula b);

  Kind kind() const { return node_->kind; }
  int atom_index() const { return node_->atom; }
  Formula left() const { return Formula(node_->left); }
  Formula right() const { return Formula(node_->right); }

  /// Structural (syntactic) equality, used by the membership-based chains.
  bool operator==(const Formula& other) const;

  std::string to_string(const AtomEnv& env) const;

 private:
  struct Node {
    Kind kind;
    int atom = -1;
    std::shared_ptr<const Node> left;
    std::shared_ptr<const Node> right;
  };
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// Parses the textual grammar: atoms [a-z_][a-z0-9_]*, constants true/false,
/// `!` not, `&` and, `|` or, `->` implies (right associative), parentheses.
/// Precedence: ! > & > | > ->. Whitespace is insignificant.
/// Throws ParseError (with byte offset) on syntax errors and unknown atoms.
Formula parse_formula(std::string_view text, const AtomEnv& env);

/// Direct truth-table evaluation of `f` in one valuation.
bool eval_formula(const Formula& f, int valuation, const AtomEnv& env);

/// Set of valuations satisfying `f`, computed structurally on model sets.
SemClass models_of(const Formula& f, const AtomEnv& env);

/// Deductively closed set, represented by its model set. The optional origin
/// is a finite axiom list kept for display only.
struct Theory {
  ModelSet models;
  std::vector<Formula> origin;

  bool consistent() const { return models.any_set(); }
  bool entails(const ModelSet& goal) const { return models.is_subset_of(goal); }
};

/// Background assumption set against which entailment is judged. The classical
/// base context contains every valuation.
struct Context {
  ModelSet models;

  static Context full(const AtomEnv& env) {
    return Context{ModelSet::all(env.valuation_count())};
  }
};

/// Entailment relative to a context:
/// models(ctx) intersected with all assumption model sets is included in the goal.
bool entails(const Context& ctx, std::span<const ModelSet> assumptions, const ModelSet& goal);
bool entails(const Context& ctx, std::span<const Formula> assumptions, const Formula& goal,
             const AtomEnv& env);

/// Largest atom count for which the full class lattice is enumerated.
constexpr int kMaxExhaustiveAtoms = 3;

/// Number of semantic classes over `env` (2^(2^n)); n <= kMaxExhaustiveAtoms.
int class_count(const AtomEnv& env);

/// All 2^(2^n) semantic classes in ascending bit-pattern order.
/// Throws LimitError for atom counts above kMaxExhaustiveAtoms.
std::vector<SemClass> enumerate_classes(const AtomEnv& env);

}  // namespace ratinf
