#include "ratinf/logic.hpp"

#include <algorithm>
#include <cctype>

namespace ratinf {

AtomEnv::AtomEnv(std::vector<std::string> names, int max_atoms) : names_(std::move(names)) {
  if (names_.empty()) throw ValidationError("atom environment needs at least one atom");
  if (static_cast<int>(names_.size()) > max_atoms)
    throw ValidationError("atom environment exceeds the configured cap of " +
                          std::to_string(max_atoms) + " atoms");
  for (std::size_t i = 0; i < names_.size(); ++i)
    for (std::size_t j = i + 1; j < names_.size(); ++j)
      if (names_[i] == names_[j]) throw ValidationError("duplicate atom name '" + names_[i] + "'");
}

std::optional<int> AtomEnv::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<int>(i);
  return std::nullopt;
}

ModelSet ModelSet::none(int bit_count) {
  ModelSet s;
  s.bit_count_ = bit_count;
  s.words_.assign(static_cast<std::size_t>((bit_count + 63) / 64), 0);
  return s;
}

ModelSet ModelSet::all(int bit_count) {
  ModelSet s = none(bit_count);
  for (auto& w : s.words_) w = ~std::uint64_t{0};
  int tail = bit_count & 63;
  if (tail != 0) s.words_.back() = (std::uint64_t{1} << tail) - 1;
  return s;
}

ModelSet ModelSet::from_mask(int bit_count, std::uint32_t mask) {
  ModelSet s = none(bit_count);
  s.words_[0] = mask;
  return s;
}

void ModelSet::set(int i, bool value) {
  std::uint64_t bit = std::uint64_t{1} << (i & 63);
  if (value)
    words_[static_cast<std::size_t>(i) >> 6] |= bit;
  else
    words_[static_cast<std::size_t>(i) >> 6] &= ~bit;
}

bool ModelSet::none_set() const {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

int ModelSet::count() const {
  int c = 0;
  for (auto w : words_) c += __builtin_popcountll(w);
  return c;
}

bool ModelSet::is_subset_of(const ModelSet& other) const {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & ~other.words_[i]) return false;
  return true;
}

ModelSet ModelSet::operator&(const ModelSet& o) const {
  ModelSet r = *this;
  for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] &= o.words_[i];
  return r;
}

ModelSet ModelSet::operator|(const ModelSet& o) const {
  ModelSet r = *this;
  for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] |= o.words_[i];
  return r;
}

ModelSet ModelSet::complement() const {
  ModelSet r = all(bit_count_);
  for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] &= ~words_[i];
  return r;
}

std::uint32_t ModelSet::to_mask() const {
  return static_cast<std::uint32_t>(words_[0]);
}

Formula Formula::atom(int index) {
  return Formula(std::make_shared<const Node>(Node{Kind::atom, index, nullptr, nullptr}));
}
Formula Formula::top() {
  return Formula(std::make_shared<const Node>(Node{Kind::top, -1, nullptr, nullptr}));
}
Formula Formula::bot() {
  return Formula(std::make_shared<const Node>(Node{Kind::bot, -1, nullptr, nullptr}));
}
Formula Formula::negation(Formula f) {
  return Formula(std::make_shared<const Node>(Node{Kind::negation, -1, std::move(f.node_), nullptr}));
}
Formula Formula::conjunction(Formula a, Formula b) {
  return Formula(std::make_shared<const Node>(
      Node{Kind::conjunction, -1, std::move(a.node_), std::move(b.node_)}));
}
Formula Formula::disjunction(Formula a, Formula b) {
  return Formula(std::make_shared<const Node>(
      Node{Kind::disjunction, -1, std::move(a.node_), std::move(b.node_)}));
}
Formula Formula::implication(Formula a, Formula b) {
  return Formula(std::make_shared<const Node>(
      Node{Kind::implication, -1, std::move(a.node_), std::move(b.node_)}));
}

bool Formula::operator==(const Formula& other) const {
  if (node_ == other.node_) return true;
  if (!node_ || !other.node_) return false;
  if (node_->kind != other.node_->kind) return false;
  switch (node_->kind) {
    case Kind::atom:
      return node_->atom == other.node_->atom;
    case Kind::top:
    case Kind::bot:
      return true;
    case Kind::negation:
      return left() == other.left();
    default:
      return left() == other.left() && right() == other.right();
  }
}

namespace {

int precedence_of(Formula::Kind kind) {
  switch (kind) {
    case Formula::Kind::implication: return 1;
    case Formula::Kind::disjunction: return 2;
    case Formula::Kind::conjunction: return 3;
    default: return 4;
  }
}

void print_formula(const Formula& f, const AtomEnv& env, int parent_prec, std::string& out) {
  int prec = precedence_of(f.kind());
  bool parens = prec < parent_prec;
  if (parens) out += '(';
  switch (f.kind()) {
    case Formula::Kind::atom: out += env.name(f.atom_index()); break;
    case Formula::Kind::top: out += "true"; break;
    case Formula::Kind::bot: out += "false"; break;
    case Formula::Kind::negation:
      out += '!';
      print_formula(f.left(), env, 4, out);
      break;
    case Formula::Kind::conjunction:
      print_formula(f.left(), env, 3, out);
      out += " & ";
      print_formula(f.right(), env, 4, out);
      break;
    case Formula::Kind::disjunction:
      print_formula(f.left(), env, 2, out);
      out += " | ";
      print_formula(f.right(), env, 3, out);
      break;
    case Formula::Kind::implication:
      print_formula(f.left(), env, 2, out);
      out += " -> ";
      print_formula(f.right(), env, 1, out);
      break;
  }
  if (parens) out += ')';
}

class Parser {
 public:
  Parser(std::string_view text, const AtomEnv& env) : text_(text), env_(env) {}

  Formula parse() {
    Formula f = parse_implication();
    skip_ws();
    if (pos_ != text_.size()) throw ParseError("syntax error", pos_);
    return f;
  }

 private:
  Formula parse_implication() {
    Formula lhs = parse_disjunction();
    skip_ws();
    if (match("->")) return Formula::implication(std::move(lhs), parse_implication());
    return lhs;
  }

  Formula parse_disjunction() {
    Formula f = parse_conjunction();
    for (skip_ws(); peek() == '|'; skip_ws()) {
      ++pos_;
      f = Formula::disjunction(std::move(f), parse_conjunction());
    }
    return f;
  }

  Formula parse_conjunction() {
    Formula f = parse_unary();
    for (skip_ws(); peek() == '&'; skip_ws()) {
      ++pos_;
      f = Formula::conjunction(std::move(f), parse_unary());
    }
    return f;
  }

  Formula parse_unary() {
    skip_ws();
    if (peek() == '!') {
      ++pos_;
      return Formula::negation(parse_unary());
    }
    if (peek() == '(') {
      ++pos_;
      Formula f = parse_implication();
      skip_ws();
      if (peek() != ')') throw ParseError("syntax error", pos_);
      ++pos_;
      return f;
    }
    if (is_ident_start(peek())) {
      std::size_t start = pos_;
      while (is_ident_char(peek())) ++pos_;
      std::string_view word = text_.substr(start, pos_ - start);
      if (word == "true") return Formula::top();
      if (word == "false") return Formula::bot();
      auto idx = env_.index_of(word);
      if (!idx) throw ParseError("unknown atom '" + std::string(word) + "'", start);
      return Formula::atom(*idx);
    }
    throw ParseError("syntax error", pos_);
  }

  static bool is_ident_start(int c) { return (c >= 'a' && c <= 'z') || c == '_'; }
  static bool is_ident_char(int c) {
    return is_ident_start(c) || (c >= '0' && c <= '9');
  }

  int peek() const { return pos_ < text_.size() ? text_[pos_] : -1; }
  bool match(std::string_view token) {
    if (text_.substr(pos_).starts_with(token)) {
      pos_ += token.size();
      return true;
    }
    return false;
  }
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string_view text_;
  const AtomEnv& env_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string Formula::to_string(const AtomEnv& env) const {
  std::string out;
  print_formula(*this, env, 0, out);
  return out;
}

Formula parse_formula(std::string_view text, const AtomEnv& env) {
  return Parser(text, env).parse();
}

bool eval_formula(const Formula& f, int valuation, const AtomEnv& env) {
  switch (f.kind()) {
    case Formula::Kind::atom: return env.atom_true_in(valuation, f.atom_index());
    case Formula::Kind::top: return true;
    case Formula::Kind::bot: return false;
    case Formula::Kind::negation: return !eval_formula(f.left(), valuation, env);
    case Formula::Kind::conjunction:
      return eval_formula(f.left(), valuation, env) && eval_formula(f.right(), valuation, env);
    case Formula::Kind::disjunction:
      return eval_formula(f.left(), valuation, env) || eval_formula(f.right(), valuation, env);
    case Formula::Kind::implication:
      return !eval_formula(f.left(), valuation, env) || eval_formula(f.right(), valuation, env);
  }
  return false;
}

SemClass models_of(const Formula& f, const AtomEnv& env) {
  int bits = env.valuation_count();
  switch (f.kind()) {
    case Formula::Kind::atom: {
      ModelSet s = ModelSet::none(bits);
      for (int v = 0; v < bits; ++v)
        if (env.atom_true_in(v, f.atom_index())) s.set(v);
      return s;
    }
    case Formula::Kind::top: return ModelSet::all(bits);
    case Formula::Kind::bot: return ModelSet::none(bits);
    case Formula::Kind::negation: return models_of(f.left(), env).complement();
    case Formula::Kind::conjunction: return models_of(f.left(), env) & models_of(f.right(), env);
    case Formula::Kind::disjunction: return models_of(f.left(), env) | models_of(f.right(), env);
    case Formula::Kind::implication:
      return models_of(f.left(), env).complement() | models_of(f.right(), env);
  }
  return ModelSet::none(bits);
}

bool entails(const Context& ctx, std::span<const ModelSet> assumptions, const ModelSet& goal) {
  ModelSet premise = ctx.models;
  for (const auto& a : assumptions) premise = premise & a;
  return premise.is_subset_of(goal);
}

bool entails(const Context& ctx, std::span<const Formula> assumptions, const Formula& goal,
             const AtomEnv& env) {
  ModelSet premise = ctx.models;
  for (const auto& a : assumptions) premise = premise & models_of(a, env);
  return premise.is_subset_of(models_of(goal, env));
}

int class_count(const AtomEnv& env) {
  if (env.atom_count() > kMaxExhaustiveAtoms)
    throw LimitError("class enumeration limited to " + std::to_string(kMaxExhaustiveAtoms) +
                     " atoms, got " + std::to_string(env.atom_count()));
  return 1 << env.valuation_count();
}

std::vector<SemClass> enumerate_classes(const AtomEnv& env) {
  int n = class_count(env);
  std::vector<SemClass> classes;
  classes.reserve(static_cast<std::size_t>(n));
  for (int mask = 0; mask < n; ++mask)
    classes.push_back(ModelSet::from_mask(env.valuation_count(), static_cast<std::uint32_t>(mask)));
  return classes;
}

}  // namespace ratinf
