#ifndef WORKBENCH_FORMULA_HPP
#define WORKBENCH_FORMULA_HPP

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace wb {

/// Immutable propositional formula over ~, &, | and named variables.
/// Values are cheap to copy (shared subtrees); equality is structural.
class Formula {
 public:
  enum class Kind { Var, Neg, And, Or };

  Formula() = default;

  static Formula var(std::string name);
  static Formula neg(Formula f);
  static Formula conj(Formula l, Formula r);
  static Formula disj(Formula l, Formula r);

  /// Canonical contradiction _bot & ~_bot over the reserved variable.
  static Formula bottom();
  static const std::string& bottom_var();

  Kind kind() const { return node_->kind; }
  const std::string& name() const { return node_->name; }
  Formula child() const { return Formula(node_->a); }
  Formula left() const { return Formula(node_->a); }
  Formula right() const { return Formula(node_->b); }

  bool valid() const { return node_ != nullptr; }
  std::size_t hash() const { return node_->hash; }
  bool operator==(const Formula& o) const;
  bool operator!=(const Formula& o) const { return !(*this == o); }

 private:
  struct Node {
    Kind kind;
    std::string name;
    std::shared_ptr<const Node> a, b;
    std::size_t hash;
  };
  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

struct FormulaHash {
  std::size_t operator()(const Formula& f) const { return f.hash(); }
};

using FormulaSet = std::unordered_set<Formula, FormulaHash>;

/// A turnstile statement lhs |- rhs.
struct Sequent {
  Formula lhs, rhs;
  bool operator==(const Sequent& o) const { return lhs == o.lhs && rhs == o.rhs; }
};

struct ParseError : std::runtime_error {
  ParseError(const std::string& msg, std::size_t offset)
      : std::runtime_error(msg + " at offset " + std::to_string(offset)),
        offset(offset) {}
  std::size_t offset;
};

/// Grammar: ident | '~' f | '!' f | f '&' f | f '|' f | '(' f ')',
/// precedence ~ > & > |, binary operators left-associative.
Formula parse(const std::string& text);

/// Parses "PHI |- PSI".
Sequent parse_sequent(const std::string& text);

/// Minimal-parentheses rendering; parse(print(f)) == f.
std::string print(const Formula& f);
std::string print(const Sequent& s);

/// All subtrees of f, including f itself.
FormulaSet subformulas(const Formula& f);

bool contains_or(const Formula& f);

struct SoritesParams {
  int n;
  int delta;
  void validate() const {
    if (!(1 <= delta && delta < n - 1))
      throw std::invalid_argument("sorites parameters require 1 <= delta < n-1");
  }
};

/// p0 & ~p{n-1} & /\_{k,l} ~(pk & ~p{k+l}), left-nested in ascending (k,l).
Formula sorites_formula(const SoritesParams& params);

/// Double-negation translation: g(p)=~~p, g(~f)=~g(f),
/// g(f&g)=g(f)&g(g), g(f|g)=~(~g(f)&~g(g)).
Formula godel_gentzen(const Formula& f);

}  // namespace wb

template <>
struct std::hash<wb::Formula> {
  std::size_t operator()(const wb::Formula& f) const { return f.hash(); }
};

#endif
