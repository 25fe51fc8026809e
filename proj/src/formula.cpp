#include "workbench/formula.hpp"

#include <cctype>
#include <sstream>
#include <vector>

namespace wb {

namespace {

std::size_t combine(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

Formula Formula::var(std::string name) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Var;
  n->name = std::move(name);
  n->hash = combine(1, std::hash<std::string>{}(n->name));
  return Formula(std::move(n));
}

Formula Formula::neg(Formula f) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Neg;
  n->a = f.node_;
  n->hash = combine(2, f.hash());
  return Formula(std::move(n));
}

Formula Formula::conj(Formula l, Formula r) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::And;
  n->a = l.node_;
  n->b = r.node_;
  n->hash = combine(combine(3, l.hash()), r.hash());
  return Formula(std::move(n));
}

Formula Formula::disj(Formula l, Formula r) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Or;
  n->a = l.node_;
  n->b = r.node_;
  n->hash = combine(combine(4, l.hash()), r.hash());
  return Formula(std::move(n));
}

const std::string& Formula::bottom_var() {
  static const std::string name = "_bot";
  return name;
}

Formula Formula::bottom() {
  Formula v = var(bottom_var());
  return conj(v, neg(v));
}

bool Formula::operator==(const Formula& o) const {
  if (node_ == o.node_) return true;
  if (!node_ || !o.node_) return false;
  if (node_->hash != o.node_->hash || node_->kind != o.node_->kind) return false;
  switch (node_->kind) {
    case Kind::Var:
      return node_->name == o.node_->name;
    case Kind::Neg:
      return child() == o.child();
    case Kind::And:
    case Kind::Or:
      return left() == o.left() && right() == o.right();
  }
  return false;
}

namespace {

struct Parser {
  const std::string& text;
  std::size_t pos = 0;

  explicit Parser(const std::string& t) : text(t) {}

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  bool eof() {
    skip_ws();
    return pos >= text.size();
  }

  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }

  Formula parse_or() {
    Formula f = parse_and();
    while (peek() == '|') {
      ++pos;
      f = Formula::disj(f, parse_and());
    }
    return f;
  }

  Formula parse_and() {
    Formula f = parse_unary();
    while (peek() == '&') {
      ++pos;
      f = Formula::conj(f, parse_unary());
    }
    return f;
  }

  Formula parse_unary() {
    char c = peek();
    if (c == '~' || c == '!') {
      ++pos;
      return Formula::neg(parse_unary());
    }
    return parse_atom();
  }

  Formula parse_atom() {
    char c = peek();
    if (c == '(') {
      ++pos;
      Formula f = parse_or();
      if (peek() != ')') throw ParseError("expected ')'", pos);
      ++pos;
      return f;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos;
      while (pos < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
        ++pos;
      return Formula::var(text.substr(start, pos - start));
    }
    if (c == '\0') throw ParseError("unexpected end of input", pos);
    throw ParseError(std::string("unexpected character '") + c + "'", pos);
  }
};

}  // namespace

Formula parse(const std::string& text) {
  Parser p(text);
  if (p.eof()) throw ParseError("empty input", 0);
  Formula f = p.parse_or();
  if (!p.eof()) throw ParseError("trailing input", p.pos);
  return f;
}

Sequent parse_sequent(const std::string& text) {
  std::size_t sep = text.find("|-");
  if (sep == std::string::npos)
    throw ParseError("expected '|-' separating the two sides", text.size());
  return Sequent{parse(text.substr(0, sep)), parse(text.substr(sep + 2))};
}

namespace {

// Precedence levels: | = 1, & = 2, ~ = 3, atoms = 4.
int precedence(Formula::Kind k) {
  switch (k) {
    case Formula::Kind::Or: return 1;
    case Formula::Kind::And: return 2;
    case Formula::Kind::Neg: return 3;
    case Formula::Kind::Var: return 4;
  }
  return 4;
}

void print_rec(const Formula& f, int min_prec, std::ostringstream& out) {
  int prec = precedence(f.kind());
  bool parens = prec < min_prec;
  if (parens) out << '(';
  switch (f.kind()) {
    case Formula::Kind::Var:
      out << f.name();
      break;
    case Formula::Kind::Neg:
      out << '~';
      print_rec(f.child(), 3, out);
      break;
    case Formula::Kind::And:
      print_rec(f.left(), 2, out);
      out << " & ";
      print_rec(f.right(), 3, out);
      break;
    case Formula::Kind::Or:
      print_rec(f.left(), 1, out);
      out << " | ";
      print_rec(f.right(), 2, out);
      break;
  }
  if (parens) out << ')';
}

}  // namespace

std::string print(const Formula& f) {
  std::ostringstream out;
  print_rec(f, 0, out);
  return out.str();
}

std::string print(const Sequent& s) {
  return print(s.lhs) + " |- " + print(s.rhs);
}

namespace {

void collect_subformulas(const Formula& f, FormulaSet& out) {
  if (!out.insert(f).second) return;
  switch (f.kind()) {
    case Formula::Kind::Var:
      break;
    case Formula::Kind::Neg:
      collect_subformulas(f.child(), out);
      break;
    case Formula::Kind::And:
    case Formula::Kind::Or:
      collect_subformulas(f.left(), out);
      collect_subformulas(f.right(), out);
      break;
  }
}

}  // namespace

FormulaSet subformulas(const Formula& f) {
  FormulaSet out;
  collect_subformulas(f, out);
  return out;
}

bool contains_or(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Var: return false;
    case Formula::Kind::Neg: return contains_or(f.child());
    case Formula::Kind::And: return contains_or(f.left()) || contains_or(f.right());
    case Formula::Kind::Or: return true;
  }
  return false;
}

Formula sorites_formula(const SoritesParams& params) {
  params.validate();
  auto p = [](int k) { return Formula::var("p" + std::to_string(k)); };
  Formula f = Formula::conj(p(0), Formula::neg(p(params.n - 1)));
  for (int k = 0; k <= params.n - 2; ++k)
    for (int l = 1; l <= params.delta && k + l <= params.n - 1; ++l)
      f = Formula::conj(f, Formula::neg(Formula::conj(p(k), Formula::neg(p(k + l)))));
  return f;
}

Formula godel_gentzen(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Var:
      return Formula::neg(Formula::neg(f));
    case Formula::Kind::Neg:
      return Formula::neg(godel_gentzen(f.child()));
    case Formula::Kind::And:
      return Formula::conj(godel_gentzen(f.left()), godel_gentzen(f.right()));
    case Formula::Kind::Or:
      return Formula::neg(Formula::conj(Formula::neg(godel_gentzen(f.left())),
                                        Formula::neg(godel_gentzen(f.right()))));
  }
  throw std::logic_error("unreachable");
}

}  // namespace wb
