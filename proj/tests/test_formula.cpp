#include <doctest.h>

#include "helpers.hpp"
#include "workbench/formula.hpp"

using wb::Formula;

TEST_CASE("parsing respects precedence and associativity") {
  Formula f = wb::parse("p & q | ~r");
  REQUIRE(f.kind() == Formula::Kind::Or);
  CHECK(f.left() == Formula::conj(Formula::var("p"), Formula::var("q")));
  CHECK(f.right() == Formula::neg(Formula::var("r")));

  Formula g = wb::parse("p | q | r");
  REQUIRE(g.kind() == Formula::Kind::Or);
  CHECK(g.left() == wb::parse("p | q"));

  CHECK(wb::parse("p & (q | r)") != wb::parse("p & q | r"));
  CHECK(wb::parse("!p") == wb::parse("~p"));
  CHECK(wb::parse("~~p") == Formula::neg(Formula::neg(Formula::var("p"))));
  CHECK(wb::parse("  p_1 &\tq2 ") == Formula::conj(Formula::var("p_1"), Formula::var("q2")));
}

TEST_CASE("parse errors carry byte offsets") {
  CHECK_THROWS_AS(wb::parse(""), wb::ParseError);
  CHECK_THROWS_AS(wb::parse("p &"), wb::ParseError);
  CHECK_THROWS_AS(wb::parse("p q"), wb::ParseError);
  CHECK_THROWS_AS(wb::parse("(p | q"), wb::ParseError);
  CHECK_THROWS_AS(wb::parse("p # q"), wb::ParseError);
  try {
    wb::parse("p | *");
  } catch (const wb::ParseError& e) {
    CHECK(e.offset == 4);
  }
}

TEST_CASE("printing uses minimal parentheses and round-trips") {
  CHECK(wb::print(wb::parse("p & q | ~r")) == "p & q | ~r");
  CHECK(wb::print(wb::parse("p & (q | r)")) == "p & (q | r)");
  CHECK(wb::print(wb::parse("~(p & q)")) == "~(p & q)");
  CHECK(wb::print(wb::parse("(p | q) | r")) == "p | q | r");
  CHECK(wb::print(wb::parse("p | (q | r)")) == "p | (q | r)");

  std::mt19937 rng(7);
  std::vector<std::string> vars{"p", "q", "r"};
  for (int i = 0; i < 500; ++i) {
    Formula f = wbt::random_formula(rng, vars, 5);
    CHECK(wb::parse(wb::print(f)) == f);
  }
}

TEST_CASE("sequent parsing") {
  wb::Sequent s = wb::parse_sequent("p & q |- q | r");
  CHECK(s.lhs == wb::parse("p & q"));
  CHECK(s.rhs == wb::parse("q | r"));
  CHECK_THROWS_AS(wb::parse_sequent("p & q"), wb::ParseError);
  CHECK(wb::print(s) == "p & q |- q | r");
}

TEST_CASE("subformulas and contains_or") {
  Formula f = wb::parse("p & (q | ~p)");
  auto subs = wb::subformulas(f);
  CHECK(subs.size() == 5);  // p, q, ~p, q | ~p, whole
  CHECK(subs.count(wb::parse("~p")) == 1);
  CHECK(wb::contains_or(f));
  CHECK_FALSE(wb::contains_or(wb::parse("p & ~q")));
}

TEST_CASE("bottom is a contradiction over the reserved variable") {
  Formula bot = Formula::bottom();
  REQUIRE(bot.kind() == Formula::Kind::And);
  CHECK(bot.left() == Formula::var(Formula::bottom_var()));
  CHECK(bot.right() == Formula::neg(bot.left()));
}

TEST_CASE("sorites formula shape") {
  CHECK(wb::print(wb::sorites_formula({4, 1})) ==
        "p0 & ~p3 & ~(p0 & ~p1) & ~(p1 & ~p2) & ~(p2 & ~p3)");
  CHECK(wb::print(wb::sorites_formula({4, 2})) ==
        "p0 & ~p3 & ~(p0 & ~p1) & ~(p0 & ~p2) & ~(p1 & ~p2) & ~(p1 & ~p3) & ~(p2 & ~p3)");
  CHECK_THROWS_AS(wb::SoritesParams({3, 2}).validate(), std::invalid_argument);
  CHECK_THROWS_AS(wb::SoritesParams({2, 1}).validate(), std::invalid_argument);
}

TEST_CASE("godel-gentzen translation") {
  CHECK(wb::print(wb::godel_gentzen(wb::parse("p"))) == "~~p");
  CHECK(wb::print(wb::godel_gentzen(wb::parse("p | q"))) == "~(~~~p & ~~~q)");
  CHECK(wb::godel_gentzen(wb::parse("~p")) == wb::parse("~~~p"));
  CHECK(wb::godel_gentzen(wb::parse("p & q")) == wb::parse("~~p & ~~q"));

  // independent recursion as oracle
  auto oracle = [](auto&& self, const Formula& f) -> Formula {
    switch (f.kind()) {
      case Formula::Kind::Var:
        return Formula::neg(Formula::neg(f));
      case Formula::Kind::Neg:
        return Formula::neg(self(self, f.child()));
      case Formula::Kind::And:
        return Formula::conj(self(self, f.left()), self(self, f.right()));
      case Formula::Kind::Or:
        return Formula::neg(Formula::conj(Formula::neg(self(self, f.left())),
                                          Formula::neg(self(self, f.right()))));
    }
    return f;
  };
  std::mt19937 rng(11);
  std::vector<std::string> vars{"p", "q"};
  for (int i = 0; i < 200; ++i) {
    Formula f = wbt::random_formula(rng, vars, 4);
    CHECK(wb::godel_gentzen(f) == oracle(oracle, f));
  }
}
