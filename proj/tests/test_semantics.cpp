#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "workbench/semantics.hpp"
#include "workbench/sorites.hpp"

using wb::Formula;
using wb::Frame;
using wb::Model;
using wb::SemanticsId;
using wb::StateSet;

namespace {

Model two_state_chain() {
  // a <| b one way, both reflexive; V(p) = {a} is a fixpoint
  Frame f({"a", "b"}, std::vector<std::pair<int, int>>{{0, 0}, {1, 1}, {0, 1}});
  return Model{f, {{"p", 0b01}}};
}

}  // namespace

TEST_CASE("fixpoint model validation") {
  CHECK(wb::validate_fixpoint_model(two_state_chain()).empty());
  Model bad = two_state_chain();
  bad.valuation["p"] = 0b10;  // c({b}) also contains a, whose lone predecessor sees b
  auto v = wb::validate_fixpoint_model(bad);
  REQUIRE(v.size() == 1);
  CHECK(v[0].var == "p");
  CHECK(v[0].state == 0);
  CHECK(wb::validate_fixpoint_model(wb::build_symmetric({4, 1})).empty());
  CHECK(wb::validate_fixpoint_model(wb::build_pseudosymmetric({5, 2})).empty());
}

TEST_CASE("eval basics") {
  Model m = two_state_chain();
  CHECK(wb::eval(m, wb::parse("p"), SemanticsId::Fixpoint) == 0b01);
  // ~p needs all predecessors outside p; a precedes both states
  CHECK(wb::eval(m, wb::parse("~p"), SemanticsId::Fixpoint) == 0);
  CHECK(wb::eval(m, wb::parse("~~p"), SemanticsId::Fixpoint) == m.frame.all());
  CHECK(wb::eval(m, wb::parse("p & ~p"), SemanticsId::Fixpoint) == 0);
  CHECK_THROWS_AS(wb::eval(m, wb::parse("q"), SemanticsId::Fixpoint), std::invalid_argument);
  CHECK(wb::eval(m, wb::parse("q"), SemanticsId::Fixpoint, /*strict=*/false) == 0);

  Model bad = two_state_chain();
  bad.valuation["p"] = 0b10;
  CHECK_THROWS_AS(wb::eval(bad, wb::parse("p"), SemanticsId::Fixpoint), std::invalid_argument);
  CHECK(wb::eval(bad, wb::parse("p"), SemanticsId::Fine) == 0b10);  // Fine takes any valuation
}

TEST_CASE("disjunction differs between the semantics") {
  // complete 2-state frame: fixpoints are only {} and {a,b}
  Frame f({"a", "b"}, std::vector<std::pair<int, int>>{{0, 0}, {0, 1}, {1, 0}, {1, 1}});
  Model m{f, {{"p", 0b01}, {"q", 0b10}}};
  CHECK(wb::eval(m, wb::parse("p | q"), SemanticsId::Fine) == 0b11);
  // under Fine the valuation need not be closed; under fixpoint it must be
  CHECK_THROWS_AS(wb::eval(m, wb::parse("p | q"), SemanticsId::Fixpoint), std::invalid_argument);

  Model s = wb::build_symmetric({4, 1});
  // p1 | ~p1 in S_{4,1} is everything: closure fills the borderline states
  StateSet em = wb::eval(s, wb::parse("p1 | ~p1"), SemanticsId::Fixpoint);
  CHECK(em == s.frame.all());
  StateSet fine_em = wb::eval(s, wb::parse("p1 | ~p1"), SemanticsId::Fine);
  CHECK(fine_em != em);  // plain union leaves gaps
}

TEST_CASE("or-free formulas agree across semantics on fixpoint models") {
  std::mt19937 rng(17);
  std::vector<std::string> vars{"p0", "p1", "p2"};
  Model models[] = {wb::build_symmetric({3, 1}), wb::build_pseudosymmetric({3, 1})};
  for (const Model& m : models)
    for (int i = 0; i < 300; ++i) {
      Formula f = wbt::random_or_free(rng, vars, 4);
      CHECK(wb::eval(m, f, SemanticsId::Fixpoint) == wb::eval(m, f, SemanticsId::Fine));
    }
}

TEST_CASE("accepts, rejects, accepts-negation can come apart") {
  Model m = wb::build_pseudosymmetric({4, 1});
  int r1 = m.frame.index_of("r1");
  REQUIRE(r1 >= 0);
  auto ar = wb::accepts_rejects(m, wb::parse("p1 | ~p1"), r1, SemanticsId::Fixpoint);
  CHECK_FALSE(ar.accepts);
  CHECK(ar.rejects);                  // rejector rejects this excluded-middle instance
  CHECK_FALSE(ar.accepts_negation);   // without accepting its (contradictory) negation

  // in the symmetric model, rejecting equals accepting the negation
  Model s = wb::build_symmetric({4, 1});
  for (int x = 0; x < s.frame.size(); ++x) {
    auto a = wb::accepts_rejects(s, wb::parse("p1"), x, SemanticsId::Fixpoint);
    CHECK(a.rejects == a.accepts_negation);
  }
}

TEST_CASE("consequence_over finds the first counterexample") {
  Model m = two_state_chain();
  auto none = wb::consequence_over({m}, wb::parse_sequent("p |- p"), SemanticsId::Fixpoint);
  CHECK_FALSE(none.has_value());
  auto hit = wb::consequence_over({m}, wb::parse_sequent("~~p |- p"), SemanticsId::Fixpoint);
  REQUIRE(hit.has_value());
  CHECK(hit->model_index == 0);
  CHECK(hit->state == 1);  // b forces ~~p but not p
}

TEST_CASE("compiled formulas agree with the tree evaluator") {
  std::mt19937 rng(23);
  std::vector<std::string> vars{"p", "q"};
  Frame frames[] = {
      Frame({"a", "b"}, std::vector<std::pair<int, int>>{{0, 0}, {1, 1}, {0, 1}}),
      Frame({"a", "b", "c"},
            std::vector<std::pair<int, int>>{{0, 0}, {1, 1}, {2, 2}, {0, 1}, {1, 0}, {1, 2}, {2, 1}}),
  };
  for (const Frame& fr : frames) {
    auto fps = wb::fixpoints(fr);
    for (int i = 0; i < 200; ++i) {
      Formula f = wbt::random_formula(rng, vars, 4);
      wb::CompiledFormula cf = wb::CompiledFormula::compile(f);
      std::uniform_int_distribution<std::size_t> pick(0, fps.size() - 1);
      Model m{fr, {{"p", fps[pick(rng)]}, {"q", fps[pick(rng)]}}};
      std::vector<StateSet> slots;
      for (const auto& v : cf.vars()) slots.push_back(m.valuation.at(v));
      for (auto sem : {SemanticsId::Fixpoint, SemanticsId::Fine})
        CHECK(cf.eval(fr, slots.data(), sem) == wb::eval(m, f, sem));
    }
  }
}
