#include <doctest.h>

#include <sstream>

#include <nlohmann/json.hpp>

#include "workbench/model_io.hpp"
#include "workbench/semantics.hpp"
#include "workbench/sorites.hpp"

using wb::Model;
using wb::SemanticsId;
using wb::StateSet;

TEST_CASE("sorites model shapes") {
  Model s = wb::build_symmetric({4, 1});
  CHECK(s.frame.size() == 12);
  CHECK(s.frame.index_of("(-inf,inf)") >= 0);
  CHECK(s.frame.index_of("(0,3)") >= 0);
  CHECK(s.frame.index_of("(3,inf)") >= 0);
  CHECK(s.frame.index_of("(0,1)") == -1);  // needs i + delta < j
  auto flags = wb::class_check(s.frame);
  CHECK(flags.reflexive);
  CHECK(flags.symmetric);

  Model p = wb::build_pseudosymmetric({4, 1});
  CHECK(p.frame.size() == 16);
  CHECK(p.frame.index_of("r0") >= 0);
  CHECK(p.frame.index_of("r3") >= 0);
  auto pflags = wb::class_check(p.frame);
  CHECK(pflags.reflexive);
  CHECK(pflags.pseudosymmetric);
  CHECK_FALSE(pflags.symmetric);

  // compatibility: overlapping admissible uses
  int a = s.frame.index_of("(0,3)"), b = s.frame.index_of("(1,3)");
  CHECK(s.frame.rel(a, b));
  CHECK(s.frame.rel(b, a));
  int c = s.frame.index_of("(-inf,0)"), d = s.frame.index_of("(3,inf)");
  CHECK_FALSE(s.frame.rel(c, d));

  // rejector r1 sees exactly the pairs straddling 1, and everyone sees it
  int r1 = p.frame.index_of("r1");
  CHECK(p.frame.rel(r1, p.frame.index_of("(0,3)")));
  CHECK_FALSE(p.frame.rel(r1, p.frame.index_of("(1,3)")));
  for (int x = 0; x < p.frame.size(); ++x) CHECK(p.frame.rel(x, r1));

  CHECK_THROWS_AS(wb::build_symmetric({3, 2}), std::invalid_argument);
}

TEST_CASE("sorites valuations are fixpoints and match the atom identity") {
  for (int n : {3, 5}) {
    wb::SoritesParams params{n, 1};
    Model s = wb::build_symmetric(params);
    CHECK(wb::validate_fixpoint_model(s).empty());
    for (int k = 0; k < n; ++k) {
      StateSet ext = wb::eval(s, wb::parse("p" + std::to_string(k)), SemanticsId::Fixpoint);
      CHECK(ext == s.valuation.at("p" + std::to_string(k)));
    }
  }
}

TEST_CASE("fact reports") {
  auto sym = wb::verify_facts({4, 1}, wb::SoritesKind::Symmetric);
  CHECK(sym.all_pass());
  CHECK(sym.checks.size() > 10);
  auto pse = wb::verify_facts({4, 1}, wb::SoritesKind::Pseudosymmetric);
  CHECK(pse.all_pass());
  bool saw_em = false, saw_deny = false;
  for (const auto& c : pse.checks) {
    if (c.name.rfind("EMExt", 0) == 0) saw_em = true;
    if (c.name.rfind("DenyLEMs", 0) == 0) saw_deny = true;
  }
  CHECK(saw_em);
  CHECK(saw_deny);
}

TEST_CASE("sorites formula is satisfied at the borderline-everywhere state") {
  Model s = wb::build_symmetric({4, 1});
  StateSet sat = wb::eval(s, wb::sorites_formula({4, 1}), SemanticsId::Fixpoint);
  int joint = s.frame.index_of("(0,3)");
  CHECK(((sat >> joint) & 1));
}

TEST_CASE("dot export") {
  wb::Frame f({"a", "b", "c"},
              std::vector<std::pair<int, int>>{{0, 0}, {1, 1}, {2, 2}, {0, 1}, {1, 0}, {2, 0}});
  std::ostringstream out;
  wb::export_dot(f, out);
  std::string dot = out.str();
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(dot.find("n0 -> n1 [dir=none];") != std::string::npos);  // mutual pair
  CHECK(dot.find("n0 -> n2;") != std::string::npos);  // c <| a drawn from a to c
  CHECK(dot.find("n0 -> n0") == std::string::npos);   // self-loops suppressed
  CHECK(dot.find("label=\"b\"") != std::string::npos);
}

TEST_CASE("model json round trip") {
  Model p = wb::build_pseudosymmetric({3, 1});
  auto j = wb::model_to_json(p);
  Model back = wb::model_from_json(j);
  CHECK(back.frame.states() == p.frame.states());
  for (int x = 0; x < p.frame.size(); ++x) CHECK(back.frame.succ(x) == p.frame.succ(x));
  CHECK(back.valuation == p.valuation);
}
