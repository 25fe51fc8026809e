#include <chrono>
#include <iostream>
#include <string>
#include <vector>

#include "workbench/formula.hpp"
#include "workbench/logic.hpp"

// Times the serial reference path (jobs=1) against the OpenMP default for
// the countermodel search on a few saturation-resistant goals.

namespace {

double run(const wb::Sequent& goal, wb::LogicId logic, int max_size, int jobs,
           bool* found = nullptr) {
  auto t0 = std::chrono::steady_clock::now();
  auto cm = wb::find_countermodel(goal, logic, max_size, jobs);
  auto t1 = std::chrono::steady_clock::now();
  if (found) *found = cm.has_value();
  return std::chrono::duration<double>(t1 - t0).count();
}

}  // namespace

int main() {
  struct Case {
    const char* name;
    const char* sequent;
    wb::LogicId logic;
    int max_size;
  };
  std::vector<Case> cases = {
      {"distributivity/ortho", "p & (q | r) |- (p & q) | (p & r)", wb::LogicId::Ortho, 6},
      {"dne/fundamental", "~~p |- p", wb::LogicId::Fundamental, 4},
      {"massas/compatibility",
       "~(~p | ~(q | r)) |- ~(~p | ~q) | ~(~p | ~r)", wb::LogicId::Compatibility, 4},
      {"sorites41/intuitionistic",
       nullptr, wb::LogicId::Intuitionistic, 5},
  };
  wb::Sequent sorites{wb::sorites_formula({4, 1}), wb::Formula::bottom()};

  std::cout << "case, serial_s, parallel_s, speedup, agree\n";
  for (const auto& c : cases) {
    wb::Sequent goal = c.sequent ? wb::parse_sequent(c.sequent) : sorites;
    bool f1 = false, f2 = false;
    // warm the frame enumeration cache so both paths time the search itself
    run(goal, c.logic, c.max_size, 1, &f1);
    double serial = run(goal, c.logic, c.max_size, 1, &f1);
    double parallel = run(goal, c.logic, c.max_size, 0, &f2);
    std::cout << c.name << ", " << serial << ", " << parallel << ", "
              << (parallel > 0 ? serial / parallel : 0.0) << ", "
              << (f1 == f2 ? "yes" : "NO") << "\n";
  }
  return 0;
}
