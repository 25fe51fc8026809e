#ifndef TESTS_HELPERS_HPP
#define TESTS_HELPERS_HPP

#include <random>
#include <string>
#include <vector>

#include "workbench/formula.hpp"

namespace wbt {

inline wb::Formula random_formula(std::mt19937& rng, const std::vector<std::string>& vars,
                                  int depth) {
  std::uniform_int_distribution<int> kind(0, depth <= 0 ? 0 : 3);
  std::uniform_int_distribution<int> var(0, (int)vars.size() - 1);
  switch (kind(rng)) {
    case 1:
      return wb::Formula::neg(random_formula(rng, vars, depth - 1));
    case 2:
      return wb::Formula::conj(random_formula(rng, vars, depth - 1),
                               random_formula(rng, vars, depth - 1));
    case 3:
      return wb::Formula::disj(random_formula(rng, vars, depth - 1),
                               random_formula(rng, vars, depth - 1));
    default:
      return wb::Formula::var(vars[var(rng)]);
  }
}

// or-free variant for the equivalence-of-semantics checks
inline wb::Formula random_or_free(std::mt19937& rng, const std::vector<std::string>& vars,
                                  int depth) {
  std::uniform_int_distribution<int> kind(0, depth <= 0 ? 0 : 2);
  std::uniform_int_distribution<int> var(0, (int)vars.size() - 1);
  switch (kind(rng)) {
    case 1:
      return wb::Formula::neg(random_or_free(rng, vars, depth - 1));
    case 2:
      return wb::Formula::conj(random_or_free(rng, vars, depth - 1),
                               random_or_free(rng, vars, depth - 1));
    default:
      return wb::Formula::var(vars[var(rng)]);
  }
}

}  // namespace wbt

#endif
