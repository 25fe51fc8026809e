#ifndef WORKBENCH_SORITES_HPP
#define WORKBENCH_SORITES_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "workbench/formula.hpp"
#include "workbench/semantics.hpp"

namespace wb {

/// Symmetric Sorites model: states are pairs (i,j) over n u {-inf,inf} with
/// i+delta < j; (i,j) related to (i',j') iff max(i,i') < min(j,j');
/// V(pk) = {(i,j) | k <= i}. State labels are "(i,j)" with -inf/inf.
Model build_symmetric(const SoritesParams& params);

/// Adds a rejector state "rk" for each k in n: rk related to (i,j) iff
/// i < k < j, and every state is related to every rejector. Valuation is
/// inherited; rejectors belong to no V(pk).
Model build_pseudosymmetric(const SoritesParams& params);

enum class SoritesKind { Symmetric, Pseudosymmetric };

struct FactCheck {
  std::string name;
  bool pass;
  std::string detail;  // witness description on failure
};

struct FactReport {
  std::vector<FactCheck> checks;
  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

/// Checks each extension identity of the model family by direct evaluation
/// against independently computed expected sets.
FactReport verify_facts(const SoritesParams& params, SoritesKind kind);

/// Undirected edge for mutual pairs; directed edge drawn from y to x for
/// one-way x <| y; self-loops suppressed.
void export_dot(const Frame& frame, std::ostream& out);
void export_dot_file(const Frame& frame, const std::string& path);

}  // namespace wb

#endif
