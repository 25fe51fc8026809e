#ifndef WORKBENCH_LATTICE_HPP
#define WORKBENCH_LATTICE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "workbench/frame.hpp"

namespace wb {

/// Finite bounded lattice with a unary negation table. Built from element
/// labels, an order given as leq pairs (reflexive-transitive closure applied
/// on load), and the neg table; meets and joins are computed and their
/// existence validated. At most 16 elements.
class Lattice {
 public:
  Lattice(std::vector<std::string> elements, const std::vector<std::pair<int, int>>& leq_pairs,
          std::vector<int> neg);

  static Lattice from_json(const nlohmann::json& j);
  static Lattice load_file(const std::string& path);

  int size() const { return static_cast<int>(elements_.size()); }
  const std::vector<std::string>& elements() const { return elements_; }
  const std::string& label(int a) const { return elements_[a]; }
  int index_of(const std::string& label) const;  // -1 if unknown

  bool leq(int a, int b) const { return leq_[a * size() + b]; }
  int meet(int a, int b) const { return meet_[a * size() + b]; }
  int join(int a, int b) const { return join_[a * size() + b]; }
  int bottom() const { return bottom_; }
  int top() const { return top_; }
  int neg(int a) const { return neg_[a]; }

 private:
  std::vector<std::string> elements_;
  std::vector<char> leq_;
  std::vector<int> meet_, join_, neg_;
  int bottom_ = -1, top_ = -1;
};

struct LawCheck {
  bool pass;
  std::vector<std::string> violations;
};

/// a & ~a = 0, a <= ~~a, and a <= b implies ~b <= ~a, checked exhaustively.
LawCheck check_weak_pseudocomplementation(const Lattice& l);

/// a & (b | c) = (a & b) | (a & c) for all triples; witness on failure.
LawCheck check_distributive(const Lattice& l);

using LatticeSet = std::uint32_t;  // subset of lattice elements, one bit each

/// All nonempty proper upward-closed meet-closed join-prime subsets, by
/// exhaustive scan. Requires a distributive lattice.
std::vector<LatticeSet> prime_filters(const Lattice& l);

struct RepCheck {
  std::string name;
  bool pass;
  std::string detail;
};

struct Representation {
  Frame frame;                     // states are the prime filters
  std::vector<StateSet> embedding; // embedding[a] = {F : a in F}
  std::vector<RepCheck> checks;
  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

/// Prime-filter frame with F related to F' iff there is no a with a in F and
/// ~a in F', plus the embedding e(a) = {F : a in F} and a report verifying:
/// the relation is reflexive and symmetric; e is injective; e preserves meet
/// (intersection), join (union), bottom, top, and negation (the semantic
/// negation over the relation). Requires distributivity and a weak
/// pseudocomplementation.
Representation represent(const Lattice& l);

}  // namespace wb

#endif
