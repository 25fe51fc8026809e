#ifndef WORKBENCH_SEMANTICS_HPP
#define WORKBENCH_SEMANTICS_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "workbench/formula.hpp"
#include "workbench/frame.hpp"

namespace wb {

enum class SemanticsId { Fixpoint, Fine };

struct Model {
  Frame frame;
  std::map<std::string, StateSet> valuation;
};

struct FixpointViolation {
  std::string var;
  int state;  // in c(V(p)) but not in V(p)
};

/// Empty iff every V(p) is a fixpoint of the closure operator.
std::vector<FixpointViolation> validate_fixpoint_model(const Model& m);

/// Extension of f in m. Fixpoint semantics requires a fixpoint model
/// (throws otherwise); Fine semantics accepts any valuation. With strict
/// set, an unknown variable is an error; otherwise it evaluates to the
/// empty set.
StateSet eval(const Model& m, const Formula& f, SemanticsId sem, bool strict = true);

struct AcceptReject {
  bool accepts;
  bool rejects;
  bool accepts_negation;
};

AcceptReject accepts_rejects(const Model& m, const Formula& f, int x, SemanticsId sem);

struct Counterexample {
  std::size_t model_index;
  int state;
};

/// nullopt when the consequence holds over all models; otherwise the first
/// counterexample in (model index, state) order.
std::optional<Counterexample> consequence_over(const std::vector<Model>& models,
                                               const Sequent& s, SemanticsId sem);

/// Formula flattened to a postorder op list for repeated evaluation against
/// varying frames and valuations. Shared subformulas are evaluated once.
class CompiledFormula {
 public:
  static CompiledFormula compile(const Formula& f);

  const std::vector<std::string>& vars() const { return vars_; }

  /// var_vals[i] is the extension of vars()[i].
  StateSet eval(const Frame& frame, const StateSet* var_vals, SemanticsId sem) const;

 private:
  struct Op {
    Formula::Kind kind;
    int a = -1, b = -1;  // operand registers
    int var_slot = -1;
  };
  std::vector<Op> ops_;
  std::vector<std::string> vars_;
};

/// Negation and disjunction as set operations (the semantic clauses applied
/// pointwise); used by the rule-soundness sweeps.
StateSet neg_ext(const Frame& frame, StateSet a);
StateSet or_ext(const Frame& frame, StateSet a, StateSet b, SemanticsId sem);

}  // namespace wb

#endif
