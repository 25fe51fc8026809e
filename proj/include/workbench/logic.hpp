#ifndef WORKBENCH_LOGIC_HPP
#define WORKBENCH_LOGIC_HPP

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "workbench/formula.hpp"
#include "workbench/frame.hpp"
#include "workbench/semantics.hpp"

namespace wb {

enum class LogicId { Fundamental, Ortho, Compatibility, Intuitionistic, Classical };

LogicId logic_from_string(const std::string& name);
std::string to_string(LogicId logic);

/// Frame class whose fixpoint (or Fine) models are sound for the logic.
RelClass logic_frame_class(LogicId logic);
SemanticsId logic_semantics(LogicId logic);

struct Budget {
  int max_size = 5;
  int universe_depth = 2;
  std::size_t universe_cap = 2000;
};

struct TraceStep {
  std::string rule;
  Sequent conclusion;
  std::vector<Sequent> premises;
};

/// Forward saturation of the intro-elim rules plus the logic's extensions
/// over a bounded formula universe. Sound; absence is not refutation.
class SaturationResult {
 public:
  const std::vector<Formula>& universe() const { return universe_; }
  bool derives(const Formula& a, const Formula& b) const;
  std::vector<Sequent> derived_sequents() const;
  bool goal_derived() const { return goal_derived_; }
  const std::vector<TraceStep>& goal_trace() const { return goal_trace_; }

 private:
  friend SaturationResult saturate(const Sequent&, LogicId, int, std::size_t);
  std::vector<Formula> universe_;
  std::vector<StateSet> dummy_;  // unused; keeps layout simple
  std::vector<std::vector<std::uint64_t>> derived_;
  bool goal_derived_ = false;
  std::vector<TraceStep> goal_trace_;
  int index_of(const Formula& f) const;
};

SaturationResult saturate(const Sequent& goal, LogicId logic, int universe_depth = 2,
                          std::size_t universe_cap = 2000);

/// Verifies that every step of a trace instantiates a rule admitted by the
/// logic and that the last step concludes the goal.
bool replay_trace(const std::vector<TraceStep>& trace, const Sequent& goal, LogicId logic);

struct CountermodelResult {
  Model model;
  int state;
};

/// Exhaustive refutation search over the logic's frame class up to max_size
/// states. Fixpoint semantics assigns each goal variable every fixpoint;
/// Fine semantics every subset. jobs==1 forces the serial reference path;
/// jobs==0 uses the OpenMP default. Deterministic first hit either way.
std::optional<CountermodelResult> find_countermodel(const Sequent& goal, LogicId logic,
                                                    int max_size, int jobs = 0);

struct Valid {
  std::vector<TraceStep> trace;
};
struct Invalid {
  Model model;
  int state;
};
struct Unknown {
  int max_size;
  int universe_depth;
};
using Verdict = std::variant<Valid, Invalid, Unknown>;

bool is_valid(const Verdict& v);
bool is_invalid(const Verdict& v);
bool is_unknown(const Verdict& v);

Verdict check(const Sequent& goal, LogicId logic, const Budget& budget = {}, int jobs = 0);

enum class Agreement { Agree, Disagree, Inconclusive };

struct EmbeddingReport {
  Sequent translated;
  Verdict ortho;
  Verdict fundamental;
  Agreement agreement;
};

/// Compares check(goal, ortho) with check(g(lhs) |- g(rhs), fundamental).
EmbeddingReport gg_embedding_check(const Sequent& goal, const Budget& budget = {},
                                   int jobs = 0);

}  // namespace wb

#endif
