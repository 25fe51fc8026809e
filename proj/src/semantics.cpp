#include "workbench/semantics.hpp"

#include <stdexcept>
#include <unordered_map>

namespace wb {

std::vector<FixpointViolation> validate_fixpoint_model(const Model& m) {
  std::vector<FixpointViolation> out;
  for (const auto& [var, ext] : m.valuation) {
    if (ext & ~m.frame.all())
      throw std::invalid_argument("valuation of '" + var + "' references unknown state");
    StateSet closed = closure(m.frame, ext);
    for (int x : set_bits(closed & ~ext)) out.push_back({var, x});
  }
  return out;
}

StateSet neg_ext(const Frame& frame, StateSet a) {
  StateSet out = 0;
  for (int x = 0; x < frame.size(); ++x)
    if (!(frame.pred(x) & a)) out |= StateSet{1} << x;
  return out;
}

StateSet or_ext(const Frame& frame, StateSet a, StateSet b, SemanticsId sem) {
  return sem == SemanticsId::Fine ? (a | b) : closure(frame, a | b);
}

namespace {

StateSet eval_rec(const Model& m, const Formula& f, SemanticsId sem, bool strict,
                  std::unordered_map<Formula, StateSet, FormulaHash>& memo) {
  auto it = memo.find(f);
  if (it != memo.end()) return it->second;
  StateSet out = 0;
  switch (f.kind()) {
    case Formula::Kind::Var: {
      auto v = m.valuation.find(f.name());
      if (v == m.valuation.end()) {
        if (strict) throw std::invalid_argument("unknown variable '" + f.name() + "'");
      } else {
        out = v->second;
      }
      break;
    }
    case Formula::Kind::Neg:
      out = neg_ext(m.frame, eval_rec(m, f.child(), sem, strict, memo));
      break;
    case Formula::Kind::And:
      out = eval_rec(m, f.left(), sem, strict, memo) &
            eval_rec(m, f.right(), sem, strict, memo);
      break;
    case Formula::Kind::Or:
      out = or_ext(m.frame, eval_rec(m, f.left(), sem, strict, memo),
                   eval_rec(m, f.right(), sem, strict, memo), sem);
      break;
  }
  memo.emplace(f, out);
  return out;
}

}  // namespace

StateSet eval(const Model& m, const Formula& f, SemanticsId sem, bool strict) {
  if (sem == SemanticsId::Fixpoint && !validate_fixpoint_model(m).empty())
    throw std::invalid_argument("model violates the fixpoint constraint");
  std::unordered_map<Formula, StateSet, FormulaHash> memo;
  return eval_rec(m, f, sem, strict, memo);
}

AcceptReject accepts_rejects(const Model& m, const Formula& f, int x, SemanticsId sem) {
  if (x < 0 || x >= m.frame.size()) throw std::out_of_range("unknown state index");
  StateSet ext = eval(m, f, sem);
  AcceptReject r;
  r.accepts = (ext >> x) & 1;
  r.rejects = (m.frame.succ(x) & ext) == 0;
  r.accepts_negation = (m.frame.pred(x) & ext) == 0;
  return r;
}

std::optional<Counterexample> consequence_over(const std::vector<Model>& models,
                                               const Sequent& s, SemanticsId sem) {
  for (std::size_t i = 0; i < models.size(); ++i) {
    StateSet lhs = eval(models[i], s.lhs, sem);
    StateSet rhs = eval(models[i], s.rhs, sem);
    StateSet bad = lhs & ~rhs;
    if (bad) return Counterexample{i, std::countr_zero(bad)};
  }
  return std::nullopt;
}

CompiledFormula CompiledFormula::compile(const Formula& f) {
  CompiledFormula out;
  std::unordered_map<Formula, int, FormulaHash> reg;
  std::unordered_map<std::string, int> var_slot;
  // Explicit stack postorder to keep shared subtrees deduplicated.
  auto compile_rec = [&](auto&& self, const Formula& g) -> int {
    auto it = reg.find(g);
    if (it != reg.end()) return it->second;
    Op op;
    op.kind = g.kind();
    switch (g.kind()) {
      case Formula::Kind::Var: {
        auto [vit, inserted] = var_slot.try_emplace(g.name(), (int)out.vars_.size());
        if (inserted) out.vars_.push_back(g.name());
        op.var_slot = vit->second;
        break;
      }
      case Formula::Kind::Neg:
        op.a = self(self, g.child());
        break;
      case Formula::Kind::And:
      case Formula::Kind::Or:
        op.a = self(self, g.left());
        op.b = self(self, g.right());
        break;
    }
    int r = (int)out.ops_.size();
    out.ops_.push_back(op);
    reg.emplace(g, r);
    return r;
  };
  compile_rec(compile_rec, f);
  return out;
}

StateSet CompiledFormula::eval(const Frame& frame, const StateSet* var_vals,
                               SemanticsId sem) const {
  StateSet regs[256];
  std::vector<StateSet> heap;
  StateSet* r = regs;
  if (ops_.size() > 256) {
    heap.resize(ops_.size());
    r = heap.data();
  }
  for (std::size_t i = 0; i < ops_.size(); ++i) {
    const Op& op = ops_[i];
    switch (op.kind) {
      case Formula::Kind::Var:
        r[i] = var_vals[op.var_slot];
        break;
      case Formula::Kind::Neg:
        r[i] = neg_ext(frame, r[op.a]);
        break;
      case Formula::Kind::And:
        r[i] = r[op.a] & r[op.b];
        break;
      case Formula::Kind::Or:
        r[i] = or_ext(frame, r[op.a], r[op.b], sem);
        break;
    }
  }
  return r[ops_.size() - 1];
}

}  // namespace wb
