#include "workbench/logic.hpp"

#include <algorithm>
#include <atomic>
#include <cstring>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace wb {

LogicId logic_from_string(const std::string& name) {
  if (name == "fundamental") return LogicId::Fundamental;
  if (name == "ortho") return LogicId::Ortho;
  if (name == "compatibility") return LogicId::Compatibility;
  if (name == "intuitionistic") return LogicId::Intuitionistic;
  if (name == "classical") return LogicId::Classical;
  throw std::invalid_argument("unknown logic '" + name + "'");
}

std::string to_string(LogicId logic) {
  switch (logic) {
    case LogicId::Fundamental: return "fundamental";
    case LogicId::Ortho: return "ortho";
    case LogicId::Compatibility: return "compatibility";
    case LogicId::Intuitionistic: return "intuitionistic";
    case LogicId::Classical: return "classical";
  }
  return "?";
}

RelClass logic_frame_class(LogicId logic) {
  RelClass c;
  c.reflexive = true;
  switch (logic) {
    case LogicId::Fundamental: c.pseudosymmetric = true; break;
    case LogicId::Ortho: c.symmetric = true; break;
    case LogicId::Compatibility: c.symmetric = true; break;
    case LogicId::Intuitionistic: c.transitive = true; break;
    case LogicId::Classical:
      c.symmetric = true;
      c.compossible = true;
      break;
  }
  return c;
}

SemanticsId logic_semantics(LogicId logic) {
  return logic == LogicId::Compatibility ? SemanticsId::Fine : SemanticsId::Fixpoint;
}

namespace {

bool admits_dne(LogicId l) { return l == LogicId::Ortho || l == LogicId::Classical; }
bool admits_pcs(LogicId l) {
  return l == LogicId::Compatibility || l == LogicId::Intuitionistic ||
         l == LogicId::Classical;
}
bool admits_pseudo(LogicId l) {
  return l == LogicId::Intuitionistic || l == LogicId::Classical;
}

enum Rule : int {
  kRefl,
  kAndElimL,
  kAndElimR,
  kOrIntroL,
  kOrIntroR,
  kDni,
  kExplosion,
  kCut,
  kAndIntro,
  kOrElim,
  kContraposition,
  kDne,
  kPcs,
  kPseudo,
};

const char* rule_name(int r) {
  static const char* names[] = {"refl",      "and-elim-l", "and-elim-r", "or-intro-l",
                                "or-intro-r", "dni",        "explosion",  "cut",
                                "and-intro",  "or-elim",    "contraposition", "dne",
                                "pcs",        "pseudocomplementation"};
  return names[r];
}

void collect_postorder(const Formula& f, std::vector<Formula>& out, FormulaSet& seen) {
  if (seen.count(f)) return;
  switch (f.kind()) {
    case Formula::Kind::Var:
      break;
    case Formula::Kind::Neg:
      collect_postorder(f.child(), out, seen);
      break;
    case Formula::Kind::And:
    case Formula::Kind::Or:
      collect_postorder(f.left(), out, seen);
      collect_postorder(f.right(), out, seen);
      break;
  }
  if (seen.insert(f).second) out.push_back(f);
}

struct Engine {
  std::vector<Formula> U;
  std::unordered_map<Formula, int, FormulaHash> idx;
  int n = 0;
  int words = 0;

  struct Shape {
    Formula::Kind kind;
    int a = -1, b = -1;  // child indices
    int neg = -1;        // index of ~f if present in U
    bool contra = false; // shape f & ~f
  };
  std::vector<Shape> shape;
  std::vector<int> and_list, or_list, contra_list;
  std::vector<std::uint64_t> contra_mask;

  std::vector<std::uint64_t> D;  // n rows of `words` words
  struct Prov {
    std::int8_t rule = -1;
    int p1 = -1, p2 = -1;
  };
  std::vector<Prov> prov;
  bool changed = false;

  int add(const Formula& f) {
    auto it = idx.find(f);
    if (it != idx.end()) return it->second;
    if (f.kind() == Formula::Kind::Neg) add(f.child());
    if (f.kind() == Formula::Kind::And || f.kind() == Formula::Kind::Or) {
      add(f.left());
      add(f.right());
    }
    int i = (int)U.size();
    U.push_back(f);
    idx.emplace(f, i);
    return i;
  }

  void finalize_universe() {
    n = (int)U.size();
    words = (n + 63) / 64;
    shape.resize(n);
    for (int i = 0; i < n; ++i) {
      const Formula& f = U[i];
      shape[i].kind = f.kind();
      if (f.kind() == Formula::Kind::Neg) shape[i].a = idx.at(f.child());
      if (f.kind() == Formula::Kind::And || f.kind() == Formula::Kind::Or) {
        shape[i].a = idx.at(f.left());
        shape[i].b = idx.at(f.right());
      }
      auto nit = idx.find(Formula::neg(f));
      if (nit != idx.end()) shape[i].neg = nit->second;
    }
    contra_mask.assign(words, 0);
    for (int i = 0; i < n; ++i) {
      if (shape[i].kind == Formula::Kind::And) {
        and_list.push_back(i);
        const Formula& f = U[i];
        if (f.right().kind() == Formula::Kind::Neg && f.right().child() == f.left()) {
          shape[i].contra = true;
          contra_list.push_back(i);
          contra_mask[i / 64] |= std::uint64_t{1} << (i % 64);
        }
      }
      if (shape[i].kind == Formula::Kind::Or) or_list.push_back(i);
    }
    D.assign((std::size_t)n * words, 0);
    prov.assign((std::size_t)n * n, Prov{});
  }

  bool test(int a, int b) const {
    return (D[(std::size_t)a * words + b / 64] >> (b % 64)) & 1;
  }

  void set(int a, int b, int rule, int p1 = -1, int p2 = -1) {
    std::uint64_t& w = D[(std::size_t)a * words + b / 64];
    std::uint64_t bit = std::uint64_t{1} << (b % 64);
    if (w & bit) return;
    w |= bit;
    Prov& p = prov[(std::size_t)a * n + b];
    p.rule = (std::int8_t)rule;
    p.p1 = p1;
    p.p2 = p2;
    changed = true;
  }

  template <typename F>
  void for_bits(int row, F f) const {
    const std::uint64_t* r = &D[(std::size_t)row * words];
    for (int w = 0; w < words; ++w) {
      std::uint64_t bits = r[w];
      while (bits) {
        f(w * 64 + std::countr_zero(bits));
        bits &= bits - 1;
      }
    }
  }

  int sid(int a, int b) const { return a * n + b; }

  void axioms(LogicId logic) {
    for (int i = 0; i < n; ++i) set(i, i, kRefl);
    for (int c : and_list) {
      set(c, shape[c].a, kAndElimL);
      set(c, shape[c].b, kAndElimR);
    }
    for (int d : or_list) {
      set(shape[d].a, d, kOrIntroL);
      set(shape[d].b, d, kOrIntroR);
    }
    for (int i = 0; i < n; ++i) {
      int ni = shape[i].neg;
      if (ni >= 0 && shape[ni].neg >= 0) {
        set(i, shape[ni].neg, kDni);
        if (admits_dne(logic)) set(shape[ni].neg, i, kDne);
      }
    }
    for (int c : contra_list)
      for (int g = 0; g < n; ++g) set(c, g, kExplosion);
  }

  void run(LogicId logic) {
    axioms(logic);
    // PCS instances a & (x | y) where a & x and a & y are in the universe.
    struct PcsInst {
      int e, ax, ay;
    };
    std::vector<PcsInst> pcs_insts;
    if (admits_pcs(logic)) {
      for (int e : and_list) {
        int d = shape[e].b;
        if (shape[d].kind != Formula::Kind::Or) continue;
        auto ax = idx.find(Formula::conj(U[shape[e].a], U[shape[d].a]));
        auto ay = idx.find(Formula::conj(U[shape[e].a], U[shape[d].b]));
        if (ax != idx.end() && ay != idx.end())
          pcs_insts.push_back({e, ax->second, ay->second});
      }
    }
    do {
      changed = false;
      // cut
      for (int a = 0; a < n; ++a)
        for_bits(a, [&](int b) {
          if (b == a) return;
          for (int w = 0; w < words; ++w) {
            std::uint64_t fresh = D[(std::size_t)b * words + w] & ~D[(std::size_t)a * words + w];
            while (fresh) {
              int c = w * 64 + std::countr_zero(fresh);
              fresh &= fresh - 1;
              set(a, c, kCut, sid(a, b), sid(b, c));
            }
          }
        });
      // and-intro
      for (int c : and_list)
        for (int phi = 0; phi < n; ++phi)
          if (!test(phi, c) && test(phi, shape[c].a) && test(phi, shape[c].b))
            set(phi, c, kAndIntro, sid(phi, shape[c].a), sid(phi, shape[c].b));
      // or-elim
      for (int d : or_list) {
        int x = shape[d].a, y = shape[d].b;
        for (int w = 0; w < words; ++w) {
          std::uint64_t both = D[(std::size_t)x * words + w] & D[(std::size_t)y * words + w] &
                               ~D[(std::size_t)d * words + w];
          while (both) {
            int chi = w * 64 + std::countr_zero(both);
            both &= both - 1;
            set(d, chi, kOrElim, sid(x, chi), sid(y, chi));
          }
        }
      }
      // contraposition
      for (int phi = 0; phi < n; ++phi) {
        int nphi = shape[phi].neg;
        if (nphi < 0) continue;
        for_bits(phi, [&](int psi) {
          int npsi = shape[psi].neg;
          if (npsi >= 0 && !test(npsi, nphi))
            set(npsi, nphi, kContraposition, sid(phi, psi));
        });
      }
      // proof-by-cases with side assumptions
      for (const auto& inst : pcs_insts)
        for (int w = 0; w < words; ++w) {
          std::uint64_t both = D[(std::size_t)inst.ax * words + w] &
                               D[(std::size_t)inst.ay * words + w] &
                               ~D[(std::size_t)inst.e * words + w];
          while (both) {
            int chi = w * 64 + std::countr_zero(both);
            both &= both - 1;
            set(inst.e, chi, kPcs, sid(inst.ax, chi), sid(inst.ay, chi));
          }
        }
      // pseudocomplementation
      if (admits_pseudo(logic))
        for (int c : and_list) {
          int psi = shape[c].b, nphi = shape[shape[c].a].neg;
          if (nphi < 0 || test(psi, nphi)) continue;
          for (int w = 0; w < words; ++w) {
            std::uint64_t hit = D[(std::size_t)c * words + w] & contra_mask[w];
            if (hit) {
              int t = w * 64 + std::countr_zero(hit);
              set(psi, nphi, kPseudo, sid(c, t));
              break;
            }
          }
        }
    } while (changed);
  }
};

}  // namespace

int SaturationResult::index_of(const Formula& f) const {
  for (int i = 0; i < (int)universe_.size(); ++i)
    if (universe_[i] == f) return i;
  return -1;
}

bool SaturationResult::derives(const Formula& a, const Formula& b) const {
  int ia = index_of(a), ib = index_of(b);
  if (ia < 0 || ib < 0) return false;
  return (derived_[ia][ib / 64] >> (ib % 64)) & 1;
}

std::vector<Sequent> SaturationResult::derived_sequents() const {
  std::vector<Sequent> out;
  for (std::size_t a = 0; a < universe_.size(); ++a)
    for (std::size_t b = 0; b < universe_.size(); ++b)
      if ((derived_[a][b / 64] >> (b % 64)) & 1)
        out.push_back({universe_[a], universe_[b]});
  return out;
}

SaturationResult saturate(const Sequent& goal, LogicId logic, int universe_depth,
                          std::size_t universe_cap) {
  if (universe_depth < 0) throw std::invalid_argument("universe_depth must be >= 0");
  Engine eng;
  // Universe: subformula closure of the goal and _bot, negation stacks up to
  // universe_depth, contradiction shapes f & ~f, and goal-assumption meets
  // f & lhs (the forms pseudocomplementation reasons about).
  std::vector<Formula> base;
  FormulaSet seen;
  collect_postorder(goal.lhs, base, seen);
  collect_postorder(goal.rhs, base, seen);
  collect_postorder(Formula::var(Formula::bottom_var()), base, seen);
  for (const Formula& f : base) eng.add(f);
  for (const Formula& f : base) {
    Formula cur = f;
    for (int k = 0; k < universe_depth; ++k) {
      cur = Formula::neg(cur);
      eng.add(cur);
    }
  }
  std::vector<Formula> stacked = eng.U;
  for (const Formula& f : stacked) eng.add(Formula::conj(f, Formula::neg(f)));
  for (const Formula& f : stacked) eng.add(Formula::conj(f, goal.lhs));
  if (eng.U.size() > universe_cap)
    throw std::runtime_error("saturation universe size cap exceeded (" +
                             std::to_string(eng.U.size()) + " > " +
                             std::to_string(universe_cap) + ")");
  eng.finalize_universe();
  eng.run(logic);

  SaturationResult res;
  res.universe_ = eng.U;
  res.derived_.assign(eng.n, std::vector<std::uint64_t>(eng.words, 0));
  for (int a = 0; a < eng.n; ++a)
    std::memcpy(res.derived_[a].data(), &eng.D[(std::size_t)a * eng.words],
                eng.words * sizeof(std::uint64_t));

  int gl = eng.idx.at(goal.lhs), gr = eng.idx.at(goal.rhs);
  res.goal_derived_ = eng.test(gl, gr);
  if (res.goal_derived_) {
    // Reconstruct the first derivation found, premises before conclusions.
    std::vector<int> stack{eng.sid(gl, gr)};
    std::unordered_set<int> visited, emitted;
    while (!stack.empty()) {
      int id = stack.back();
      const auto& p = eng.prov[id];
      std::vector<int> prems;
      if (p.p1 >= 0) prems.push_back(p.p1);
      if (p.p2 >= 0) prems.push_back(p.p2);
      bool ready = true;
      if (visited.insert(id).second) {
        for (int q : prems)
          if (!emitted.count(q)) {
            stack.push_back(q);
            ready = false;
          }
        if (!ready) continue;
      }
      stack.pop_back();
      if (emitted.count(id)) continue;
      for (int q : prems)
        if (!emitted.count(q)) {
          // premise cycle cannot happen with first-derivation provenance
          throw std::logic_error("trace reconstruction failed");
        }
      TraceStep step;
      step.rule = rule_name(p.rule);
      step.conclusion = {eng.U[id / eng.n], eng.U[id % eng.n]};
      for (int q : prems) step.premises.push_back({eng.U[q / eng.n], eng.U[q % eng.n]});
      res.goal_trace_.push_back(std::move(step));
      emitted.insert(id);
    }
  }
  return res;
}

namespace {

bool contra_shape(const Formula& f) {
  return f.kind() == Formula::Kind::And && f.right().kind() == Formula::Kind::Neg &&
         f.right().child() == f.left();
}

}  // namespace

bool replay_trace(const std::vector<TraceStep>& trace, const Sequent& goal, LogicId logic) {
  if (trace.empty()) return false;
  struct SeqHash {
    std::size_t operator()(const Sequent& s) const { return s.lhs.hash() * 31 + s.rhs.hash(); }
  };
  std::unordered_set<Sequent, SeqHash> established;
  using K = Formula::Kind;
  for (const auto& st : trace) {
    for (const auto& p : st.premises)
      if (!established.count(p)) return false;
    const Formula& l = st.conclusion.lhs;
    const Formula& r = st.conclusion.rhs;
    bool ok = false;
    if (st.rule == "refl") {
      ok = st.premises.empty() && l == r;
    } else if (st.rule == "and-elim-l") {
      ok = st.premises.empty() && l.kind() == K::And && l.left() == r;
    } else if (st.rule == "and-elim-r") {
      ok = st.premises.empty() && l.kind() == K::And && l.right() == r;
    } else if (st.rule == "or-intro-l") {
      ok = st.premises.empty() && r.kind() == K::Or && r.left() == l;
    } else if (st.rule == "or-intro-r") {
      ok = st.premises.empty() && r.kind() == K::Or && r.right() == l;
    } else if (st.rule == "dni") {
      ok = st.premises.empty() && r.kind() == K::Neg && r.child().kind() == K::Neg &&
           r.child().child() == l;
    } else if (st.rule == "explosion") {
      ok = st.premises.empty() && contra_shape(l);
    } else if (st.rule == "cut") {
      ok = st.premises.size() == 2 && st.premises[0].lhs == l &&
           st.premises[0].rhs == st.premises[1].lhs && st.premises[1].rhs == r;
    } else if (st.rule == "and-intro") {
      ok = st.premises.size() == 2 && r.kind() == K::And && st.premises[0].lhs == l &&
           st.premises[1].lhs == l && st.premises[0].rhs == r.left() &&
           st.premises[1].rhs == r.right();
    } else if (st.rule == "or-elim") {
      ok = st.premises.size() == 2 && l.kind() == K::Or && st.premises[0].lhs == l.left() &&
           st.premises[1].lhs == l.right() && st.premises[0].rhs == r &&
           st.premises[1].rhs == r;
    } else if (st.rule == "contraposition") {
      ok = st.premises.size() == 1 && l.kind() == K::Neg && r.kind() == K::Neg &&
           st.premises[0].lhs == r.child() && st.premises[0].rhs == l.child();
    } else if (st.rule == "dne") {
      ok = admits_dne(logic) && st.premises.empty() && l.kind() == K::Neg &&
           l.child().kind() == K::Neg && l.child().child() == r;
    } else if (st.rule == "pcs") {
      ok = admits_pcs(logic) && st.premises.size() == 2 && l.kind() == K::And &&
           l.right().kind() == K::Or &&
           st.premises[0].lhs == Formula::conj(l.left(), l.right().left()) &&
           st.premises[1].lhs == Formula::conj(l.left(), l.right().right()) &&
           st.premises[0].rhs == r && st.premises[1].rhs == r;
    } else if (st.rule == "pseudocomplementation") {
      ok = admits_pseudo(logic) && st.premises.size() == 1 && r.kind() == K::Neg &&
           st.premises[0].lhs == Formula::conj(r.child(), l) &&
           contra_shape(st.premises[0].rhs);
    }
    if (!ok) return false;
    established.insert(st.conclusion);
  }
  return trace.back().conclusion == goal;
}

namespace {

std::vector<std::string> goal_vars(const Sequent& goal) {
  std::vector<std::string> vars;
  FormulaSet seen;
  std::vector<Formula> order;
  collect_postorder(goal.lhs, order, seen);
  collect_postorder(goal.rhs, order, seen);
  for (const Formula& f : order)
    if (f.kind() == Formula::Kind::Var) vars.push_back(f.name());
  return vars;
}

struct FrameSearcher {
  const Frame& frame;
  SemanticsId sem;
  const std::vector<std::string>& vars;
  const CompiledFormula& cl;
  const CompiledFormula& cr;
  const std::vector<int>& lmap;  // cl var slot -> shared var index
  const std::vector<int>& rmap;

  // Candidate extensions per variable; the reserved bottom variable is
  // pinned to the empty set (a fixpoint on the reflexive frames searched).
  std::vector<std::vector<StateSet>> candidates;

  explicit FrameSearcher(const Frame& f, SemanticsId sem, const std::vector<std::string>& vars,
                         const CompiledFormula& cl, const CompiledFormula& cr,
                         const std::vector<int>& lmap, const std::vector<int>& rmap)
      : frame(f), sem(sem), vars(vars), cl(cl), cr(cr), lmap(lmap), rmap(rmap) {
    std::vector<StateSet> pool;
    if (sem == SemanticsId::Fixpoint) {
      pool = fixpoints(frame, 64);
    } else {
      for (StateSet s = 0;; ++s) {
        pool.push_back(s);
        if (s == frame.all()) break;
      }
    }
    for (const auto& v : vars)
      candidates.push_back(v == Formula::bottom_var() ? std::vector<StateSet>{0} : pool);
  }

  // Returns the first refuting (assignment, state) in odometer order.
  std::optional<std::pair<std::vector<StateSet>, int>> search() const {
    std::vector<std::size_t> pos(vars.size(), 0);
    std::vector<StateSet> assign(vars.size()), lvals(lmap.size()), rvals(rmap.size());
    for (;;) {
      for (std::size_t i = 0; i < vars.size(); ++i) assign[i] = candidates[i][pos[i]];
      for (std::size_t i = 0; i < lmap.size(); ++i) lvals[i] = assign[lmap[i]];
      for (std::size_t i = 0; i < rmap.size(); ++i) rvals[i] = assign[rmap[i]];
      StateSet lhs = cl.eval(frame, lvals.data(), sem);
      if (lhs) {
        StateSet bad = lhs & ~cr.eval(frame, rvals.data(), sem);
        if (bad) return std::make_pair(assign, std::countr_zero(bad));
      }
      std::size_t k = 0;
      while (k < pos.size() && ++pos[k] == candidates[k].size()) pos[k++] = 0;
      if (k == pos.size()) return std::nullopt;
    }
  }
};

}  // namespace

std::optional<CountermodelResult> find_countermodel(const Sequent& goal, LogicId logic,
                                                    int max_size, int jobs) {
  if (max_size < 1) throw std::invalid_argument("max_size must be >= 1");
  RelClass cls = logic_frame_class(logic);
  SemanticsId sem = logic_semantics(logic);
  std::vector<std::string> vars = goal_vars(goal);
  CompiledFormula cl = CompiledFormula::compile(goal.lhs);
  CompiledFormula cr = CompiledFormula::compile(goal.rhs);
  auto slot_map = [&](const CompiledFormula& c) {
    std::vector<int> map;
    for (const auto& v : c.vars())
      map.push_back((int)(std::find(vars.begin(), vars.end(), v) - vars.begin()));
    return map;
  };
  std::vector<int> lmap = slot_map(cl), rmap = slot_map(cr);

  for (int size = 1; size <= max_size; ++size) {
    const std::vector<Frame>* frames;
    try {
      frames = &enumerate_frames(size, cls, /*dedup=*/true);
    } catch (const std::invalid_argument&) {
      break;  // enumeration bound exceeded; report none within achieved bounds
    }
    long count = (long)frames->size();
    std::atomic<long> best{count};
    if (jobs == 1) {
      for (long fi = 0; fi < count; ++fi) {
        FrameSearcher s((*frames)[fi], sem, vars, cl, cr, lmap, rmap);
        if (s.search()) {
          best = fi;
          break;
        }
      }
    } else {
#ifdef _OPENMP
      int threads = jobs > 0 ? jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(threads)
      for (long fi = 0; fi < count; ++fi) {
        if (fi >= best.load(std::memory_order_relaxed)) continue;
        FrameSearcher s((*frames)[fi], sem, vars, cl, cr, lmap, rmap);
        if (s.search()) {
          long cur = best.load(std::memory_order_relaxed);
          while (fi < cur && !best.compare_exchange_weak(cur, fi)) {
          }
        }
      }
#else
      for (long fi = 0; fi < count; ++fi) {
        FrameSearcher s((*frames)[fi], sem, vars, cl, cr, lmap, rmap);
        if (s.search()) {
          best = fi;
          break;
        }
      }
#endif
    }
    long fi = best.load();
    if (fi < count) {
      const Frame& frame = (*frames)[fi];
      FrameSearcher s(frame, sem, vars, cl, cr, lmap, rmap);
      auto hit = s.search();
      Model m{frame, {}};
      for (std::size_t i = 0; i < vars.size(); ++i) m.valuation[vars[i]] = hit->first[i];
      return CountermodelResult{std::move(m), hit->second};
    }
  }
  return std::nullopt;
}

bool is_valid(const Verdict& v) { return std::holds_alternative<Valid>(v); }
bool is_invalid(const Verdict& v) { return std::holds_alternative<Invalid>(v); }
bool is_unknown(const Verdict& v) { return std::holds_alternative<Unknown>(v); }

Verdict check(const Sequent& goal, LogicId logic, const Budget& budget, int jobs) {
  SaturationResult sat = saturate(goal, logic, budget.universe_depth, budget.universe_cap);
  if (sat.goal_derived()) return Valid{sat.goal_trace()};
  if (auto cm = find_countermodel(goal, logic, budget.max_size, jobs))
    return Invalid{std::move(cm->model), cm->state};
  return Unknown{budget.max_size, budget.universe_depth};
}

EmbeddingReport gg_embedding_check(const Sequent& goal, const Budget& budget, int jobs) {
  EmbeddingReport rep;
  rep.translated = {godel_gentzen(goal.lhs), godel_gentzen(goal.rhs)};
  rep.ortho = check(goal, LogicId::Ortho, budget, jobs);
  rep.fundamental = check(rep.translated, LogicId::Fundamental, budget, jobs);
  if (is_unknown(rep.ortho) || is_unknown(rep.fundamental)) {
    rep.agreement = Agreement::Inconclusive;
  } else {
    rep.agreement = (is_valid(rep.ortho) == is_valid(rep.fundamental)) ? Agreement::Agree
                                                                       : Agreement::Disagree;
  }
  return rep;
}

}  // namespace wb
