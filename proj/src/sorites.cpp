#include "workbench/sorites.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace wb {

namespace {

constexpr int kNegInf = -1000000;
constexpr int kPosInf = 1000000;

// -inf + d = -inf, inf + d = inf.
int ext_add(int a, int d) { return (a == kNegInf || a == kPosInf) ? a : a + d; }

std::string ext_str(int a) {
  if (a == kNegInf) return "-inf";
  if (a == kPosInf) return "inf";
  return std::to_string(a);
}

struct PairState {
  int i, j;
};

std::vector<PairState> pair_states(const SoritesParams& p) {
  std::vector<int> firsts{kNegInf}, seconds;
  for (int k = 0; k < p.n; ++k) firsts.push_back(k);
  for (int k = 0; k < p.n; ++k) seconds.push_back(k);
  seconds.push_back(kPosInf);
  std::vector<PairState> out;
  for (int i : firsts)
    for (int j : seconds)
      if (ext_add(i, p.delta) < j) out.push_back({i, j});
  return out;
}

std::string pair_label(const PairState& s) {
  return "(" + ext_str(s.i) + "," + ext_str(s.j) + ")";
}

bool compatible(const PairState& a, const PairState& b) {
  return std::max(a.i, b.i) < std::min(a.j, b.j);
}

std::map<std::string, StateSet> sorites_valuation(const SoritesParams& p,
                                                  const std::vector<PairState>& pairs) {
  std::map<std::string, StateSet> v;
  for (int k = 0; k < p.n; ++k) {
    StateSet ext = 0;
    for (std::size_t s = 0; s < pairs.size(); ++s)
      if (k <= pairs[s].i && pairs[s].i != kPosInf) ext |= StateSet{1} << s;
    v["p" + std::to_string(k)] = ext;
  }
  return v;
}

}  // namespace

Model build_symmetric(const SoritesParams& params) {
  params.validate();
  auto pairs = pair_states(params);
  std::vector<std::string> labels;
  for (const auto& s : pairs) labels.push_back(pair_label(s));
  std::vector<StateSet> succ(pairs.size(), 0);
  for (std::size_t a = 0; a < pairs.size(); ++a)
    for (std::size_t b = 0; b < pairs.size(); ++b)
      if (compatible(pairs[a], pairs[b])) succ[a] |= StateSet{1} << b;
  return Model{Frame(labels, succ), sorites_valuation(params, pairs)};
}

Model build_pseudosymmetric(const SoritesParams& params) {
  params.validate();
  auto pairs = pair_states(params);
  int np = static_cast<int>(pairs.size());
  std::vector<std::string> labels;
  for (const auto& s : pairs) labels.push_back(pair_label(s));
  for (int k = 0; k < params.n; ++k) labels.push_back("r" + std::to_string(k));
  int total = np + params.n;
  std::vector<StateSet> succ(total, 0);
  for (int a = 0; a < np; ++a)
    for (int b = 0; b < np; ++b)
      if (compatible(pairs[a], pairs[b])) succ[a] |= StateSet{1} << b;
  for (int k = 0; k < params.n; ++k) {
    int rk = np + k;
    // rk <| (i,j) iff i < k < j
    for (int b = 0; b < np; ++b)
      if (pairs[b].i < k && k < pairs[b].j) succ[rk] |= StateSet{1} << b;
    // x <| rk for every state x
    for (int x = 0; x < total; ++x) succ[x] |= StateSet{1} << rk;
  }
  return Model{Frame(labels, succ), sorites_valuation(params, pairs)};
}

namespace {

struct FactContext {
  const SoritesParams& p;
  const Model& m;
  const std::vector<PairState>& pairs;
  FactReport& report;

  Formula pvar(int k) const { return Formula::var("p" + std::to_string(k)); }

  StateSet pair_set(bool (*pred)(const PairState&, int), int k) const {
    StateSet out = 0;
    for (std::size_t s = 0; s < pairs.size(); ++s)
      if (pred(pairs[s], k)) out |= StateSet{1} << s;
    return out;
  }

  std::string describe(StateSet s) const {
    std::ostringstream out;
    out << "{";
    bool first = true;
    for (int x : set_bits(s)) {
      if (!first) out << ",";
      out << m.frame.label(x);
      first = false;
    }
    out << "}";
    return out.str();
  }

  void expect(const std::string& name, const Formula& f, StateSet expected) {
    StateSet got = eval(m, f, SemanticsId::Fixpoint);
    if (got == expected) {
      report.checks.push_back({name, true, ""});
    } else {
      report.checks.push_back(
          {name, false, print(f) + ": got " + describe(got) + ", expected " + describe(expected)});
    }
  }
};

bool atom_pred(const PairState& s, int k) { return k <= s.i && s.i != kPosInf; }
bool negatom_pred(const PairState& s, int k) { return s.j <= k; }
bool em_pred(const PairState& s, int k) { return atom_pred(s, k) || negatom_pred(s, k); }
bool finite_pred(const PairState& s, int) { return s.i != kNegInf && s.j != kPosInf; }

}  // namespace

FactReport verify_facts(const SoritesParams& params, SoritesKind kind) {
  params.validate();
  bool pseudo = kind == SoritesKind::Pseudosymmetric;
  Model m = pseudo ? build_pseudosymmetric(params) : build_symmetric(params);
  auto pairs = pair_states(params);
  FactReport report;
  FactContext ctx{params, m, pairs, report};
  std::string suffix = pseudo ? "2" : "";

  for (int k = 0; k < params.n; ++k) {
    Formula pk = ctx.pvar(k);
    ctx.expect("Atom" + suffix + "(p" + std::to_string(k) + ")", pk,
               ctx.pair_set(atom_pred, k));
    ctx.expect("NegAtom" + suffix + "(p" + std::to_string(k) + ")", Formula::neg(pk),
               ctx.pair_set(negatom_pred, k));
    if (pseudo)
      ctx.expect("NegAtom2(~~p" + std::to_string(k) + ")", Formula::neg(Formula::neg(pk)),
                 ctx.pair_set(atom_pred, k));
  }

  for (int k = 0; k <= params.n - 2; ++k)
    for (int l = 1; l <= params.delta && k + l <= params.n - 1; ++l) {
      Formula cutoff = Formula::conj(ctx.pvar(k), Formula::neg(ctx.pvar(k + l)));
      std::string at = "(k=" + std::to_string(k) + ",l=" + std::to_string(l) + ")";
      ctx.expect("NoSharpCutoffs" + suffix + at, cutoff, 0);
      ctx.expect("NoSharpCutoffs" + suffix + "-neg" + at, Formula::neg(cutoff), m.frame.all());
    }

  {
    StateSet sat = eval(m, sorites_formula(params), SemanticsId::Fixpoint);
    int joint = m.frame.index_of("(0," + std::to_string(params.n - 1) + ")");
    bool pass = joint >= 0 && ((sat >> joint) & 1);
    report.checks.push_back(
        {"JointSat" + suffix, pass, pass ? "" : "formula not forced at (0,n-1)"});
  }

  if (pseudo) {
    Formula em_conj, wem_conj;
    for (int k = 0; k < params.n; ++k) {
      Formula pk = ctx.pvar(k);
      Formula em = Formula::disj(pk, Formula::neg(pk));
      Formula wem = Formula::disj(Formula::neg(pk), Formula::neg(Formula::neg(pk)));
      ctx.expect("EMExt(p" + std::to_string(k) + ")", em, ctx.pair_set(em_pred, k));
      em_conj = em_conj.valid() ? Formula::conj(em_conj, em) : em;
      wem_conj = wem_conj.valid() ? Formula::conj(wem_conj, wem) : wem;
    }
    // The settled states are (n-1,inf), which forces every pk, and (-inf,0),
    // which forces every ~pk; these are the only pairs with "k <= i or
    // j <= k" for all k, as intersecting the EMExt sets shows.
    StateSet settled = 0;
    int a = m.frame.index_of("(" + std::to_string(params.n - 1) + ",inf)");
    int b = m.frame.index_of("(-inf,0)");
    settled |= StateSet{1} << a;
    settled |= StateSet{1} << b;
    ctx.expect("DenyLEMs(em-conj)", em_conj, settled);
    ctx.expect("DenyLEMs(wem-conj)", wem_conj, settled);
    StateSet finite = ctx.pair_set(finite_pred, 0);
    ctx.expect("DenyLEMs(neg-em-conj)", Formula::neg(em_conj), finite);
    ctx.expect("DenyLEMs(neg-wem-conj)", Formula::neg(wem_conj), finite);
  }

  return report;
}

void export_dot(const Frame& frame, std::ostream& out) {
  out << "digraph G {\n";
  for (int x = 0; x < frame.size(); ++x)
    out << "  n" << x << " [label=\"" << frame.label(x) << "\"];\n";
  for (int x = 0; x < frame.size(); ++x)
    for (int y : set_bits(frame.succ(x))) {
      if (x == y) continue;  // self-loops suppressed
      if (frame.rel(y, x)) {
        if (x < y) out << "  n" << x << " -> n" << y << " [dir=none];\n";
      } else {
        // x <| y is drawn as an arrow from y to x
        out << "  n" << y << " -> n" << x << ";\n";
      }
    }
  out << "}\n";
}

void export_dot_file(const Frame& frame, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  export_dot(frame, out);
}

}  // namespace wb
