#include "workbench/lattice.hpp"

#include <fstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "workbench/semantics.hpp"

namespace wb {

Lattice::Lattice(std::vector<std::string> elements,
                 const std::vector<std::pair<int, int>>& leq_pairs, std::vector<int> neg)
    : elements_(std::move(elements)), neg_(std::move(neg)) {
  int n = size();
  if (n < 1) throw std::invalid_argument("lattice requires a nonempty element set");
  if (n > 16) throw std::invalid_argument("lattice limited to 16 elements");
  if ((int)neg_.size() != n) throw std::invalid_argument("neg table must cover every element");
  for (int a : neg_)
    if (a < 0 || a >= n) throw std::invalid_argument("neg table references unknown element");
  leq_.assign(n * n, 0);
  for (int a = 0; a < n; ++a) leq_[a * n + a] = 1;
  for (auto [a, b] : leq_pairs) {
    if (a < 0 || a >= n || b < 0 || b >= n)
      throw std::invalid_argument("leq references unknown element");
    leq_[a * n + b] = 1;
  }
  for (bool changed = true; changed;) {
    changed = false;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (leq_[a * n + b])
          for (int c = 0; c < n; ++c)
            if (leq_[b * n + c] && !leq_[a * n + c]) {
              leq_[a * n + c] = 1;
              changed = true;
            }
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (a != b && leq_[a * n + b] && leq_[b * n + a])
        throw std::invalid_argument("order is not antisymmetric: " + elements_[a] + " and " +
                                    elements_[b]);
  meet_.assign(n * n, -1);
  join_.assign(n * n, -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      for (int c = 0; c < n; ++c) {
        if (!leq_[c * n + a] || !leq_[c * n + b]) continue;
        if (meet_[a * n + b] < 0 || leq_[meet_[a * n + b] * n + c]) meet_[a * n + b] = c;
      }
      for (int c = 0; c < n; ++c) {
        if (!leq_[a * n + c] || !leq_[b * n + c]) continue;
        if (join_[a * n + b] < 0 || leq_[c * n + join_[a * n + b]]) join_[a * n + b] = c;
      }
      int m = meet_[a * n + b], j = join_[a * n + b];
      bool meet_ok = m >= 0, join_ok = j >= 0;
      for (int c = 0; c < n && meet_ok; ++c)
        if (leq_[c * n + a] && leq_[c * n + b] && !leq_[c * n + m]) meet_ok = false;
      for (int c = 0; c < n && join_ok; ++c)
        if (leq_[a * n + c] && leq_[b * n + c] && !leq_[j * n + c]) join_ok = false;
      if (!meet_ok || !join_ok)
        throw std::invalid_argument("no " + std::string(meet_ok ? "join" : "meet") + " for " +
                                    elements_[a] + " and " + elements_[b]);
    }
  for (int a = 0; a < n; ++a) {
    bool is_bottom = true, is_top = true;
    for (int b = 0; b < n; ++b) {
      if (!leq_[a * n + b]) is_bottom = false;
      if (!leq_[b * n + a]) is_top = false;
    }
    if (is_bottom) bottom_ = a;
    if (is_top) top_ = a;
  }
  if (bottom_ < 0 || top_ < 0) throw std::invalid_argument("lattice is not bounded");
}

int Lattice::index_of(const std::string& label) const {
  for (int i = 0; i < size(); ++i)
    if (elements_[i] == label) return i;
  return -1;
}

Lattice Lattice::from_json(const nlohmann::json& j) {
  std::vector<std::string> elements = j.at("elements").get<std::vector<std::string>>();
  auto index = [&](const std::string& label) {
    for (int i = 0; i < (int)elements.size(); ++i)
      if (elements[i] == label) return i;
    throw std::runtime_error("unknown element label '" + label + "'");
  };
  std::vector<std::pair<int, int>> leq;
  for (const auto& pair : j.at("leq")) {
    if (!pair.is_array() || pair.size() != 2)
      throw std::runtime_error("leq entries must be [a,b] pairs");
    leq.emplace_back(index(pair[0].get<std::string>()), index(pair[1].get<std::string>()));
  }
  std::vector<int> neg(elements.size(), -1);
  for (const auto& [a, b] : j.at("neg").items()) neg[index(a)] = index(b.get<std::string>());
  for (std::size_t a = 0; a < neg.size(); ++a)
    if (neg[a] < 0) throw std::runtime_error("neg table missing entry for '" + elements[a] + "'");
  return Lattice(std::move(elements), leq, std::move(neg));
}

Lattice Lattice::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open lattice file '" + path + "'");
  nlohmann::json j;
  in >> j;
  return from_json(j);
}

LawCheck check_weak_pseudocomplementation(const Lattice& l) {
  LawCheck out{true, {}};
  for (int a = 0; a < l.size(); ++a) {
    if (l.meet(a, l.neg(a)) != l.bottom())
      out.violations.push_back(l.label(a) + " & ~" + l.label(a) + " = " +
                               l.label(l.meet(a, l.neg(a))) + ", not bottom");
    if (!l.leq(a, l.neg(l.neg(a))))
      out.violations.push_back(l.label(a) + " not below ~~" + l.label(a));
    for (int b = 0; b < l.size(); ++b)
      if (l.leq(a, b) && !l.leq(l.neg(b), l.neg(a)))
        out.violations.push_back(l.label(a) + " <= " + l.label(b) + " but ~" + l.label(b) +
                                 " not below ~" + l.label(a));
  }
  out.pass = out.violations.empty();
  return out;
}

LawCheck check_distributive(const Lattice& l) {
  LawCheck out{true, {}};
  for (int a = 0; a < l.size() && out.pass; ++a)
    for (int b = 0; b < l.size() && out.pass; ++b)
      for (int c = 0; c < l.size(); ++c)
        if (l.meet(a, l.join(b, c)) != l.join(l.meet(a, b), l.meet(a, c))) {
          out.pass = false;
          out.violations.push_back("a=" + l.label(a) + ", b=" + l.label(b) + ", c=" +
                                   l.label(c));
          break;
        }
  return out;
}

std::vector<LatticeSet> prime_filters(const Lattice& l) {
  if (!check_distributive(l).pass)
    throw std::invalid_argument("prime filters require a distributive lattice");
  int n = l.size();
  std::vector<LatticeSet> out;
  for (LatticeSet f = 1; f < (LatticeSet{1} << n); ++f) {
    if ((f >> l.bottom()) & 1) continue;  // proper
    bool ok = true;
    for (int a = 0; a < n && ok; ++a) {
      if (!((f >> a) & 1)) continue;
      for (int b = 0; b < n; ++b) {
        bool in_b = (f >> b) & 1;
        if (l.leq(a, b) && !in_b) {  // upward closed
          ok = false;
          break;
        }
        if (in_b && !((f >> l.meet(a, b)) & 1)) {  // meet closed
          ok = false;
          break;
        }
      }
    }
    for (int a = 0; a < n && ok; ++a)
      for (int b = 0; b < n; ++b)
        if (((f >> l.join(a, b)) & 1) && !((f >> a) & 1) && !((f >> b) & 1)) {  // prime
          ok = false;
          break;
        }
    if (ok) out.push_back(f);
  }
  return out;
}

Representation represent(const Lattice& l) {
  LawCheck wpc = check_weak_pseudocomplementation(l);
  if (!wpc.pass)
    throw std::invalid_argument("represent requires a weak pseudocomplementation: " +
                                wpc.violations.front());
  std::vector<LatticeSet> filters = prime_filters(l);
  int nf = (int)filters.size();
  if (nf < 1) throw std::invalid_argument("lattice has no prime filters");
  if (nf > 64) throw std::invalid_argument("too many prime filters for a frame");

  std::vector<std::string> labels;
  for (LatticeSet f : filters) {
    std::string s = "{";
    for (int a = 0; a < l.size(); ++a)
      if ((f >> a) & 1) {
        if (s.size() > 1) s += ",";
        s += l.label(a);
      }
    labels.push_back(s + "}");
  }
  // F related to F' iff no a with a in F and ~a in F'
  std::vector<StateSet> succ(nf, 0);
  for (int x = 0; x < nf; ++x)
    for (int y = 0; y < nf; ++y) {
      bool blocked = false;
      for (int a = 0; a < l.size(); ++a)
        if (((filters[x] >> a) & 1) && ((filters[y] >> l.neg(a)) & 1)) {
          blocked = true;
          break;
        }
      if (!blocked) succ[x] |= StateSet{1} << y;
    }

  Representation rep{Frame(labels, succ), {}, {}};
  for (int a = 0; a < l.size(); ++a) {
    StateSet e = 0;
    for (int x = 0; x < nf; ++x)
      if ((filters[x] >> a) & 1) e |= StateSet{1} << x;
    rep.embedding.push_back(e);
  }
  const Frame& fr = rep.frame;
  auto& e = rep.embedding;
  auto add = [&](const std::string& name, bool pass, const std::string& detail) {
    rep.checks.push_back({name, pass, pass ? "" : detail});
  };

  RelClassFlags flags = class_check(fr);
  add("relation reflexive", flags.reflexive, "some filter incompatible with itself");
  add("relation symmetric", flags.symmetric, "relation not symmetric");
  {
    bool inj = true;
    std::string detail;
    for (int a = 0; a < l.size() && inj; ++a)
      for (int b = a + 1; b < l.size(); ++b)
        if (e[a] == e[b]) {
          inj = false;
          detail = l.label(a) + " and " + l.label(b) + " map to the same set";
          break;
        }
    add("embedding injective", inj, detail);
  }
  {
    bool ok = true;
    std::string detail;
    for (int a = 0; a < l.size() && ok; ++a)
      for (int b = 0; b < l.size(); ++b) {
        if (e[l.meet(a, b)] != (e[a] & e[b])) {
          ok = false;
          detail = "meet of " + l.label(a) + ", " + l.label(b);
          break;
        }
        if (e[l.join(a, b)] != (e[a] | e[b])) {
          ok = false;
          detail = "join of " + l.label(a) + ", " + l.label(b);
          break;
        }
      }
    add("embedding preserves meet and join", ok, detail);
  }
  add("embedding preserves bottom", e[l.bottom()] == 0, "e(0) nonempty");
  add("embedding preserves top", e[l.top()] == fr.all(), "e(1) not the full state set");
  {
    bool ok = true;
    std::string detail;
    for (int a = 0; a < l.size(); ++a)
      if (e[l.neg(a)] != neg_ext(fr, e[a])) {
        ok = false;
        detail = "negation of " + l.label(a);
        break;
      }
    add("embedding preserves negation", ok, detail);
  }
  return rep;
}

}  // namespace wb
