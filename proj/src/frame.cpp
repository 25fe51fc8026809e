#include "workbench/frame.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

namespace wb {

Frame::Frame(std::vector<std::string> states, const std::vector<std::pair<int, int>>& rel)
    : states_(std::move(states)) {
  if (states_.empty()) throw std::invalid_argument("frame requires a nonempty state set");
  if (states_.size() > 64) throw std::invalid_argument("frame limited to 64 states");
  succ_.assign(states_.size(), 0);
  pred_.assign(states_.size(), 0);
  for (auto [x, y] : rel) {
    check_state(x);
    check_state(y);
    succ_[x] |= StateSet{1} << y;
    pred_[y] |= StateSet{1} << x;
  }
}

Frame::Frame(std::vector<std::string> states, std::vector<StateSet> succ_rows)
    : states_(std::move(states)), succ_(std::move(succ_rows)) {
  if (states_.empty()) throw std::invalid_argument("frame requires a nonempty state set");
  if (states_.size() > 64) throw std::invalid_argument("frame limited to 64 states");
  if (succ_.size() != states_.size())
    throw std::invalid_argument("relation rows do not match state count");
  pred_.assign(states_.size(), 0);
  for (int x = 0; x < size(); ++x) {
    if (succ_[x] & ~all()) throw std::invalid_argument("relation references unknown state");
    for (int y : set_bits(succ_[x])) pred_[y] |= StateSet{1} << x;
  }
}

void Frame::check_state(int x) const {
  if (x < 0 || x >= size()) throw std::out_of_range("unknown state index");
}

int Frame::index_of(const std::string& label) const {
  for (int i = 0; i < size(); ++i)
    if (states_[i] == label) return i;
  return -1;
}

std::vector<std::pair<int, int>> Frame::rel_pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int x = 0; x < size(); ++x)
    for (int y : set_bits(succ_[x])) out.emplace_back(x, y);
  return out;
}

std::vector<int> set_bits(StateSet s) {
  std::vector<int> out;
  while (s) {
    out.push_back(std::countr_zero(s));
    s &= s - 1;
  }
  return out;
}

StateSet closure(const Frame& frame, StateSet a) {
  if (a & ~frame.all()) throw std::invalid_argument("set is not a subset of the frame's states");
  StateSet out = 0;
  for (int x = 0; x < frame.size(); ++x) {
    bool in = true;
    for (int xp : set_bits(frame.pred_[x]))
      if (!(frame.succ_[xp] & a)) {
        in = false;
        break;
      }
    if (in) out |= StateSet{1} << x;
  }
  return out;
}

std::vector<StateSet> fixpoints(const Frame& frame, int bound) {
  if (frame.size() > bound)
    throw std::invalid_argument("fixpoint enumeration bound exceeded");
  std::vector<StateSet> out;
  StateSet full = frame.all();
  for (StateSet a = 0;; ++a) {
    if (closure(frame, a) == a) out.push_back(a);
    if (a == full) break;
  }
  return out;
}

bool pre_refines(const Frame& frame, int x, int y) {
  frame.check_state(x);
  frame.check_state(y);
  return (frame.pred_[x] & ~frame.pred_[y]) == 0;
}

RelClassFlags class_check(const Frame& frame) {
  int n = frame.size();
  RelClassFlags f;
  f.reflexive = true;
  f.symmetric = true;
  f.transitive = true;
  f.identity = true;
  for (int x = 0; x < n; ++x) {
    StateSet self = StateSet{1} << x;
    if (!(frame.succ(x) & self)) f.reflexive = false;
    if (frame.succ(x) != self) f.identity = false;
    if (frame.succ(x) != frame.pred(x)) f.symmetric = false;
    for (int y : set_bits(frame.succ(x)))
      if (frame.succ(y) & ~frame.succ(x)) {
        f.transitive = false;
        break;
      }
  }
  // pseudosymmetric: if y <| x, there is z <| y that pre-refines x.
  f.pseudosymmetric = true;
  for (int x = 0; x < n && f.pseudosymmetric; ++x)
    for (int y : set_bits(frame.pred(x))) {
      bool found = false;
      for (int z : set_bits(frame.pred(y)))
        if (pre_refines(frame, z, x)) {
          found = true;
          break;
        }
      if (!found) {
        f.pseudosymmetric = false;
        break;
      }
    }
  // compossible: whenever x <| y, some z pre-refines both x and y.
  f.compossible = true;
  for (int x = 0; x < n && f.compossible; ++x)
    for (int y : set_bits(frame.succ(x))) {
      bool found = false;
      for (int z = 0; z < n; ++z)
        if (pre_refines(frame, z, x) && pre_refines(frame, z, y)) {
          found = true;
          break;
        }
      if (!found) {
        f.compossible = false;
        break;
      }
    }
  return f;
}

namespace {

bool satisfies(const RelClassFlags& have, const RelClass& want) {
  return (!want.reflexive || have.reflexive) && (!want.symmetric || have.symmetric) &&
         (!want.pseudosymmetric || have.pseudosymmetric) &&
         (!want.transitive || have.transitive) && (!want.compossible || have.compossible) &&
         (!want.identity || have.identity);
}

std::uint64_t pack_relation(const std::vector<StateSet>& succ, int n) {
  std::uint64_t bits = 0;
  int k = 0;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y, ++k)
      if ((succ[x] >> y) & 1) bits |= std::uint64_t{1} << k;
  return bits;
}

std::uint64_t canonical_form(const std::vector<StateSet>& succ, int n) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t best = ~std::uint64_t{0};
  std::vector<StateSet> permuted(n);
  do {
    for (int x = 0; x < n; ++x) {
      StateSet row = 0;
      for (int y : set_bits(succ[x])) row |= StateSet{1} << perm[y];
      permuted[perm[x]] = row;
    }
    best = std::min(best, pack_relation(permuted, n));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

std::vector<std::string> numbered_states(int n) {
  std::vector<std::string> s;
  for (int i = 0; i < n; ++i) s.push_back(std::to_string(i));
  return s;
}

std::vector<Frame> enumerate_frames_impl(int size, const RelClass& cls, bool dedup) {
  std::vector<Frame> out;
  auto states = numbered_states(size);
  if (cls.identity) {
    std::vector<StateSet> succ(size);
    for (int x = 0; x < size; ++x) succ[x] = StateSet{1} << x;
    out.emplace_back(states, succ);
    return out;
  }
  // Free relation positions; reflexive diagonal is forced, symmetric classes
  // only choose the upper triangle.
  std::vector<std::pair<int, int>> free_pos;
  for (int x = 0; x < size; ++x)
    for (int y = 0; y < size; ++y) {
      if (x == y && cls.reflexive) continue;
      if (cls.symmetric && y < x) continue;
      free_pos.emplace_back(x, y);
    }
  if (free_pos.size() > 24) throw std::invalid_argument("frame enumeration bound exceeded");
  std::unordered_set<std::uint64_t> seen;
  std::vector<StateSet> succ(size);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << free_pos.size()); ++mask) {
    std::fill(succ.begin(), succ.end(), 0);
    if (cls.reflexive)
      for (int x = 0; x < size; ++x) succ[x] |= StateSet{1} << x;
    for (std::size_t k = 0; k < free_pos.size(); ++k)
      if ((mask >> k) & 1) {
        auto [x, y] = free_pos[k];
        succ[x] |= StateSet{1} << y;
        if (cls.symmetric) succ[y] |= StateSet{1} << x;
      }
    Frame frame(states, succ);
    if (!satisfies(class_check(frame), cls)) continue;
    if (dedup && !seen.insert(canonical_form(succ, size)).second) continue;
    out.push_back(std::move(frame));
  }
  return out;
}

}  // namespace

const std::vector<Frame>& enumerate_frames(int size, const RelClass& cls, bool dedup,
                                           int bound) {
  if (size < 1 || size > bound)
    throw std::invalid_argument("frame enumeration bound exceeded");
  struct Key {
    int size;
    unsigned flags;
    bool dedup;
    bool operator<(const Key& o) const {
      return std::tie(size, flags, dedup) < std::tie(o.size, o.flags, o.dedup);
    }
  };
  unsigned flags = (cls.reflexive << 0) | (cls.symmetric << 1) | (cls.pseudosymmetric << 2) |
                   (cls.transitive << 3) | (cls.compossible << 4) | (cls.identity << 5);
  static std::map<Key, std::vector<Frame>> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto [it, inserted] = cache.try_emplace(Key{size, flags, dedup});
  if (inserted) it->second = enumerate_frames_impl(size, cls, dedup);
  return it->second;
}

}  // namespace wb
