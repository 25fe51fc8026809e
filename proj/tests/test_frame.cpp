#include <doctest.h>

#include <random>
#include <stdexcept>

#include "workbench/frame.hpp"

using wb::Frame;
using wb::StateSet;

namespace {

Frame make(std::vector<std::string> states, std::vector<std::pair<int, int>> rel) {
  return Frame(std::move(states), rel);
}

// closure straight from the definition, written independently of the library
StateSet closure_oracle(const Frame& f, StateSet a) {
  StateSet out = 0;
  for (int x = 0; x < f.size(); ++x) {
    bool in = true;
    for (int xp = 0; xp < f.size(); ++xp) {
      if (!f.rel(xp, x)) continue;
      bool witness = false;
      for (int xpp = 0; xpp < f.size(); ++xpp)
        if (f.rel(xp, xpp) && ((a >> xpp) & 1)) witness = true;
      if (!witness) in = false;
    }
    if (in) out |= StateSet{1} << x;
  }
  return out;
}

Frame random_frame(std::mt19937& rng, int size) {
  std::vector<std::string> states;
  for (int i = 0; i < size; ++i) states.push_back(std::to_string(i));
  std::vector<StateSet> succ(size);
  std::uniform_int_distribution<int> bit(0, 1);
  for (int x = 0; x < size; ++x)
    for (int y = 0; y < size; ++y)
      if (bit(rng)) succ[x] |= StateSet{1} << y;
  return Frame(states, succ);
}

}  // namespace

TEST_CASE("frame construction and accessors") {
  Frame f = make({"a", "b"}, {{0, 0}, {0, 1}});
  CHECK(f.size() == 2);
  CHECK(f.rel(0, 1));
  CHECK_FALSE(f.rel(1, 0));
  CHECK(f.succ(0) == 0b11);
  CHECK(f.pred(1) == 0b01);
  CHECK(f.index_of("b") == 1);
  CHECK(f.index_of("c") == -1);
  CHECK(f.all() == 0b11);
  CHECK(f.rel_pairs() == std::vector<std::pair<int, int>>{{0, 0}, {0, 1}});
  CHECK_THROWS_AS(make({}, {}), std::invalid_argument);
  CHECK_THROWS_AS(make({"a"}, {{0, 1}}), std::out_of_range);
}

TEST_CASE("closure matches the definition and its laws hold") {
  std::mt19937 rng(3);
  int checked = 0;
  while (checked < 1200) {
    Frame f = random_frame(rng, 1 + (int)(rng() % 5));
    std::uniform_int_distribution<StateSet> sub(0, f.all());
    StateSet a = sub(rng), b = sub(rng);
    CHECK(wb::closure(f, a) == closure_oracle(f, a));
    StateSet ca = wb::closure(f, a);
    CHECK((a & ~ca) == 0);                         // extensive
    CHECK(wb::closure(f, ca) == ca);               // idempotent
    StateSet cab = wb::closure(f, a | b);
    CHECK((ca & ~cab) == 0);                       // monotone
    ++checked;
  }
  Frame f = make({"x", "y"}, {{0, 0}, {1, 1}, {0, 1}, {1, 0}});
  CHECK_THROWS_AS(wb::closure(f, 0b100), std::invalid_argument);
}

TEST_CASE("fixpoints are exactly the closed sets") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    Frame f = random_frame(rng, 1 + (int)(rng() % 4));
    auto fps = wb::fixpoints(f);
    std::vector<StateSet> expected;
    for (StateSet a = 0;; ++a) {
      if (wb::closure(f, a) == a) expected.push_back(a);
      if (a == f.all()) break;
    }
    CHECK(fps == expected);
  }
  // empty set and full set are fixpoints on reflexive frames
  Frame r = make({"a", "b"}, {{0, 0}, {1, 1}});
  auto fps = wb::fixpoints(r);
  CHECK(fps.front() == 0);
  CHECK(fps.back() == r.all());
}

TEST_CASE("pre_refines") {
  // b's only predecessor is b itself; a has both as predecessors
  Frame f = make({"a", "b"}, {{0, 0}, {1, 1}, {1, 0}});
  CHECK(wb::pre_refines(f, 1, 0));
  CHECK_FALSE(wb::pre_refines(f, 0, 1));
  CHECK(wb::pre_refines(f, 0, 0));
}

TEST_CASE("relation class predicates") {
  Frame ident = make({"a", "b"}, {{0, 0}, {1, 1}});
  auto fi = wb::class_check(ident);
  CHECK(fi.reflexive);
  CHECK(fi.symmetric);
  CHECK(fi.pseudosymmetric);
  CHECK(fi.transitive);
  CHECK(fi.compossible);
  CHECK(fi.identity);

  Frame complete = make({"a", "b"}, {{0, 0}, {0, 1}, {1, 0}, {1, 1}});
  auto fc = wb::class_check(complete);
  CHECK(fc.reflexive);
  CHECK(fc.symmetric);
  CHECK_FALSE(fc.identity);
  CHECK(fc.compossible);

  Frame chain = make({"a", "b", "c"},
                     {{0, 0}, {1, 1}, {2, 2}, {0, 1}, {1, 2}, {0, 2}});
  auto fh = wb::class_check(chain);
  CHECK(fh.transitive);
  CHECK_FALSE(fh.symmetric);

  // reflexive and pseudosymmetric but not symmetric: one-way arrow into a
  // state whose predecessors include the source's predecessors
  Frame ps = make({"a", "b"}, {{0, 0}, {1, 1}, {0, 1}});
  auto fp = wb::class_check(ps);
  CHECK(fp.reflexive);
  CHECK_FALSE(fp.symmetric);
  CHECK(fp.pseudosymmetric);
}

TEST_CASE("frame enumeration respects the requested class") {
  wb::RelClass rs;
  rs.reflexive = rs.symmetric = true;
  // reflexive symmetric frames up to renaming = simple graphs up to iso
  CHECK(wb::enumerate_frames(1, rs).size() == 1);
  CHECK(wb::enumerate_frames(2, rs).size() == 2);
  CHECK(wb::enumerate_frames(3, rs).size() == 4);
  CHECK(wb::enumerate_frames(4, rs).size() == 11);
  CHECK(wb::enumerate_frames(2, rs, /*dedup=*/false).size() == 2);
  CHECK(wb::enumerate_frames(3, rs, /*dedup=*/false).size() == 8);

  for (const Frame& f : wb::enumerate_frames(4, rs)) {
    auto flags = wb::class_check(f);
    CHECK(flags.reflexive);
    CHECK(flags.symmetric);
  }

  wb::RelClass rp;
  rp.reflexive = rp.pseudosymmetric = true;
  for (const Frame& f : wb::enumerate_frames(3, rp)) {
    auto flags = wb::class_check(f);
    CHECK(flags.reflexive);
    CHECK(flags.pseudosymmetric);
  }
  // symmetric implies pseudosymmetric, so the class is at least as large
  CHECK(wb::enumerate_frames(3, rp).size() >= wb::enumerate_frames(3, rs).size());

  wb::RelClass ident;
  ident.identity = true;
  CHECK(wb::enumerate_frames(3, ident).size() == 1);

  CHECK_THROWS_AS(wb::enumerate_frames(9, rs), std::invalid_argument);
  wb::RelClass unconstrained;
  CHECK_THROWS_AS(wb::enumerate_frames(6, unconstrained, true, 6), std::invalid_argument);
}
