#ifndef WORKBENCH_FRAME_HPP
#define WORKBENCH_FRAME_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace wb {

/// Subset of a frame's states, one bit per state index.
using StateSet = std::uint64_t;

/// Finite relational frame (X, <|). rel(x, y) reads "x <| y": x is open to y.
/// At most 64 states.
class Frame {
 public:
  Frame(std::vector<std::string> states, const std::vector<std::pair<int, int>>& rel);
  Frame(std::vector<std::string> states, std::vector<StateSet> succ_rows);

  int size() const { return static_cast<int>(states_.size()); }
  const std::vector<std::string>& states() const { return states_; }
  const std::string& label(int x) const { return states_[x]; }
  int index_of(const std::string& label) const;  // -1 if unknown

  bool rel(int x, int y) const { return (succ_[x] >> y) & 1; }
  StateSet succ(int x) const { return succ_[x]; }  // {y : x <| y}
  StateSet pred(int x) const { return pred_[x]; }  // {z : z <| x}
  StateSet all() const {
    return size() == 64 ? ~StateSet{0} : (StateSet{1} << size()) - 1;
  }

  std::vector<std::pair<int, int>> rel_pairs() const;

 private:
  void check_state(int x) const;
  std::vector<std::string> states_;
  std::vector<StateSet> succ_, pred_;

  friend StateSet closure(const Frame&, StateSet);
  friend bool pre_refines(const Frame&, int, int);
};

/// c(A) = {x | for all x' <| x there is x'' with x' <| x'' and x'' in A}.
StateSet closure(const Frame& frame, StateSet a);

/// All A with c(A) = A, by subset scan; ascending bitmask order.
std::vector<StateSet> fixpoints(const Frame& frame, int bound = 12);

/// Every <|-predecessor of x is a <|-predecessor of y.
bool pre_refines(const Frame& frame, int x, int y);

struct RelClassFlags {
  bool reflexive = false;
  bool symmetric = false;
  bool pseudosymmetric = false;
  bool transitive = false;
  bool compossible = false;
  bool identity = false;
};

RelClassFlags class_check(const Frame& frame);

/// Requested constraints for frame enumeration; set flags are required,
/// unset flags are unconstrained.
using RelClass = RelClassFlags;

/// All frames on states {0..size-1} satisfying cls, in deterministic order,
/// deduplicated up to state renaming when dedup is set. Results are cached.
const std::vector<Frame>& enumerate_frames(int size, const RelClass& cls,
                                           bool dedup = true, int bound = 6);

std::vector<int> set_bits(StateSet s);

}  // namespace wb

#endif
