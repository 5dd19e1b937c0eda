#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pbk/braid_word.hpp"
#include "pbk/polynomial.hpp"

namespace pbk {

class MultiComponent : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class SplitDiagram : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Corners of a crossing, named by orientation: OUT between the two outgoing
/// arcs, IN between the two incoming arcs, LEFT and RIGHT the side regions.
enum class Quadrant { Out, In, Left, Right };

std::string to_string(Quadrant q);

/// Local weights at a positive crossing. Alexander weights are doubled
/// (OUT = +1/2 is stored as +1).
struct WeightTable {
  int doubled_alexander[4];
  int maslov[4];

  int alexander2(Quadrant q) const { return doubled_alexander[static_cast<int>(q)]; }
  int maslov_of(Quadrant q) const { return maslov[static_cast<int>(q)]; }
};

inline constexpr WeightTable kPositiveCrossing{{+1, -1, 0, 0}, {0, -1, 0, 0}};

struct Slot {
  int region = 0;
  Quadrant quadrant = Quadrant::Out;
};

/// Closed braid drawn with strands running upward. Region 0 is the inner
/// disc (left of strand 1), the last region is the outer one (right of
/// strand n); in between come the gaps of columns 1..n-1, where column i
/// is cut by its s_i crossings, gap j sitting just above the j-th one.
struct ClosedBraidDiagram {
  BraidWord word;
  int region_count = 0;
  std::vector<bool> forbidden;           // by region
  std::vector<std::vector<Slot>> slots;  // by crossing, in word order
  std::vector<int> column_of_region;     // 0..n
};

/// Throws MultiComponent for links and SplitDiagram when a generator is
/// unused. The marked edge sits on the closure arc of the rightmost strand,
/// forbidding the outer region and the closing gap of column n-1.
ClosedBraidDiagram build_diagram(const BraidWord& w);

struct KauffmanState {
  std::vector<Slot> assignment;  // by crossing
  int maslov = 0;
  int alexander = 0;
};

/// All bijections crossings -> allowed regions through adjacent corners,
/// in lexicographic order of slot choices.
std::vector<KauffmanState> enumerate_states(const ClosedBraidDiagram& d);

using BigradingHistogram = std::map<std::pair<int, int>, long long>;  // (M, A) -> count

BigradingHistogram bigraded_counts(const std::vector<KauffmanState>& states);

/// Sum over states of (-1)^M t^A.
HalfLaurent state_sum(const std::vector<KauffmanState>& states);

/// "c1:(3,OUT) c2:(0,LEFT) | M=-1, A=0"
std::string to_string(const KauffmanState& s);

}  // namespace pbk
