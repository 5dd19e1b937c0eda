#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "pbk/braid_word.hpp"

namespace pbk {

class ShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Memoization key. First token is the strand count; then each step of the
/// commutation normal form, letters ascending, terminated by 0.
using CanonicalKey = std::vector<std::int32_t>;

struct CanonicalKeyHash {
  std::size_t operator()(const CanonicalKey& key) const noexcept;
};

/// Lexicographically least step normal form over the class of words reachable
/// by cyclic rotation and distant commutation. Braid relations are not
/// applied, so braid-equivalent words may get different keys.
CanonicalKey canonical_key(const BraidWord& w);

/// Rewrites a connected word into the shape s_i s_i b' using rotation,
/// distant commutation and braid relations (breadth first, at most `budget`
/// words). nullopt when the search is exhausted or the closure is an unlink.
std::optional<BraidWord> find_adjacent_square(const BraidWord& w,
                                              std::size_t budget = kDefaultBudget);

/// Crossing change and oriented resolution at the leading square.
struct SkeinTriple {
  BraidWord plus;   // s_i s_i b'
  BraidWord minus;  // b'
  BraidWord zero;   // s_i b'
  int delta = 0;    // 0 when `zero` has more components, 1 when `plus` does
};

/// Throws ShapeError unless the first two letters agree.
SkeinTriple resolve_square(const BraidWord& w);

}  // namespace pbk
