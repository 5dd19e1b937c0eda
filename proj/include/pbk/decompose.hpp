#pragma once

#include <cstddef>
#include <vector>

#include "pbk/braid_word.hpp"

namespace pbk {

/// One split factor of a link. An unknot piece has no prime words.
struct SplitPiece {
  std::vector<BraidWord> prime_words;
  bool unknot = false;
};

/// Split and prime decomposition of a closure, carrying |L|, s(L) and p(L).
struct LinkClass {
  std::vector<SplitPiece> pieces;
  int components = 0;
  // False when a rewrite search ran out of budget, so a prime word may still
  // hide a connected-sum factorization.
  bool verified = true;

  int split_count() const { return static_cast<int>(pieces.size()); }
  int prime_count() const;
};

/// Splits at unused generators, then factors each piece by destabilization
/// and the two connected-sum rules, searching rewrites (rotation, distant
/// commutation, braid relation; at most `budget` words per search) when no
/// rule applies directly. Words that survive are prime.
LinkClass decompose(const BraidWord& w, std::size_t budget = kDefaultBudget);

}  // namespace pbk
