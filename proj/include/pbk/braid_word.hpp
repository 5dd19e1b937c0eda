#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pbk {

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class RangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// Bound on the number of words visited by any rewrite search.
inline constexpr std::size_t kDefaultBudget = 200000;

// Rewrite searches pack letters into chars.
inline constexpr int kMaxStrands = 120;

/// A positive braid word: generator indices in 1..strands-1, read left to
/// right. Negative generators are not representable.
struct BraidWord {
  int strands = 1;
  std::vector<int> letters;

  BraidWord() = default;
  /// Throws RangeError if a letter is outside 1..strands-1.
  BraidWord(int strands, std::vector<int> letters);

  std::size_t length() const { return letters.size(); }
  bool empty() const { return letters.empty(); }

  friend bool operator==(const BraidWord&, const BraidWord&) = default;
};

/// Parses "1 1 2", "1^2, 2^3" or "strands=3: 1 2". Tokens are separated by
/// whitespace or commas; a caret suffix repeats the letter.
BraidWord parse_braid(std::string_view text,
                      std::optional<int> explicit_strands = std::nullopt);

/// "strands=N: i j k" (the empty word prints as "strands=N:").
std::string to_string(const BraidWord& w);

/// Letters only, "1 1 2".
std::string letters_string(const BraidWord& w);

/// Number of cycles of the permutation induced by the word.
int closure_components(const BraidWord& w);

/// counts[i] = occurrences of generator i; counts[0] is unused.
std::vector<int> generator_counts(const BraidWord& w);

/// True when every generator 1..strands-1 occurs (a connected closure diagram).
bool uses_all_generators(const BraidWord& w);

/// Splits the diagram at unused generators. Each piece is rebased onto
/// strands 1..k; isolated strands come back as the empty word on one strand.
std::vector<BraidWord> split_pieces(const BraidWord& w);

/// Two closures whose connected sum is the closure of the input.
struct FactorPair {
  BraidWord left;
  BraidWord right;
};

/// A generator occurring exactly once splits a connected word into a
/// connected sum; at a boundary generator one side is a single strand
/// (Markov destabilization).
std::optional<FactorPair> split_single_occurrence(const BraidWord& w);

/// Cyclic factorization A*B with A in generators < k and B in generators >= k,
/// up to distant commutation. The two closures share strand k.
std::optional<FactorPair> split_two_block(const BraidWord& w);

/// split_single_occurrence, then split_two_block.
std::optional<FactorPair> split_connected_sum(const BraidWord& w);

/// Positive exponent sum of the word, i.e. crossing count.
inline int crossings(const BraidWord& w) { return static_cast<int>(w.letters.size()); }

}  // namespace pbk
