#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "pbk/bigraded.hpp"
#include "pbk/braid_word.hpp"
#include "pbk/kauffman.hpp"
#include "pbk/polynomial.hpp"

namespace pbk {

class UnknownFamily : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class BadParams : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// (s_1 ... s_(p-1))^q on p strands.
BraidWord torus(int p, int q);
/// s_1^k on 2 strands.
BraidWord t2(int k);
/// s_1^2 s_2^3 s_1 s_2^4, a diagram of the knot 10_139.
BraidWord figure3();
/// w1 followed by w2 shifted up by n1 - 1, on n1 + n2 - 1 strands.
BraidWord connected_sum(const BraidWord& a, const BraidWord& b);
/// w1 followed by w2 shifted up by n1, on n1 + n2 strands.
BraidWord disjoint_union(const BraidWord& a, const BraidWord& b);

/// Dispatch by name: torus P Q | t2 K | figure3 | connected_sum W1 W2 |
/// disjoint_union W1 W2. Word parameters use the braid text grammar.
BraidWord family(const std::string& name, const std::vector<std::string>& params);

/// Every word on 2..max_strands strands of length <= max_len, one per
/// canonical_key class, in order of strands, then length, then letters.
std::vector<BraidWord> corpus(int max_strands, int max_len);

/// One word per line, '#' starts a comment, optional "strands=N:" prefix.
std::vector<BraidWord> read_corpus(std::istream& in);

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerificationReport {
  BraidWord word;
  int components = 0;
  int splits = 0;
  int primes = 0;
  int euler = 0;
  int genus = 0;
  bool decomposition_verified = false;
  bool fibered = false;

  std::optional<HalfLaurent> skein_euler;
  std::optional<HalfLaurent> burau_euler;
  std::optional<HalfLaurent> kauffman_euler;
  std::optional<BigradingHistogram> kauffman_histogram;
  std::optional<Coeff> second_coefficient;

  BigradedRank predicted_top;
  BigradedRank predicted_next;
  std::optional<BigradedRank> skein_top;
  std::optional<BigradedRank> skein_next;

  std::vector<Check> checks;
  double elapsed_ms = 0.0;

  bool passed() const;
};

/// Runs every engine on w and compares them. Engine failures are recorded
/// as failed checks, never thrown.
VerificationReport verify(const BraidWord& w, std::size_t budget = kDefaultBudget);

/// Verifies words on `threads` workers (0 = hardware concurrency); the
/// result order matches the input.
std::vector<VerificationReport> verify_all(const std::vector<BraidWord>& words,
                                           unsigned threads = 0,
                                           std::size_t budget = kDefaultBudget);

nlohmann::ordered_json to_json(const HalfLaurent& p);
nlohmann::ordered_json to_json(const BigradedRank& r);
nlohmann::ordered_json to_json(const BigradingHistogram& h);
/// Timing is left out unless asked for, so reports are reproducible.
nlohmann::ordered_json to_json(const VerificationReport& r, bool include_timing = false);

}  // namespace pbk
