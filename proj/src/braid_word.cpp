#include "pbk/braid_word.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <sstream>

namespace pbk {

namespace {

int parse_positive(std::string_view token, std::string_view whole) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw ParseError("invalid token '" + std::string(token) + "' in '" +
                     std::string(whole) + "'");
  }
  if (value <= 0) {
    throw ParseError("generator indices and powers must be positive, got '" +
                     std::string(token) + "'");
  }
  return value;
}

bool is_separator(char c) {
  return c == ',' || std::isspace(static_cast<unsigned char>(c));
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

BraidWord rebased(const std::vector<int>& letters, int first_strand, int last_strand) {
  std::vector<int> shifted;
  shifted.reserve(letters.size());
  for (int g : letters) shifted.push_back(g - first_strand + 1);
  return BraidWord(last_strand - first_strand + 1, std::move(shifted));
}

std::vector<int> rotated(const std::vector<int>& letters, std::size_t start) {
  std::vector<int> out(letters.size());
  std::rotate_copy(letters.begin(), letters.begin() + static_cast<std::ptrdiff_t>(start),
                   letters.end(), out.begin());
  return out;
}

}  // namespace

BraidWord::BraidWord(int strands_, std::vector<int> letters_)
    : strands(strands_), letters(std::move(letters_)) {
  if (strands < 1) throw RangeError("strand count must be at least 1");
  for (int g : letters) {
    if (g < 1 || g > strands - 1) {
      throw RangeError("generator " + std::to_string(g) + " out of range for " +
                       std::to_string(strands) + " strands");
    }
  }
}

BraidWord parse_braid(std::string_view text, std::optional<int> explicit_strands) {
  std::string_view body = trim(text);
  if (body.starts_with("strands=")) {
    auto colon = body.find(':');
    if (colon == std::string_view::npos) throw ParseError("missing ':' after strands=N");
    int n = parse_positive(trim(body.substr(8, colon - 8)), text);
    if (explicit_strands && *explicit_strands != n) {
      throw ParseError("conflicting strand counts in '" + std::string(text) + "'");
    }
    explicit_strands = n;
    body = body.substr(colon + 1);
  }

  std::vector<int> letters;
  std::size_t i = 0;
  while (i < body.size()) {
    if (is_separator(body[i])) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < body.size() && !is_separator(body[j])) ++j;
    std::string_view token = body.substr(i, j - i);
    i = j;

    int power = 1;
    if (auto caret = token.find('^'); caret != std::string_view::npos) {
      power = parse_positive(token.substr(caret + 1), text);
      token = token.substr(0, caret);
    }
    int g = parse_positive(token, text);
    letters.insert(letters.end(), static_cast<std::size_t>(power), g);
  }

  if (letters.empty() && !explicit_strands) {
    throw ParseError("empty braid word needs an explicit strand count");
  }
  int max_index = letters.empty() ? 0 : *std::max_element(letters.begin(), letters.end());
  if (explicit_strands) {
    if (*explicit_strands < 1) throw RangeError("strand count must be at least 1");
    if (max_index >= *explicit_strands) {
      throw RangeError("generator " + std::to_string(max_index) + " needs more than " +
                       std::to_string(*explicit_strands) + " strands");
    }
    return BraidWord(*explicit_strands, std::move(letters));
  }
  return BraidWord(max_index + 1, std::move(letters));
}

std::string letters_string(const BraidWord& w) {
  std::ostringstream out;
  for (std::size_t k = 0; k < w.letters.size(); ++k) {
    if (k) out << ' ';
    out << w.letters[k];
  }
  return out.str();
}

std::string to_string(const BraidWord& w) {
  std::string s = "strands=" + std::to_string(w.strands) + ":";
  if (!w.empty()) s += " " + letters_string(w);
  return s;
}

int closure_components(const BraidWord& w) {
  std::vector<int> perm(static_cast<std::size_t>(w.strands));
  std::iota(perm.begin(), perm.end(), 0);
  for (int g : w.letters) std::swap(perm[g - 1], perm[g]);

  std::vector<bool> seen(perm.size(), false);
  int cycles = 0;
  for (std::size_t s = 0; s < perm.size(); ++s) {
    if (seen[s]) continue;
    ++cycles;
    for (std::size_t t = s; !seen[t]; t = static_cast<std::size_t>(perm[t])) seen[t] = true;
  }
  return cycles;
}

std::vector<int> generator_counts(const BraidWord& w) {
  std::vector<int> counts(static_cast<std::size_t>(std::max(w.strands, 1)), 0);
  for (int g : w.letters) ++counts[static_cast<std::size_t>(g)];
  return counts;
}

bool uses_all_generators(const BraidWord& w) {
  auto counts = generator_counts(w);
  return std::all_of(counts.begin() + 1, counts.end(), [](int c) { return c > 0; });
}

std::vector<BraidWord> split_pieces(const BraidWord& w) {
  auto counts = generator_counts(w);
  std::vector<BraidWord> pieces;
  int first = 1;
  for (int s = 1; s <= w.strands; ++s) {
    bool closes = s == w.strands || counts[static_cast<std::size_t>(s)] == 0;
    if (!closes) continue;
    std::vector<int> letters;
    for (int g : w.letters) {
      if (g >= first && g < s) letters.push_back(g);
    }
    pieces.push_back(rebased(letters, first, s));
    first = s + 1;
  }
  return pieces;
}

std::optional<FactorPair> split_single_occurrence(const BraidWord& w) {
  if (w.strands < 2 || !uses_all_generators(w)) return std::nullopt;
  auto counts = generator_counts(w);
  for (int k = 1; k < w.strands; ++k) {
    if (counts[static_cast<std::size_t>(k)] != 1) continue;
    auto pos = static_cast<std::size_t>(
        std::find(w.letters.begin(), w.letters.end(), k) - w.letters.begin());
    // Rotate so the lone crossing comes last; the rest splits into two
    // commuting blocks on either side of it.
    auto word = rotated(w.letters, (pos + 1) % w.letters.size());
    std::vector<int> low, high;
    for (int g : word) {
      if (g < k) low.push_back(g);
      else if (g > k) high.push_back(g);
    }
    return FactorPair{rebased(low, 1, k), rebased(high, k + 1, w.strands)};
  }
  return std::nullopt;
}

std::optional<FactorPair> split_two_block(const BraidWord& w) {
  if (w.strands < 3 || !uses_all_generators(w)) return std::nullopt;
  const std::size_t n = w.letters.size();
  for (int k = 2; k < w.strands; ++k) {
    // Only the pair (k-1, k) fails to commute across the cut, so the word
    // factors iff those letters form one cyclic block of each.
    std::vector<std::size_t> boundary;
    for (std::size_t p = 0; p < n; ++p) {
      int g = w.letters[p];
      if (g == k - 1 || g == k) boundary.push_back(p);
    }
    int transitions = 0;
    std::size_t start = 0;
    for (std::size_t q = 0; q < boundary.size(); ++q) {
      int prev = w.letters[boundary[(q + boundary.size() - 1) % boundary.size()]];
      int cur = w.letters[boundary[q]];
      if (prev != cur) {
        ++transitions;
        if (cur == k - 1) start = boundary[q];
      }
    }
    if (transitions != 2) continue;
    auto word = rotated(w.letters, start);
    std::vector<int> low, high;
    for (int g : word) (g < k ? low : high).push_back(g);
    return FactorPair{rebased(low, 1, k), rebased(high, k, w.strands)};
  }
  return std::nullopt;
}

std::optional<FactorPair> split_connected_sum(const BraidWord& w) {
  if (auto f = split_single_occurrence(w)) return f;
  return split_two_block(w);
}

}  // namespace pbk
