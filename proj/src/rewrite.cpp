#include "pbk/rewrite.hpp"

#include <algorithm>
#include <deque>
#include <string>
#include <unordered_set>

#include "moves.hpp"

namespace pbk {

namespace {

// Step normal form of the trace of `word`: each letter sits one step above
// the latest earlier letter it does not commute with. Steps are sorted and
// terminated by a 0 char.
std::string step_form(const std::string& word, int strands) {
  std::vector<int> last(static_cast<std::size_t>(strands) + 2, 0);
  std::vector<std::string> steps;
  for (char c : word) {
    int g = static_cast<int>(c);
    int level = 1 + std::max({last[g - 1], last[g], last[g + 1]});
    last[g] = level;
    if (steps.size() < static_cast<std::size_t>(level)) steps.resize(level);
    steps[level - 1].push_back(c);
  }
  std::string out;
  for (auto& s : steps) {
    std::sort(s.begin(), s.end());
    out += s;
    out.push_back('\0');
  }
  return out;
}

std::string strip_separators(const std::string& form) {
  std::string word;
  for (char c : form) {
    if (c) word.push_back(c);
  }
  return word;
}

// Two occurrences of some s_i with nothing in {i-1, i, i+1} between them
// (cyclically). Returns the word rotated and commuted to s_i s_i b'.
std::optional<std::string> expose_square(const std::string& word, int strands) {
  const std::size_t n = word.size();
  for (int i = 1; i < strands; ++i) {
    std::vector<std::size_t> at;
    for (std::size_t p = 0; p < n; ++p) {
      if (word[p] == i) at.push_back(p);
    }
    if (at.size() < 2) continue;
    for (std::size_t q = 0; q < at.size(); ++q) {
      std::size_t from = at[q];
      std::size_t to = at[(q + 1) % at.size()];
      std::size_t gap = (to + n - from) % n - 1;
      bool clear = true;
      for (std::size_t d = 1; d <= gap && clear; ++d) {
        int g = word[(from + d) % n];
        clear = std::abs(g - i) >= 2;
      }
      if (!clear) continue;
      std::string out(2, static_cast<char>(i));
      for (std::size_t d = 1; d <= gap; ++d) out.push_back(word[(from + d) % n]);
      for (std::size_t d = gap + 2; d < n; ++d) out.push_back(word[(from + d) % n]);
      return out;
    }
  }
  return std::nullopt;
}

bool closes_to_unlink(const BraidWord& w) {
  for (const auto& piece : split_pieces(w)) {
    if (static_cast<int>(piece.length()) != piece.strands - 1) return false;
  }
  return true;
}

}  // namespace

std::size_t CanonicalKeyHash::operator()(const CanonicalKey& key) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (auto t : key) {
    h ^= static_cast<std::size_t>(t) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

CanonicalKey canonical_key(const BraidWord& w) {
  if (w.strands > kMaxStrands) throw RangeError("too many strands for canonical_key");
  const int strands = w.strands;
  std::string root = step_form(detail::pack(w), strands);
  std::string best = root;
  std::unordered_set<std::string> seen{root};
  std::deque<std::string> queue{root};
  // Conjugates of a trace: repeatedly move a minimal letter (one from the
  // first step) to the end.
  while (!queue.empty()) {
    std::string form = std::move(queue.front());
    queue.pop_front();
    if (form.empty()) break;
    std::size_t first_end = form.find('\0');
    std::string word = strip_separators(form);
    for (std::size_t k = 0; k < first_end; ++k) {
      if (k > 0 && form[k] == form[k - 1]) continue;
      std::string moved = word;
      moved.erase(k, 1);
      moved.push_back(form[k]);
      std::string next = step_form(moved, strands);
      if (seen.insert(next).second) {
        if (next < best) best = next;
        queue.push_back(std::move(next));
      }
    }
  }
  CanonicalKey key;
  key.reserve(best.size() + 1);
  key.push_back(strands);
  for (char c : best) key.push_back(static_cast<std::int32_t>(c));
  return key;
}

std::optional<BraidWord> find_adjacent_square(const BraidWord& w, std::size_t budget) {
  if (w.strands > kMaxStrands) throw RangeError("too many strands for rewrite search");
  if (w.length() < 2 || closes_to_unlink(w)) return std::nullopt;
  const int strands = w.strands;
  std::string start = detail::pack(w);
  if (auto sq = expose_square(start, strands)) return detail::unpack(*sq, strands);

  std::string found;
  auto accept = [&](const std::string& s) { return expose_square(s, strands).has_value(); };
  if (detail::bfs(start, budget, accept, found) != detail::SearchOutcome::Found) {
    return std::nullopt;
  }
  return detail::unpack(*expose_square(found, strands), strands);
}

SkeinTriple resolve_square(const BraidWord& w) {
  if (w.length() < 2 || w.letters[0] != w.letters[1]) {
    throw ShapeError("resolve_square needs a word starting with s_i s_i, got " + to_string(w));
  }
  std::vector<int> rest(w.letters.begin() + 2, w.letters.end());
  std::vector<int> once(w.letters.begin() + 1, w.letters.end());
  SkeinTriple t{w, BraidWord(w.strands, std::move(rest)), BraidWord(w.strands, std::move(once)), 0};
  t.delta = closure_components(t.zero) > closure_components(t.plus) ? 0 : 1;
  return t;
}

}  // namespace pbk
