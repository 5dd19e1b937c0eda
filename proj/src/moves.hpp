#pragma once

// Shared machinery for the breadth-first rewrite searches. Words are packed
// into std::string, one char per letter, and kept in least cyclic rotation
// (rotation is free on closures).

#include <algorithm>
#include <cstdlib>
#include <cstddef>
#include <deque>
#include <string>
#include <unordered_set>

#include "pbk/braid_word.hpp"

namespace pbk::detail {

inline std::string pack(const BraidWord& w) {
  std::string s;
  s.reserve(w.letters.size());
  for (int g : w.letters) s.push_back(static_cast<char>(g));
  return s;
}

inline BraidWord unpack(const std::string& s, int strands) {
  std::vector<int> letters;
  letters.reserve(s.size());
  for (char c : s) letters.push_back(static_cast<int>(c));
  return BraidWord(strands, std::move(letters));
}

inline std::string least_rotation(const std::string& s) {
  std::string best = s;
  std::string cur = s;
  for (std::size_t k = 1; k < s.size(); ++k) {
    std::rotate(cur.begin(), cur.begin() + 1, cur.end());
    if (cur < best) best = cur;
  }
  return best;
}

/// Calls f(neighbour) for every word one move away, in a fixed order:
/// braid relations lowering the middle letter (s_{i+1} s_i s_{i+1} ->
/// s_i s_{i+1} s_i), then raising, then distant commutations. All windows
/// are cyclic. Neighbours are returned in least rotation.
template <class F>
void for_each_move(const std::string& word, F&& f) {
  const std::size_t n = word.size();
  if (n < 2) return;
  auto at = [&](std::size_t k) { return static_cast<int>(word[k % n]); };

  if (n >= 3) {
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t k = 0; k < n; ++k) {
        int a = at(k), b = at(k + 1), c = at(k + 2);
        if (a != c || std::abs(a - b) != 1) continue;
        bool lowering = b < a;
        if (lowering != (pass == 0)) continue;
        std::string next = word;
        next[k % n] = static_cast<char>(b);
        next[(k + 1) % n] = static_cast<char>(a);
        next[(k + 2) % n] = static_cast<char>(b);
        f(least_rotation(next));
      }
    }
  }
  const std::size_t pairs = n == 2 ? 1 : n;
  for (std::size_t k = 0; k < pairs; ++k) {
    int a = at(k), b = at(k + 1);
    if (std::abs(a - b) < 2) continue;
    std::string next = word;
    std::swap(next[k % n], next[(k + 1) % n]);
    f(least_rotation(next));
  }
}

enum class SearchOutcome { Found, Exhausted, BudgetExceeded };

/// Breadth-first search from `start` (any rotation) until accept(word) holds.
/// `found` receives the accepted word.
template <class Accept>
SearchOutcome bfs(const std::string& start, std::size_t budget, Accept&& accept,
                  std::string& found) {
  std::string root = least_rotation(start);
  if (accept(root)) {
    found = root;
    return SearchOutcome::Found;
  }
  std::unordered_set<std::string> seen{root};
  std::deque<std::string> queue{root};
  bool hit = false;
  bool over = false;
  while (!queue.empty() && !hit && !over) {
    std::string cur = std::move(queue.front());
    queue.pop_front();
    for_each_move(cur, [&](std::string next) {
      if (hit || over) return;
      if (!seen.insert(next).second) return;
      if (accept(next)) {
        found = std::move(next);
        hit = true;
        return;
      }
      if (seen.size() >= budget) {
        over = true;
        return;
      }
      queue.push_back(std::move(next));
    });
  }
  if (hit) return SearchOutcome::Found;
  return over ? SearchOutcome::BudgetExceeded : SearchOutcome::Exhausted;
}

}  // namespace pbk::detail
