#include <doctest.h>

#include <random>

#include "pbk/alexander.hpp"
#include "pbk/decompose.hpp"
#include "pbk/harness.hpp"
#include "pbk/hfk.hpp"
#include "pbk/rewrite.hpp"
#include "pbk/seifert.hpp"

using pbk::BraidWord;

namespace {

BraidWord random_word(std::mt19937& rng, int max_strands, int max_len) {
  int n = std::uniform_int_distribution<int>(2, max_strands)(rng);
  int len = std::uniform_int_distribution<int>(0, max_len)(rng);
  std::uniform_int_distribution<int> gen(1, n - 1);
  std::vector<int> letters(static_cast<std::size_t>(len));
  for (auto& g : letters) g = gen(rng);
  return BraidWord(n, std::move(letters));
}

void rotate_once(BraidWord& w) {
  if (w.length() > 1) std::rotate(w.letters.begin(), w.letters.begin() + 1, w.letters.end());
}

// One random cyclic rotation or distant commutation.
void trace_move(std::mt19937& rng, BraidWord& w) {
  if (w.length() < 2) return;
  if (rng() % 3 == 0) {
    rotate_once(w);
    return;
  }
  std::size_t k = rng() % (w.length() - 1);
  if (std::abs(w.letters[k] - w.letters[k + 1]) >= 2) std::swap(w.letters[k], w.letters[k + 1]);
}

// A trace move or, when one is available, a braid relation.
void braid_move(std::mt19937& rng, BraidWord& w) {
  if (w.length() >= 3 && rng() % 2 == 0) {
    std::size_t start = rng() % (w.length() - 2);
    for (std::size_t k = start; k + 2 < w.length(); ++k) {
      int a = w.letters[k], b = w.letters[k + 1];
      if (w.letters[k + 2] == a && std::abs(a - b) == 1) {
        w.letters[k] = w.letters[k + 2] = b;
        w.letters[k + 1] = a;
        return;
      }
    }
  }
  trace_move(rng, w);
}

BraidWord rebuild(const pbk::LinkClass& link) {
  BraidWord out;
  bool first_piece = true;
  for (const auto& piece : link.pieces) {
    BraidWord p(1, {});
    for (const auto& prime : piece.prime_words) p = pbk::connected_sum(p, prime);
    out = first_piece ? p : pbk::disjoint_union(out, p);
    first_piece = false;
  }
  return out;
}

}  // namespace

TEST_CASE("canonical key is invariant under rotation and commutation") {
  std::mt19937 rng(20261015);
  for (int trial = 0; trial < 1000; ++trial) {
    BraidWord w = random_word(rng, 6, 12);
    BraidWord scrambled = w;
    int moves = std::uniform_int_distribution<int>(1, 40)(rng);
    for (int m = 0; m < moves; ++m) trace_move(rng, scrambled);
    REQUIRE(pbk::canonical_key(scrambled) == pbk::canonical_key(w));
  }
}

TEST_CASE("Alexander polynomial is invariant under braid moves") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    BraidWord w = random_word(rng, 5, 10);
    BraidWord moved = w;
    for (int m = 0; m < 25; ++m) braid_move(rng, moved);
    REQUIRE(pbk::alexander_burau(moved) == pbk::alexander_burau(w));
    REQUIRE(pbk::hfk_euler(moved) == pbk::alexander_burau(w));
    REQUIRE(pbk::closure_components(moved) == pbk::closure_components(w));
  }
}

TEST_CASE("Euler characteristic parity") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    BraidWord w = random_word(rng, 7, 14);
    auto eg = pbk::euler_and_genus(w);
    CHECK((eg.euler - pbk::closure_components(w)) % 2 == 0);
    CHECK(eg.genus >= 0);
    CHECK(eg.euler == w.strands - static_cast<int>(w.length()));
  }
}

TEST_CASE("decomposition is idempotent and reconstructs the link") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 150; ++trial) {
    BraidWord w = random_word(rng, 5, 10);
    auto link = pbk::decompose(w);
    REQUIRE(link.verified);
    for (const auto& piece : link.pieces) {
      for (const auto& prime : piece.prime_words) CHECK(pbk::decompose(prime).prime_count() == 1);
    }
    BraidWord again = rebuild(link);
    CHECK(pbk::conway(again) == pbk::conway(w));
    auto link2 = pbk::decompose(again);
    CHECK(link2.prime_count() == link.prime_count());
    CHECK(link2.split_count() == link.split_count());
    CHECK(link2.components == link.components);
  }
}

TEST_CASE("genus is additive over sums and unions") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    BraidWord a = random_word(rng, 4, 6), b = random_word(rng, 4, 6);
    int ga = pbk::euler_and_genus(a).genus, gb = pbk::euler_and_genus(b).genus;
    CHECK(pbk::euler_and_genus(pbk::connected_sum(a, b)).genus == ga + gb);
    CHECK(pbk::euler_and_genus(pbk::disjoint_union(a, b)).genus == ga + gb);
  }
}

TEST_CASE("formula and recursion agree on random sums and unions") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    BraidWord a = random_word(rng, 3, 7), b = random_word(rng, 3, 7);
    BraidWord w = rng() % 2 ? pbk::connected_sum(a, b) : pbk::disjoint_union(a, b);
    auto link = pbk::decompose(w);
    int g = pbk::euler_and_genus(w).genus;
    auto tt = pbk::top_two_via_skein(w);
    CHECK(tt.next() == pbk::predicted_next_to_top(link.prime_count(), link.components, link.split_count(), g));
    CHECK(tt.top() == pbk::predicted_top(link.split_count(), g));
  }
}
