#include <doctest.h>

#include "pbk/braid_word.hpp"

using pbk::BraidWord;
using pbk::parse_braid;

TEST_CASE("parse plain and power notation") {
  auto w = parse_braid("1 1 2 2 2");
  CHECK(w.strands == 3);
  CHECK(w.letters == std::vector<int>{1, 1, 2, 2, 2});

  auto fig = parse_braid("1^2 2^3 1 2^4");
  CHECK(fig.strands == 3);
  CHECK(fig.letters == std::vector<int>{1, 1, 2, 2, 2, 1, 2, 2, 2, 2});

  CHECK(parse_braid("1,1, 2").letters == std::vector<int>{1, 1, 2});
  CHECK(parse_braid("strands=5: 1 3").strands == 5);
  CHECK(parse_braid("1 2", 6).strands == 6);
  CHECK(parse_braid("strands=2:").empty());
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(parse_braid("0 1"), pbk::ParseError);
  CHECK_THROWS_AS(parse_braid("-1"), pbk::ParseError);
  CHECK_THROWS_AS(parse_braid("a"), pbk::ParseError);
  CHECK_THROWS_AS(parse_braid(""), pbk::ParseError);
  CHECK_THROWS_AS(parse_braid("strands=2: 2"), pbk::RangeError);
  CHECK_THROWS_AS(BraidWord(3, {3}), pbk::RangeError);
}

TEST_CASE("text round trip") {
  auto w = parse_braid("strands=4: 1 3 3");
  CHECK(pbk::to_string(w) == "strands=4: 1 3 3");
  CHECK(parse_braid(pbk::to_string(w)) == w);
  CHECK(pbk::letters_string(w) == "1 3 3");
}

TEST_CASE("closure components") {
  CHECK(pbk::closure_components(BraidWord(1, {})) == 1);
  CHECK(pbk::closure_components(BraidWord(2, {1, 1})) == 2);
  CHECK(pbk::closure_components(BraidWord(2, {1, 1, 1})) == 1);
  CHECK(pbk::closure_components(BraidWord(4, {})) == 4);
  CHECK(pbk::closure_components(parse_braid("1^2 2^3 1 2^4")) == 1);
}

TEST_CASE("split pieces follow generator connectivity") {
  auto pieces = pbk::split_pieces(BraidWord(4, {1, 1, 3, 3}));
  REQUIRE(pieces.size() == 2);
  CHECK(pieces[0] == BraidWord(2, {1, 1}));
  CHECK(pieces[1] == BraidWord(2, {1, 1}));

  auto with_free = pbk::split_pieces(BraidWord(4, {1, 2}));
  REQUIRE(with_free.size() == 2);
  CHECK(with_free[1] == BraidWord(1, {}));
  CHECK(pbk::uses_all_generators(BraidWord(3, {2, 1})));
  CHECK_FALSE(pbk::uses_all_generators(BraidWord(3, {1, 1})));
}

TEST_CASE("syntactic connected-sum rules") {
  auto a = pbk::split_single_occurrence(BraidWord(4, {1, 1, 2, 3, 3}));
  REQUIRE(a);
  CHECK(a->left == BraidWord(2, {1, 1}));
  CHECK(a->right == BraidWord(2, {1, 1}));

  auto b = pbk::split_two_block(BraidWord(3, {1, 1, 1, 2, 2, 2}));
  REQUIRE(b);
  CHECK(b->left == BraidWord(2, {1, 1, 1}));
  CHECK(b->right == BraidWord(2, {1, 1, 1}));

  // Interleaved blocks are not a two-block factorization.
  CHECK_FALSE(pbk::split_two_block(BraidWord(3, {1, 2, 1, 2})));
  CHECK_FALSE(pbk::split_connected_sum(BraidWord(2, {1, 1, 1})));
}
