#include <doctest.h>

#include "pbk/alexander.hpp"
#include "pbk/harness.hpp"

using pbk::BraidWord;
using pbk::ConwayPoly;
using pbk::HalfLaurent;

namespace {
const HalfLaurent kTrefoil = HalfLaurent::from_pairs({{2, 1}, {0, -1}, {-2, 1}});
const HalfLaurent kHopf = HalfLaurent::from_pairs({{2, 1}, {0, -2}, {-2, 1}});
}  // namespace

TEST_CASE("Conway polynomial by skein recursion") {
  CHECK(pbk::conway(BraidWord(1, {})) == ConwayPoly::constant(1));
  CHECK(pbk::conway(BraidWord(2, {1, 1})) == ConwayPoly::z());
  CHECK(pbk::conway(BraidWord(2, {1, 1, 1})) == ConwayPoly({1, 0, 1}));
  CHECK(pbk::conway(BraidWord(3, {1, 1, 1, 2, 2, 2})) == ConwayPoly({1, 0, 2, 0, 1}));
  CHECK(pbk::conway(BraidWord(4, {1, 1, 3, 3})).is_zero());
  CHECK(pbk::conway(BraidWord(2, {})).is_zero());
}

TEST_CASE("Euler characteristic of HFK") {
  CHECK(pbk::hfk_euler(BraidWord(2, {1, 1})) == kHopf);
  CHECK(pbk::hfk_euler(BraidWord(2, {1, 1, 1})) == kTrefoil);
  CHECK(pbk::hfk_euler(BraidWord(1, {})) == HalfLaurent::constant(1));
  CHECK(pbk::hfk_euler(BraidWord(2, {1})) == HalfLaurent::constant(1));
}

TEST_CASE("Burau determinant") {
  CHECK(pbk::alexander_burau(BraidWord(2, {1, 1, 1})) == kTrefoil);
  CHECK(pbk::alexander_burau(BraidWord(2, {1, 1})) == kHopf);
  CHECK(pbk::alexander_burau(BraidWord(1, {})) == HalfLaurent::constant(1));
  CHECK(pbk::alexander_burau(BraidWord(4, {1, 1, 3, 3})).is_zero());

  auto fig = pbk::alexander_burau(pbk::figure3());
  CHECK(fig.max_doubled() == 8);
  CHECK(fig.coefficient_at(4) == 1);
  CHECK(fig.coefficient_at(3) == -1);
  CHECK(fig == pbk::hfk_euler(pbk::figure3()));
}

TEST_CASE("second coefficient") {
  CHECK(pbk::second_coefficient(BraidWord(2, {1, 1, 1})) == -1);
  CHECK(pbk::second_coefficient(BraidWord(2, {1, 1})) == -2);
  CHECK(pbk::second_coefficient(BraidWord(3, {1, 1, 1, 2, 2, 2})) == -2);
}

TEST_CASE("symmetric normalization") {
  // -t^3 - 1 up to units is t^(3/2) + t^(-3/2).
  auto p = pbk::normalize_symmetric(HalfLaurent::from_pairs({{6, -1}, {0, -1}}));
  CHECK(p == HalfLaurent::from_pairs({{3, 1}, {-3, 1}}));
}
