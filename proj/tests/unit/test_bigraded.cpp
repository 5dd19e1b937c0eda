#include <doctest.h>

#include "pbk/bigraded.hpp"

using pbk::BigradedRank;

TEST_CASE("constants") {
  CHECK(pbk::hopf_j() == BigradedRank{{0, 1, 1}, {-1, 0, 2}, {-2, -1, 1}});
  CHECK(pbk::split_v() == BigradedRank{{0, 0, 1}, {-1, 0, 1}});
  CHECK(pbk::unit_rank() == BigradedRank{{0, 0, 1}});
}

TEST_CASE("tensor products") {
  CHECK(pbk::tensor(pbk::unit_rank(), pbk::hopf_j()) == pbk::hopf_j());
  CHECK(pbk::tensor(BigradedRank{{-1, 0, 1}}, pbk::split_v()) == BigradedRank{{-1, 0, 1}, {-2, 0, 1}});
  CHECK(pbk::tensor(pbk::hopf_j(), pbk::hopf_j()).rank(-1, 1) == 4);
  CHECK(pbk::tensor_power(pbk::split_v(), 0) == pbk::unit_rank());
  CHECK(pbk::tensor_power(pbk::split_v(), 2) == BigradedRank{{0, 0, 1}, {-1, 0, 2}, {-2, 0, 1}});
}

TEST_CASE("restrictions, shifts and Euler characteristic") {
  const auto& j = pbk::hopf_j();
  CHECK(j.at_alexander(0) == BigradedRank{{-1, 0, 2}});
  CHECK(j.alexander_at_least(0) == BigradedRank{{0, 1, 1}, {-1, 0, 2}});
  CHECK(j.shifted(1, -1).rank(1, 0) == 1);
  CHECK(j.total() == 4);
  CHECK(j.maslov_total(-1) == 2);
  CHECK(j.euler() == pbk::HalfLaurent::from_pairs({{2, 1}, {0, -2}, {-2, 1}}));
}

TEST_CASE("ranks stay nonnegative") {
  BigradedRank r{{0, 0, 1}};
  r.add(0, 0, -1);
  CHECK(r.empty());
  CHECK_THROWS(r.add(0, 0, -1));
}

TEST_CASE("printing") {
  CHECK(BigradedRank{}.to_string() == "0");
  CHECK(BigradedRank{{0, 1, 1}, {-1, 0, 2}}.to_string() == "F[0,1] ⊕ F^2[-1,0]");
  auto t = pbk::hopf_j().triples();
  REQUIRE(t.size() == 3);
  CHECK(t.front() == std::tuple<int, int, std::int64_t>{0, 1, 1});
}
