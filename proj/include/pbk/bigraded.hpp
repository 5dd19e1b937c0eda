#pragma once

#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "pbk/polynomial.hpp"

namespace pbk {

struct Grading {
  int maslov = 0;
  int alexander = 0;
  friend auto operator<=>(const Grading&, const Grading&) = default;
};

/// Ranks over F_2 of a bigraded vector space, (Maslov, Alexander) -> rank.
/// Zero ranks are never stored.
class BigradedRank {
 public:
  BigradedRank() = default;
  BigradedRank(std::initializer_list<std::tuple<int, int, std::int64_t>> entries);

  std::int64_t rank(int maslov, int alexander) const;
  void add(int maslov, int alexander, std::int64_t rank);
  const std::map<Grading, std::int64_t>& entries() const { return ranks_; }

  bool empty() const { return ranks_.empty(); }
  std::int64_t total() const;
  /// Sum of ranks at one Maslov grading over all Alexander gradings.
  std::int64_t maslov_total(int maslov) const;

  BigradedRank at_alexander(int alexander) const;
  BigradedRank alexander_at_least(int alexander) const;
  BigradedRank shifted(int maslov, int alexander) const;

  /// sum (-1)^M rank t^A
  HalfLaurent euler() const;

  BigradedRank& operator+=(const BigradedRank& o);
  friend BigradedRank operator+(BigradedRank a, const BigradedRank& b) { return a += b; }
  friend bool operator==(const BigradedRank&, const BigradedRank&) = default;

  /// "F[0,1] + F^2[-1,0]" with the direct-sum sign, "0" when empty.
  std::string to_string() const;
  /// [[M, A, rank], ...] sorted by A descending, then M descending.
  std::vector<std::tuple<int, int, std::int64_t>> triples() const;

 private:
  std::map<Grading, std::int64_t> ranks_;
};

/// Bigrading-additive convolution.
BigradedRank tensor(const BigradedRank& a, const BigradedRank& b);
BigradedRank tensor_power(const BigradedRank& a, unsigned k);

/// F[0,0]
const BigradedRank& unit_rank();
/// Third term of the skein sequence when L+ has more components:
/// F[0,1] + F^2[-1,0] + F[-2,-1].
const BigradedRank& hopf_j();
/// Disjoint-union factor F[0,0] + F[-1,0].
const BigradedRank& split_v();

}  // namespace pbk
