#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "pbk/bigraded.hpp"
#include "pbk/braid_word.hpp"

namespace pbk {

class TriangleError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class Unverifiable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// HFK restricted to the two highest Alexander gradings g and g-1.
struct TopTwo {
  int genus = 0;
  BigradedRank groups;

  BigradedRank top() const { return groups.at_alexander(genus); }
  BigradedRank next() const { return groups.at_alexander(genus - 1); }
};

/// F^(p+|L|-s)[-1] tensor (F[0] + F[-1])^(s-1), placed at Alexander grading g-1.
BigradedRank predicted_next_to_top(int primes, int components, int splits, int genus);

/// Tensor of the split pieces' top groups with V^(s-1).
BigradedRank predicted_top(const std::vector<BigradedRank>& piece_tops);

/// Every piece non-split, so each top is F[0, g_i]; the result sits at A = g.
BigradedRank predicted_top(int splits, int genus);

enum class ResolutionCase {
  ZeroMoreComponents,   // L0 has one more component than L+
  ZeroFewerComponents,  // L0 has one fewer; the third term carries J
};

/// One skein exact triangle at Alexander grading g-1 of L+:
///   ... -> X_m -F-> Y_m -G-> Z_(m-1) -> X_(m-1) -> ...
/// where X = HFK(L+, g-1), Y = HFK(L-, g-1) and Z is HFK(L0, g-1) or
/// (HFK(L0) tensor J) at g-1 depending on the case. Y and Z are known.
struct TriangleInstance {
  ResolutionCase resolution = ResolutionCase::ZeroMoreComponents;
  int genus = 0;          // g(L+)
  BigradedRank minus;     // Y, at A = g-1
  BigradedRank zero;      // Z, at A = g-1
};

/// Builds Z from the top two groups of L0.
TriangleInstance make_triangle(int delta, int genus_plus, const TopTwo& zero,
                               const BigradedRank& minus_top);

struct TriangleSolution {
  std::int64_t rank_minus_one = 0;  // X at (-1, g-1)
  std::int64_t rank_zero = 0;       // X at (0, g-1)
  BigradedRank group;               // all of X at A = g-1
};

/// Solves the triangle for X using exactness, F = 0 and G injective in
/// Maslov grading 0. Any other connecting map must be forced to zero by a
/// vanishing end; otherwise TriangleError (as for a negative rank).
TriangleSolution triangle_solve(const TriangleInstance& inst);

/// Top and next-to-top HFK by induction on crossings through skein exact
/// triangles. Throws Unverifiable if a square cannot be exposed within
/// budget or a genus identity fails along the way.
TopTwo top_two_via_skein(const BraidWord& w, std::size_t budget = kDefaultBudget);

/// HFK(L, g-1) from top_two_via_skein.
BigradedRank next_to_top_via_skein(const BraidWord& w, std::size_t budget = kDefaultBudget);

/// Process-wide counters of the skein recursion's genus bookkeeping
/// g(L+) = g(L-) + 1 = g(L0) + delta.
struct SkeinStats {
  std::uint64_t genus_checks = 0;
  std::uint64_t genus_violations = 0;
};
SkeinStats skein_stats();

/// HFK(R_n, g-1) for the ring of n unknots, n >= 3, from the triple
/// (R_n, #_(n-1) Hopf, R_(n-1)) starting at R_2 = T(2,4).
BigradedRank rn_next_to_top(int n);

}  // namespace pbk
