#pragma once

#include <cstddef>
#include <stdexcept>

#include "pbk/braid_word.hpp"
#include "pbk/polynomial.hpp"

namespace pbk {

/// The skein recursion could not expose a square within its budget.
class EngineFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Internal inconsistency in the Burau pipeline.
class InexactDivision : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Conway polynomial by the skein relation
///   C(L+) = C(L-) + z C(L0)
/// resolved at adjacent squares, with C(unknot) = 1, C(split) = 0 and
/// multiplicativity across connected sums. Results are memoized by
/// canonical_key in a process-wide, thread-safe cache.
ConwayPoly conway(const BraidWord& w, std::size_t budget = kDefaultBudget);

/// Graded Euler characteristic of HFK in the integral Maslov convention:
/// (t^(1/2) - t^(-1/2))^(|L|-1) * C(t^(1/2) - t^(-1/2)).
HalfLaurent hfk_euler(const BraidWord& w, std::size_t budget = kDefaultBudget);

/// Same quantity from det(I - reduced Burau(w)) / (1 + t + ... + t^(n-1)),
/// normalized to be symmetric with positive top coefficient.
HalfLaurent alexander_burau(const BraidWord& w);

/// Coefficient of t^(g-1) in hfk_euler(w).
Coeff second_coefficient(const BraidWord& w, std::size_t budget = kDefaultBudget);

/// Normalizes a nonzero Laurent polynomial by a unit +-t^(k/2) so that it is
/// symmetric (about 0) with positive top coefficient.
HalfLaurent normalize_symmetric(const HalfLaurent& p);

}  // namespace pbk
