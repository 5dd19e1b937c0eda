#include "pbk/alexander.hpp"

#include "memo.hpp"
#include "pbk/rewrite.hpp"
#include "pbk/seifert.hpp"

namespace pbk {

namespace {

detail::MemoCache<ConwayPoly>& conway_cache() {
  static detail::MemoCache<ConwayPoly> cache;
  return cache;
}

// Square matrix over Z[t^(+-1/2)], row major.
class PolyMatrix {
 public:
  explicit PolyMatrix(int n) : n_(n), cells_(static_cast<std::size_t>(n * n)) {}
  static PolyMatrix identity(int n) {
    PolyMatrix m(n);
    for (int i = 0; i < n; ++i) m(i, i) = HalfLaurent::constant(1);
    return m;
  }
  int size() const { return n_; }
  HalfLaurent& operator()(int r, int c) { return cells_[static_cast<std::size_t>(r * n_ + c)]; }
  const HalfLaurent& operator()(int r, int c) const {
    return cells_[static_cast<std::size_t>(r * n_ + c)];
  }
  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
    PolyMatrix out(a.n_);
    for (int i = 0; i < a.n_; ++i) {
      for (int k = 0; k < a.n_; ++k) {
        if (a(i, k).is_zero()) continue;
        for (int j = 0; j < a.n_; ++j) {
          if (!b(k, j).is_zero()) out(i, j) += a(i, k) * b(k, j);
        }
      }
    }
    return out;
  }

 private:
  int n_;
  std::vector<HalfLaurent> cells_;
};

const HalfLaurent kT = HalfLaurent::monomial(2);

// Reduced Burau image of s_i on `strands` strands, an (n-1)x(n-1) matrix.
PolyMatrix reduced_burau(int i, int strands) {
  const int n = strands - 1;
  PolyMatrix m = PolyMatrix::identity(n);
  const int r = i - 1;
  m(r, r) = -kT;
  if (r > 0) m(r - 1, r) = kT;
  if (r + 1 < n) m(r + 1, r) = HalfLaurent::constant(1);
  return m;
}

// Fraction-free Gaussian elimination; every division is exact.
HalfLaurent bareiss_determinant(PolyMatrix m) {
  const int n = m.size();
  if (n == 0) return HalfLaurent::constant(1);
  HalfLaurent previous = HalfLaurent::constant(1);
  bool negate = false;
  for (int k = 0; k < n; ++k) {
    if (m(k, k).is_zero()) {
      int swap_row = -1;
      for (int r = k + 1; r < n && swap_row < 0; ++r) {
        if (!m(r, k).is_zero()) swap_row = r;
      }
      if (swap_row < 0) return {};
      for (int c = 0; c < n; ++c) std::swap(m(k, c), m(swap_row, c));
      negate = !negate;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        HalfLaurent numerator = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        auto q = exact_divide(numerator, previous);
        if (!q) throw InexactDivision("Bareiss step did not divide exactly");
        m(i, j) = std::move(*q);
      }
      m(i, k) = HalfLaurent();
    }
    previous = m(k, k);
  }
  return negate ? -m(n - 1, n - 1) : m(n - 1, n - 1);
}

HalfLaurent euler_factor(int components) {
  return pow(HalfLaurent::z(), static_cast<unsigned>(components - 1));
}

}  // namespace

HalfLaurent normalize_symmetric(const HalfLaurent& p) {
  if (p.is_zero()) return p;
  int sum = *p.max_doubled() + *p.min_doubled();
  if (sum % 2 != 0) throw InexactDivision("polynomial cannot be centred by a unit");
  HalfLaurent centred = p.shifted(-sum / 2);
  return centred.coefficient(*centred.max_doubled()) < 0 ? -centred : centred;
}

ConwayPoly conway(const BraidWord& w, std::size_t budget) {
  if (!uses_all_generators(w)) {
    auto pieces = split_pieces(w);
    if (pieces.size() > 1) return {};
    return conway(pieces.front(), budget);
  }
  if (w.strands == 1) return ConwayPoly::constant(1);
  if (auto f = split_connected_sum(w)) return conway(f->left, budget) * conway(f->right, budget);

  auto key = canonical_key(w);
  if (auto hit = conway_cache().find(key)) return *hit;

  auto square = find_adjacent_square(w, budget);
  if (!square) {
    throw EngineFailure("no adjacent square found for " + to_string(w) + " within budget");
  }
  auto triple = resolve_square(*square);
  ConwayPoly result = conway(triple.minus, budget) + ConwayPoly::z() * conway(triple.zero, budget);
  conway_cache().insert(key, result);
  return result;
}

HalfLaurent hfk_euler(const BraidWord& w, std::size_t budget) {
  return euler_factor(closure_components(w)) * conway(w, budget).substitute();
}

HalfLaurent alexander_burau(const BraidWord& w) {
  if (split_pieces(w).size() > 1) return {};
  const int n = w.strands;
  HalfLaurent delta;
  if (n == 1) {
    delta = HalfLaurent::constant(1);
  } else {
    PolyMatrix rho = PolyMatrix::identity(n - 1);
    for (int g : w.letters) rho = rho * reduced_burau(g, n);
    PolyMatrix shifted = PolyMatrix::identity(n - 1);
    for (int r = 0; r < n - 1; ++r) {
      for (int c = 0; c < n - 1; ++c) shifted(r, c) -= rho(r, c);
    }
    HalfLaurent det = bareiss_determinant(shifted);
    if (det.is_zero()) return {};
    HalfLaurent cyclotomic;
    for (int k = 0; k < n; ++k) cyclotomic += HalfLaurent::monomial(2 * k);
    auto q = exact_divide(det, cyclotomic);
    if (!q) throw InexactDivision("Burau determinant not divisible by 1 + t + ... + t^(n-1)");
    delta = normalize_symmetric(*q);
  }
  return euler_factor(closure_components(w)) * delta;
}

Coeff second_coefficient(const BraidWord& w, std::size_t budget) {
  int g = euler_and_genus(w).genus;
  return hfk_euler(w, budget).coefficient_at(g - 1);
}

}  // namespace pbk
