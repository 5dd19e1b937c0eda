#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace pbk {

using Coeff = std::int64_t;

/// Integer Laurent polynomial in t^(1/2). Keys are doubled exponents:
/// key k stands for t^(k/2). Zero coefficients are never stored.
/// Arithmetic is exact and throws std::overflow_error on int64 overflow.
class HalfLaurent {
 public:
  HalfLaurent() = default;
  static HalfLaurent constant(Coeff c);
  static HalfLaurent monomial(int doubled_exponent, Coeff c = 1);
  /// t^(1/2) - t^(-1/2)
  static HalfLaurent z();
  static HalfLaurent from_pairs(const std::vector<std::pair<int, Coeff>>& pairs);

  Coeff coefficient(int doubled_exponent) const;
  /// Coefficient of t^e for integer e.
  Coeff coefficient_at(int exponent) const { return coefficient(2 * exponent); }
  const std::map<int, Coeff>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool symmetric() const;
  bool integral_exponents() const;
  std::optional<int> max_doubled() const;
  std::optional<int> min_doubled() const;

  HalfLaurent shifted(int doubled) const;

  HalfLaurent& operator+=(const HalfLaurent& o);
  HalfLaurent& operator-=(const HalfLaurent& o);
  HalfLaurent operator-() const;
  friend HalfLaurent operator+(HalfLaurent a, const HalfLaurent& b) { return a += b; }
  friend HalfLaurent operator-(HalfLaurent a, const HalfLaurent& b) { return a -= b; }
  friend HalfLaurent operator*(const HalfLaurent& a, const HalfLaurent& b);
  friend bool operator==(const HalfLaurent&, const HalfLaurent&) = default;

  /// Descending exponents: "t^4 - t^3 + t - 1 + t^-1", "t^(1/2) - t^(-1/2)".
  std::string to_string() const;
  /// [[doubledExponent, coefficient], ...], ascending.
  std::vector<std::pair<int, Coeff>> pairs() const;

 private:
  void add_term(int doubled, Coeff c);
  std::map<int, Coeff> terms_;
};

HalfLaurent pow(const HalfLaurent& base, unsigned exponent);

/// Exact quotient num / den in the Laurent ring, or nullopt when den does
/// not divide num. den must be nonzero.
std::optional<HalfLaurent> exact_divide(const HalfLaurent& num, const HalfLaurent& den);

/// Integer polynomial in z; coefficients()[k] multiplies z^k.
class ConwayPoly {
 public:
  ConwayPoly() = default;
  explicit ConwayPoly(std::vector<Coeff> coefficients);
  static ConwayPoly constant(Coeff c);
  static ConwayPoly z();

  const std::vector<Coeff>& coefficients() const { return coeffs_; }
  Coeff coefficient(int degree) const;
  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

  /// z -> t^(1/2) - t^(-1/2)
  HalfLaurent substitute() const;

  ConwayPoly& operator+=(const ConwayPoly& o);
  friend ConwayPoly operator+(ConwayPoly a, const ConwayPoly& b) { return a += b; }
  friend ConwayPoly operator*(const ConwayPoly& a, const ConwayPoly& b);
  friend bool operator==(const ConwayPoly&, const ConwayPoly&) = default;

  /// "z^4 + 2z^2 + 1"
  std::string to_string() const;

 private:
  void trim();
  std::vector<Coeff> coeffs_;
};

Coeff checked_add(Coeff a, Coeff b);
Coeff checked_mul(Coeff a, Coeff b);

}  // namespace pbk
