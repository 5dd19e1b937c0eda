#include "pbk/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace pbk {

Coeff checked_add(Coeff a, Coeff b) {
  Coeff r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("coefficient overflow");
  return r;
}

Coeff checked_mul(Coeff a, Coeff b) {
  Coeff r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("coefficient overflow");
  return r;
}

namespace {

std::string exponent_text(int doubled) {
  if (doubled % 2 == 0) return std::to_string(doubled / 2);
  return "(" + std::to_string(doubled) + "/2)";
}

// Appends "+ c*x" style term to out; `var` is empty for the constant term.
void append_term(std::ostringstream& out, bool first, Coeff c, const std::string& var) {
  Coeff mag = c < 0 ? -c : c;
  if (first) {
    if (c < 0) out << '-';
  } else {
    out << (c < 0 ? " - " : " + ");
  }
  if (var.empty()) {
    out << mag;
  } else {
    if (mag != 1) out << mag;
    out << var;
  }
}

}  // namespace

HalfLaurent HalfLaurent::constant(Coeff c) { return monomial(0, c); }

HalfLaurent HalfLaurent::monomial(int doubled_exponent, Coeff c) {
  HalfLaurent p;
  p.add_term(doubled_exponent, c);
  return p;
}

HalfLaurent HalfLaurent::z() { return from_pairs({{1, 1}, {-1, -1}}); }

HalfLaurent HalfLaurent::from_pairs(const std::vector<std::pair<int, Coeff>>& pairs) {
  HalfLaurent p;
  for (auto [k, c] : pairs) p.add_term(k, c);
  return p;
}

void HalfLaurent::add_term(int doubled, Coeff c) {
  if (c == 0) return;
  auto it = terms_.find(doubled);
  if (it == terms_.end()) {
    terms_.emplace(doubled, c);
    return;
  }
  it->second = checked_add(it->second, c);
  if (it->second == 0) terms_.erase(it);
}

Coeff HalfLaurent::coefficient(int doubled_exponent) const {
  auto it = terms_.find(doubled_exponent);
  return it == terms_.end() ? 0 : it->second;
}

bool HalfLaurent::symmetric() const {
  for (auto [k, c] : terms_) {
    if (coefficient(-k) != c) return false;
  }
  return true;
}

bool HalfLaurent::integral_exponents() const {
  for (const auto& term : terms_) {
    if (term.first % 2 != 0) return false;
  }
  return true;
}

std::optional<int> HalfLaurent::max_doubled() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.rbegin()->first;
}

std::optional<int> HalfLaurent::min_doubled() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.begin()->first;
}

HalfLaurent HalfLaurent::shifted(int doubled) const {
  HalfLaurent p;
  for (auto [k, c] : terms_) p.terms_.emplace(k + doubled, c);
  return p;
}

HalfLaurent& HalfLaurent::operator+=(const HalfLaurent& o) {
  for (auto [k, c] : o.terms_) add_term(k, c);
  return *this;
}

HalfLaurent& HalfLaurent::operator-=(const HalfLaurent& o) {
  for (auto [k, c] : o.terms_) add_term(k, checked_mul(c, -1));
  return *this;
}

HalfLaurent HalfLaurent::operator-() const {
  HalfLaurent p;
  for (auto [k, c] : terms_) p.terms_.emplace(k, checked_mul(c, -1));
  return p;
}

HalfLaurent operator*(const HalfLaurent& a, const HalfLaurent& b) {
  HalfLaurent p;
  for (auto [ka, ca] : a.terms_) {
    for (auto [kb, cb] : b.terms_) p.add_term(ka + kb, checked_mul(ca, cb));
  }
  return p;
}

std::string HalfLaurent::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    auto [k, c] = *it;
    std::string var;
    if (k == 2) var = "t";
    else if (k != 0) var = "t^" + exponent_text(k);
    append_term(out, first, c, var);
    first = false;
  }
  return out.str();
}

std::vector<std::pair<int, Coeff>> HalfLaurent::pairs() const {
  return {terms_.begin(), terms_.end()};
}

HalfLaurent pow(const HalfLaurent& base, unsigned exponent) {
  HalfLaurent result = HalfLaurent::constant(1);
  for (unsigned k = 0; k < exponent; ++k) result = result * base;
  return result;
}

std::optional<HalfLaurent> exact_divide(const HalfLaurent& num, const HalfLaurent& den) {
  if (den.is_zero()) throw std::domain_error("division by zero polynomial");
  HalfLaurent rest = num;
  HalfLaurent quotient;
  const int den_top = *den.max_doubled();
  const int den_low = *den.min_doubled();
  const Coeff lead = den.coefficient(den_top);
  while (!rest.is_zero()) {
    int top = *rest.max_doubled();
    // The quotient cannot reach below min(num) - min(den).
    if (top - den_top < *num.min_doubled() - den_low) return std::nullopt;
    Coeff c = rest.coefficient(top);
    if (c % lead != 0) return std::nullopt;
    auto term = HalfLaurent::monomial(top - den_top, c / lead);
    quotient += term;
    rest -= term * den;
  }
  return quotient;
}

ConwayPoly::ConwayPoly(std::vector<Coeff> coefficients) : coeffs_(std::move(coefficients)) {
  trim();
}

ConwayPoly ConwayPoly::constant(Coeff c) { return ConwayPoly({c}); }

ConwayPoly ConwayPoly::z() { return ConwayPoly({0, 1}); }

void ConwayPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Coeff ConwayPoly::coefficient(int degree) const {
  if (degree < 0 || degree >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[static_cast<std::size_t>(degree)];
}

HalfLaurent ConwayPoly::substitute() const {
  HalfLaurent result;
  HalfLaurent power = HalfLaurent::constant(1);
  const HalfLaurent z = HalfLaurent::z();
  for (Coeff c : coeffs_) {
    if (c != 0) result += power * HalfLaurent::constant(c);
    power = power * z;
  }
  return result;
}

ConwayPoly& ConwayPoly::operator+=(const ConwayPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] = checked_add(coeffs_[k], o.coeffs_[k]);
  trim();
  return *this;
}

ConwayPoly operator*(const ConwayPoly& a, const ConwayPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Coeff> out(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      out[i + j] = checked_add(out[i + j], checked_mul(a.coeffs_[i], b.coeffs_[j]));
    }
  }
  return ConwayPoly(std::move(out));
}

std::string ConwayPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    Coeff c = coeffs_[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    std::string var = k == 0 ? "" : (k == 1 ? "z" : "z^" + std::to_string(k));
    append_term(out, first, c, var);
    first = false;
  }
  return out.str();
}

}  // namespace pbk
