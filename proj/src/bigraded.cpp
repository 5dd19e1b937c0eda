#include "pbk/bigraded.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace pbk {

BigradedRank::BigradedRank(std::initializer_list<std::tuple<int, int, std::int64_t>> entries) {
  for (auto [m, a, r] : entries) add(m, a, r);
}

std::int64_t BigradedRank::rank(int maslov, int alexander) const {
  auto it = ranks_.find({maslov, alexander});
  return it == ranks_.end() ? 0 : it->second;
}

void BigradedRank::add(int maslov, int alexander, std::int64_t r) {
  if (r == 0) return;
  auto& slot = ranks_[{maslov, alexander}];
  slot = checked_add(slot, r);
  if (slot < 0) throw std::domain_error("negative rank");
  if (slot == 0) ranks_.erase({maslov, alexander});
}

std::int64_t BigradedRank::total() const {
  std::int64_t t = 0;
  for (const auto& e : ranks_) t = checked_add(t, e.second);
  return t;
}

std::int64_t BigradedRank::maslov_total(int maslov) const {
  std::int64_t t = 0;
  for (const auto& [g, r] : ranks_) {
    if (g.maslov == maslov) t = checked_add(t, r);
  }
  return t;
}

BigradedRank BigradedRank::at_alexander(int alexander) const {
  BigradedRank out;
  for (const auto& [g, r] : ranks_) {
    if (g.alexander == alexander) out.ranks_.emplace(g, r);
  }
  return out;
}

BigradedRank BigradedRank::alexander_at_least(int alexander) const {
  BigradedRank out;
  for (const auto& [g, r] : ranks_) {
    if (g.alexander >= alexander) out.ranks_.emplace(g, r);
  }
  return out;
}

BigradedRank BigradedRank::shifted(int maslov, int alexander) const {
  BigradedRank out;
  for (const auto& [g, r] : ranks_) out.ranks_.emplace(Grading{g.maslov + maslov, g.alexander + alexander}, r);
  return out;
}

HalfLaurent BigradedRank::euler() const {
  HalfLaurent p;
  for (const auto& [g, r] : ranks_) {
    p += HalfLaurent::monomial(2 * g.alexander, g.maslov % 2 == 0 ? r : -r);
  }
  return p;
}

BigradedRank& BigradedRank::operator+=(const BigradedRank& o) {
  for (const auto& [g, r] : o.ranks_) add(g.maslov, g.alexander, r);
  return *this;
}

std::vector<std::tuple<int, int, std::int64_t>> BigradedRank::triples() const {
  std::vector<std::tuple<int, int, std::int64_t>> out;
  for (const auto& [g, r] : ranks_) out.emplace_back(g.maslov, g.alexander, r);
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    if (std::get<1>(x) != std::get<1>(y)) return std::get<1>(x) > std::get<1>(y);
    return std::get<0>(x) > std::get<0>(y);
  });
  return out;
}

std::string BigradedRank::to_string() const {
  if (ranks_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto [m, a, r] : triples()) {
    if (!first) out << " ⊕ ";
    first = false;
    out << 'F';
    if (r != 1) out << '^' << r;
    out << '[' << m << ',' << a << ']';
  }
  return out.str();
}

BigradedRank tensor(const BigradedRank& a, const BigradedRank& b) {
  BigradedRank out;
  for (const auto& [ga, ra] : a.entries()) {
    for (const auto& [gb, rb] : b.entries()) {
      out.add(ga.maslov + gb.maslov, ga.alexander + gb.alexander, checked_mul(ra, rb));
    }
  }
  return out;
}

BigradedRank tensor_power(const BigradedRank& a, unsigned k) {
  BigradedRank out = unit_rank();
  for (unsigned i = 0; i < k; ++i) out = tensor(out, a);
  return out;
}

const BigradedRank& unit_rank() {
  static const BigradedRank u{{0, 0, 1}};
  return u;
}

const BigradedRank& hopf_j() {
  static const BigradedRank j{{0, 1, 1}, {-1, 0, 2}, {-2, -1, 1}};
  return j;
}

const BigradedRank& split_v() {
  static const BigradedRank v{{0, 0, 1}, {-1, 0, 1}};
  return v;
}

}  // namespace pbk
