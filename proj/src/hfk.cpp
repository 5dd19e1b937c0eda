#include "pbk/hfk.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <optional>

#include "memo.hpp"
#include "pbk/rewrite.hpp"
#include "pbk/seifert.hpp"

namespace pbk {

namespace {

std::int64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::atomic<std::uint64_t> g_genus_checks{0};
std::atomic<std::uint64_t> g_genus_violations{0};

detail::MemoCache<TopTwo>& skein_cache() {
  static detail::MemoCache<TopTwo> cache;
  return cache;
}

// Top group from the split pieces alone: each piece is a connected diagram,
// hence non-split with top F[0, g_i].
BigradedRank top_from_pieces(const BraidWord& w) {
  std::vector<BigradedRank> tops;
  for (const auto& piece : split_pieces(w)) {
    tops.push_back(BigradedRank{{0, euler_and_genus(piece).genus, 1}});
  }
  return predicted_top(tops);
}

// Base cases of the induction, as displayed groups.
std::optional<TopTwo> base_case(const BraidWord& w) {
  if (w.strands != 2) return std::nullopt;
  if (w.length() == 2) return TopTwo{1, {{0, 1, 1}, {-1, 0, 2}}};  // Hopf link
  if (w.length() == 3) return TopTwo{1, {{0, 1, 1}, {-1, 0, 1}}};  // trefoil
  return std::nullopt;
}

TopTwo skein_connected(const BraidWord& w, std::size_t budget);

TopTwo skein(const BraidWord& w, std::size_t budget) {
  const int g = euler_and_genus(w).genus;
  auto pieces = split_pieces(w);
  if (pieces.size() == 1) return skein_connected(pieces.front(), budget);

  BigradedRank acc = unit_rank();
  for (const auto& piece : pieces) acc = tensor(acc, skein_connected(piece, budget).groups);
  acc = tensor(acc, tensor_power(split_v(), static_cast<unsigned>(pieces.size() - 1)));
  return {g, acc.alexander_at_least(g - 1)};
}

TopTwo skein_connected(const BraidWord& w, std::size_t budget) {
  if (w.strands == 1) return {0, unit_rank()};
  const int g = euler_and_genus(w).genus;
  if (auto f = split_connected_sum(w)) {
    BigradedRank sum = tensor(skein_connected(f->left, budget).groups,
                              skein_connected(f->right, budget).groups);
    return {g, sum.alexander_at_least(g - 1)};
  }
  if (auto base = base_case(w)) return *base;

  auto key = canonical_key(w);
  if (auto hit = skein_cache().find(key)) return *hit;

  auto square = find_adjacent_square(w, budget);
  if (!square) throw Unverifiable("no adjacent square found for " + to_string(w));
  auto triple = resolve_square(*square);

  const int g_minus = euler_and_genus(triple.minus).genus;
  const int g_zero = euler_and_genus(triple.zero).genus;
  ++g_genus_checks;
  if (!(g == g_minus + 1 && g == g_zero + triple.delta)) {
    ++g_genus_violations;
    throw Unverifiable("genus identity fails at " + to_string(triple.plus));
  }

  auto inst = make_triangle(triple.delta, g, skein(triple.zero, budget), top_from_pieces(triple.minus));
  auto solution = triangle_solve(inst);
  TopTwo result{g, BigradedRank{{0, g, 1}} + solution.group};
  skein_cache().insert(key, result);
  return result;
}

}  // namespace

BigradedRank predicted_next_to_top(int primes, int components, int splits, int genus) {
  BigradedRank out;
  const std::int64_t base = primes + components - splits;
  for (int k = 0; k < splits; ++k) out.add(-1 - k, genus - 1, base * binomial(splits - 1, k));
  return out;
}

BigradedRank predicted_top(const std::vector<BigradedRank>& piece_tops) {
  BigradedRank acc = unit_rank();
  for (const auto& t : piece_tops) acc = tensor(acc, t);
  if (piece_tops.size() > 1) {
    acc = tensor(acc, tensor_power(split_v(), static_cast<unsigned>(piece_tops.size() - 1)));
  }
  return acc;
}

BigradedRank predicted_top(int splits, int genus) {
  std::vector<BigradedRank> tops(static_cast<std::size_t>(splits), unit_rank());
  if (!tops.empty()) tops.front() = BigradedRank{{0, genus, 1}};
  return predicted_top(tops);
}

TriangleInstance make_triangle(int delta, int genus_plus, const TopTwo& zero,
                               const BigradedRank& minus_top) {
  TriangleInstance inst;
  inst.genus = genus_plus;
  inst.minus = minus_top.at_alexander(genus_plus - 1);
  if (delta == 0) {
    inst.resolution = ResolutionCase::ZeroMoreComponents;
    inst.zero = zero.groups.at_alexander(genus_plus - 1);
  } else {
    inst.resolution = ResolutionCase::ZeroFewerComponents;
    inst.zero = tensor(zero.groups, hopf_j()).at_alexander(genus_plus - 1);
  }
  return inst;
}

TriangleSolution triangle_solve(const TriangleInstance& inst) {
  const int a = inst.genus - 1;
  auto y = [&](int m) { return inst.minus.rank(m, a); };
  auto z = [&](int m) { return inst.zero.rank(m, a); };

  int lo = std::numeric_limits<int>::max();
  int hi = std::numeric_limits<int>::min();
  for (const auto* part : {&inst.minus, &inst.zero}) {
    for (const auto& entry : part->entries()) {
      lo = std::min(lo, entry.first.maslov);
      hi = std::max(hi, entry.first.maslov);
    }
  }
  TriangleSolution out;
  if (lo > hi) return out;

  // Rank of G_m : Y_m -> Z_(m-1).
  auto connecting = [&](int m) -> std::int64_t {
    std::int64_t ym = y(m), zm = z(m - 1);
    if (m == 0) {
      if (zm < ym) throw TriangleError("G cannot be injective: target too small");
      return ym;
    }
    if (ym == 0 || zm == 0) return 0;
    throw TriangleError("connecting map in Maslov grading " + std::to_string(m) +
                        " is not determined");
  };

  for (int m = lo - 1; m <= hi + 1; ++m) {
    std::int64_t x = z(m) + y(m) - connecting(m + 1) - connecting(m);
    if (x < 0) throw TriangleError("negative rank in Maslov grading " + std::to_string(m));
    out.group.add(m, a, x);
  }
  out.rank_minus_one = out.group.rank(-1, a);
  out.rank_zero = out.group.rank(0, a);
  return out;
}

TopTwo top_two_via_skein(const BraidWord& w, std::size_t budget) { return skein(w, budget); }

BigradedRank next_to_top_via_skein(const BraidWord& w, std::size_t budget) {
  auto tt = skein(w, budget);
  return tt.next();
}

SkeinStats skein_stats() { return {g_genus_checks.load(), g_genus_violations.load()}; }

BigradedRank rn_next_to_top(int n) {
  if (n < 3) throw DomainError("R_n is defined here for n >= 3, got " + std::to_string(n));
  TopTwo ring = skein(BraidWord(2, {1, 1, 1, 1}), kDefaultBudget);
  for (int k = 3; k <= n; ++k) {
    // K- = connected sum of k-1 Hopf links, HFK = J^(k-1); its top grading is its genus.
    BigradedRank hopf_sum = tensor_power(hopf_j(), static_cast<unsigned>(k - 1));
    int g_minus = std::numeric_limits<int>::min();
    for (const auto& e : hopf_sum.entries()) g_minus = std::max(g_minus, e.first.alexander);
    const int g = g_minus + 1;
    if (ring.genus != g - 1) throw TriangleError("ring genus bookkeeping failed");
    auto inst = make_triangle(1, g, ring, hopf_sum.at_alexander(g_minus));
    auto solution = triangle_solve(inst);
    ring = TopTwo{g, BigradedRank{{0, g, 1}} + solution.group};
  }
  return ring.next();
}

}  // namespace pbk
