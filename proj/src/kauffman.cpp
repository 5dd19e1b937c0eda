#include "pbk/kauffman.hpp"

#include <algorithm>
#include <sstream>

namespace pbk {

std::string to_string(Quadrant q) {
  switch (q) {
    case Quadrant::Out: return "OUT";
    case Quadrant::In: return "IN";
    case Quadrant::Left: return "LEFT";
    case Quadrant::Right: return "RIGHT";
  }
  return "?";
}

ClosedBraidDiagram build_diagram(const BraidWord& w) {
  if (closure_components(w) != 1) {
    throw MultiComponent("Kauffman states need a knot, got " + to_string(w));
  }
  if (!uses_all_generators(w)) {
    throw SplitDiagram("Kauffman states need a connected diagram, got " + to_string(w));
  }
  const int n = w.strands;
  ClosedBraidDiagram d;
  d.word = w;

  // occurrences[i] = positions of s_i in word order
  std::vector<std::vector<int>> occurrences(static_cast<std::size_t>(n));
  for (int p = 0; p < static_cast<int>(w.length()); ++p) {
    occurrences[static_cast<std::size_t>(w.letters[p])].push_back(p);
  }
  std::vector<int> offset(static_cast<std::size_t>(n), 0);
  int next = 1;
  d.column_of_region.push_back(0);
  for (int i = 1; i < n; ++i) {
    offset[i] = next;
    next += static_cast<int>(occurrences[i].size());
    d.column_of_region.insert(d.column_of_region.end(), occurrences[i].size(), i);
  }
  const int outer = next;
  d.column_of_region.push_back(n);
  d.region_count = outer + 1;

  auto gap = [&](int column, int j) {
    int k = static_cast<int>(occurrences[column].size());
    return offset[column] + ((j % k) + k) % k;
  };
  // Region of `column` at height p (p holds no crossing of that column).
  auto region_at = [&](int column, int p) {
    if (column == 0) return 0;
    if (column == n) return outer;
    const auto& occ = occurrences[column];
    auto it = std::lower_bound(occ.begin(), occ.end(), p);
    int before = static_cast<int>(it - occ.begin()) - 1;
    return gap(column, before);
  };

  d.forbidden.assign(static_cast<std::size_t>(d.region_count), false);
  d.forbidden[outer] = true;
  // A crossingless unknot: the marked edge touches both regions.
  d.forbidden[n == 1 ? 0 : gap(n - 1, -1)] = true;

  for (int p = 0; p < static_cast<int>(w.length()); ++p) {
    int i = w.letters[p];
    const auto& occ = occurrences[i];
    int j = static_cast<int>(std::find(occ.begin(), occ.end(), p) - occ.begin());
    d.slots.push_back({{gap(i, j), Quadrant::Out},
                       {gap(i, j - 1), Quadrant::In},
                       {region_at(i - 1, p), Quadrant::Left},
                       {region_at(i + 1, p), Quadrant::Right}});
  }
  return d;
}

namespace {

class StateSearch {
 public:
  explicit StateSearch(const ClosedBraidDiagram& d)
      : d_(d),
        used_(static_cast<std::size_t>(d.region_count), false),
        pending_(static_cast<std::size_t>(d.region_count), 0),
        choice_(d.slots.size()) {
    for (const auto& slots : d.slots) {
      for (int r : distinct_regions(slots)) ++pending_[r];
    }
  }

  std::vector<KauffmanState> run() {
    descend(0);
    return std::move(states_);
  }

 private:
  static std::vector<int> distinct_regions(const std::vector<Slot>& slots) {
    std::vector<int> rs;
    for (const auto& s : slots) rs.push_back(s.region);
    std::sort(rs.begin(), rs.end());
    rs.erase(std::unique(rs.begin(), rs.end()), rs.end());
    return rs;
  }

  void descend(std::size_t c) {
    if (c == d_.slots.size()) {
      record();
      return;
    }
    const auto regions = distinct_regions(d_.slots[c]);
    for (int r : regions) --pending_[r];
    for (const auto& slot : d_.slots[c]) {
      if (used_[slot.region] || d_.forbidden[slot.region]) continue;
      used_[slot.region] = true;
      // An open region that no later crossing can reach kills the branch.
      bool viable = std::none_of(regions.begin(), regions.end(), [&](int r) {
        return !used_[r] && !d_.forbidden[r] && pending_[r] == 0;
      });
      if (viable) {
        choice_[c] = slot;
        descend(c + 1);
      }
      used_[slot.region] = false;
    }
    for (int r : regions) ++pending_[r];
  }

  void record() {
    KauffmanState s;
    s.assignment = choice_;
    int doubled = 0;
    for (const auto& slot : choice_) {
      doubled += kPositiveCrossing.alexander2(slot.quadrant);
      s.maslov += kPositiveCrossing.maslov_of(slot.quadrant);
    }
    if (doubled % 2 != 0) throw std::logic_error("half-integral Alexander grading on a knot");
    s.alexander = doubled / 2;
    states_.push_back(std::move(s));
  }

  const ClosedBraidDiagram& d_;
  std::vector<bool> used_;
  std::vector<int> pending_;
  std::vector<Slot> choice_;
  std::vector<KauffmanState> states_;
};

}  // namespace

std::vector<KauffmanState> enumerate_states(const ClosedBraidDiagram& d) {
  return StateSearch(d).run();
}

BigradingHistogram bigraded_counts(const std::vector<KauffmanState>& states) {
  BigradingHistogram h;
  for (const auto& s : states) ++h[{s.maslov, s.alexander}];
  return h;
}

HalfLaurent state_sum(const std::vector<KauffmanState>& states) {
  HalfLaurent sum;
  for (const auto& s : states) {
    sum += HalfLaurent::monomial(2 * s.alexander, s.maslov % 2 == 0 ? 1 : -1);
  }
  return sum;
}

std::string to_string(const KauffmanState& s) {
  std::ostringstream out;
  for (std::size_t c = 0; c < s.assignment.size(); ++c) {
    out << 'c' << c + 1 << ":(" << s.assignment[c].region << ','
        << to_string(s.assignment[c].quadrant) << ") ";
  }
  out << "| M=" << s.maslov << ", A=" << s.alexander;
  return out.str();
}

}  // namespace pbk
