#include "pbk/seifert.hpp"

#include <algorithm>
#include <numeric>

namespace pbk {

SeifertGraph from_braid(const BraidWord& w) {
  SeifertGraph g{w.strands, {}};
  g.edges.reserve(w.length());
  for (int i : w.letters) g.edges.emplace_back(i, i + 1);
  return g;
}

SeifertGraph reduced(const SeifertGraph& g) {
  SeifertGraph r{g.vertex_count, {}};
  for (auto [a, b] : g.edges) r.edges.emplace_back(std::min(a, b), std::max(a, b));
  std::sort(r.edges.begin(), r.edges.end());
  r.edges.erase(std::unique(r.edges.begin(), r.edges.end()), r.edges.end());
  return r;
}

bool fibered_positive(const SeifertGraph& g) {
  // A forest has exactly V - (#components) edges; with union-find a cycle
  // shows up as an edge joining two vertices already connected.
  std::vector<int> parent(static_cast<std::size_t>(g.vertex_count) + 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (auto [a, b] : reduced(g).edges) {
    if (a == b) return false;
    int ra = find(a), rb = find(b);
    if (ra == rb) return false;
    parent[ra] = rb;
  }
  return true;
}

EulerGenus euler_and_genus(const SeifertGraph& g, int components) {
  int chi = g.vertex_count - static_cast<int>(g.edges.size());
  if (((components - chi) % 2 + 2) % 2 != 0) {
    throw ParityError("component count " + std::to_string(components) +
                      " inconsistent with Euler characteristic " + std::to_string(chi));
  }
  return {chi, (components - chi) / 2};
}

EulerGenus euler_and_genus(const BraidWord& w) {
  return euler_and_genus(from_braid(w), closure_components(w));
}

std::string to_string(const SeifertGraph& g) {
  std::string s = "V=" + std::to_string(g.vertex_count);
  for (auto [a, b] : g.edges) s += "; " + std::to_string(a) + "-" + std::to_string(b);
  return s;
}

}  // namespace pbk
