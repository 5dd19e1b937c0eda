#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pbk/braid_word.hpp"

namespace pbk {

class ParityError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Seifert circles as vertices (1-based), one edge per crossing.
struct SeifertGraph {
  int vertex_count = 0;
  std::vector<std::pair<int, int>> edges;

  friend bool operator==(const SeifertGraph&, const SeifertGraph&) = default;
};

/// Closed braid: strand i is circle i, s_i joins circles i and i+1.
SeifertGraph from_braid(const BraidWord& w);

/// Parallel edges identified; edges normalized to (min, max) and sorted.
SeifertGraph reduced(const SeifertGraph& g);

/// For a positive diagram: fibered iff every component of the reduced
/// graph is a tree.
bool fibered_positive(const SeifertGraph& g);

struct EulerGenus {
  int euler = 0;
  int genus = 0;
};

/// chi = V - E and g = (components - chi) / 2. Throws ParityError when the
/// component count has the wrong parity for the graph.
EulerGenus euler_and_genus(const SeifertGraph& g, int components);

/// Convenience for braid closures.
EulerGenus euler_and_genus(const BraidWord& w);

/// "V=3; 1-2; 1-2; 2-3"
std::string to_string(const SeifertGraph& g);

}  // namespace pbk
