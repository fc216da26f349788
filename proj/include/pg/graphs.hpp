#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pg/graph.hpp"
#include "pg/incidence.hpp"

namespace pg {

/// Certified strongly regular parameters. For a complete graph there are no
/// non-adjacent pairs and mu is reported as 0 with `complete` set; for an
/// edgeless graph lambda is reported as 0 with `edgeless` set.
struct SrgParams {
  int v = 0, k = 0, lambda = 0, mu = 0;
  bool complete = false;
  bool edgeless = false;

  /// k(k - lambda - 1) == (v - k - 1) mu.
  bool feasible() const { return long{k} * (k - lambda - 1) == long{v - k - 1} * mu; }
  friend bool operator==(const SrgParams &, const SrgParams &) = default;
};

struct SrgVerdict {
  std::optional<SrgParams> params;
  std::string failure;
  /// Lexicographically first offending pair (x, x) for a degree failure.
  std::optional<std::pair<int, int>> witness;
  int witness_count = 0;

  bool ok() const { return params.has_value(); }
};

/// Exhaustive check over all vertex pairs. Throws for graphs on < 2 vertices.
SrgVerdict srg_check(const Graph &g);

/// adj[x] n adj[y]; throws when x == y.
PointSet common_neighbors(const Graph &g, int x, int y);

/// Common neighbourhood of a collinear pair (x, y), split into the other
/// points A of the line xy, the off-line point z with the fewest collinear
/// partners among the off-line points (ties to the smallest index) and the
/// rest B.
struct LocalConfig {
  PointSet A;
  PointSet B;
  int z = -1;
  /// Edges of the point graph induced on A u B u {z}, as point pairs.
  std::vector<std::pair<int, int>> induced_edges;
  /// The same subgraph relabelled 0..8 in increasing point order.
  Graph induced;
};

/// Throws std::invalid_argument when x and y are not collinear.
LocalConfig local_configuration(const IncidenceStructure &g, int x, int y);

/// Exact isomorphism test by backtracking; intended for graphs on <= 12 vertices.
bool isomorphic_small(const Graph &a, const Graph &b);

} // namespace pg
