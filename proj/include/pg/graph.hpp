#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pg/point_set.hpp"

namespace pg {

/// Simple undirected graph on at most 128 vertices, one bitset row per vertex.
class Graph {
public:
  Graph() = default;
  explicit Graph(int n);

  int order() const { return static_cast<int>(adj_.size()); }
  void add_edge(int x, int y);
  void remove_edge(int x, int y);
  bool adjacent(int x, int y) const { return adj_[x].contains(y); }
  const PointSet &neighbors(int x) const { return adj_[x]; }
  int degree(int x) const { return adj_[x].size(); }
  long edge_count() const;
  /// Edges (x, y) with x < y in lexicographic order.
  std::vector<std::pair<int, int>> edges() const;

  /// Subgraph induced on `vertices`, relabelled 0..k-1 in increasing order.
  Graph induced(const PointSet &vertices) const;
  /// Graph with vertex x renamed to image[x].
  Graph relabel(const std::vector<int> &image) const;

  static Graph complete(int n);
  static Graph cycle(int n);

  friend bool operator==(const Graph &, const Graph &) = default;

private:
  std::vector<PointSet> adj_;
};

} // namespace pg
