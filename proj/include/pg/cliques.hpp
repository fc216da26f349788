#pragma once

#include <map>
#include <vector>

#include "pg/graph.hpp"
#include "pg/incidence.hpp"

namespace pg {

struct CliqueReport {
  /// Clique size -> number of maximal cliques of that size.
  std::map<int, long> size_histogram;
  /// Every maximal clique, sorted by mask.
  std::vector<PointSet> cliques;

  std::vector<PointSet> of_size(int k) const;
  int max_size() const { return size_histogram.empty() ? 0 : size_histogram.rbegin()->first; }
};

/// Bron-Kerbosch with pivoting. The pivot maximises |P n N(u)| over P u X,
/// ties going to the smallest vertex.
CliqueReport max_cliques(const Graph &g);

struct LineCliqueClasses {
  std::vector<PointSet> stars;
  std::vector<PointSet> non_stars;
};

/// Splits cliques of line_graph(g) (sets of line indices) into stars, whose
/// lines share a point, and the rest. Throws if an input is not a clique.
LineCliqueClasses classify_line_cliques(const IncidenceStructure &g, const std::vector<PointSet> &cliques);

/// True iff the lines indexed by `clique` have a common point.
bool is_star(const IncidenceStructure &g, const PointSet &clique);

/// Indices i such that the one-secant lines of -line(i) are exactly `clique`.
std::vector<int> matching_negative_lines(const IncidenceStructure &g, const PointSet &clique);

struct NegativeLineMatching {
  /// match[c] = index of the line whose negation has clique c as its one-secants.
  std::vector<int> match;
  /// Every line index used exactly once.
  bool bijective = false;
};

/// Throws std::runtime_error when a clique matches zero or several negative lines.
NegativeLineMatching match_negative_lines(const IncidenceStructure &g, const std::vector<PointSet> &non_stars);

} // namespace pg
