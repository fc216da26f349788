#pragma once

#include <optional>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

#include "pg/graph.hpp"
#include "pg/incidence.hpp"

namespace pg {

/// Exact rational. Compare only against other Rationals: mixed comparisons
/// with plain integers recurse forever under C++20 rewritten operators.
using Rational = boost::rational<long long>;

/// Exact-cover instance: the edges of a graph and the cliques that may
/// become lines, each listed by the edge indices it covers.
struct CoverInstance {
  std::vector<std::pair<int, int>> universe;
  std::vector<PointSet> cliques;
  std::vector<std::vector<int>> covers;
};

/// Candidates are the maximal cliques of size `clique_size`.
CoverInstance cover_instance(const Graph &g, int clique_size = 6);

/// All sets of candidates covering each of `universe_size` items exactly
/// once. Branches on the uncovered item with the fewest live candidates
/// (smallest index on ties). Solutions are sorted candidate-index lists, in
/// lexicographic order.
std::vector<std::vector<int>> exact_covers(int universe_size, const std::vector<std::vector<int>> &candidates);

struct GeometrySearch {
  CoverInstance instance;
  std::vector<IncidenceStructure> solutions;
  /// verify_pg of each solution, same order.
  std::vector<PgVerdict> verdicts;
};

/// Every way to partition the edge set of g into cliques of size
/// `clique_size`, each solution turned into an incidence structure on the
/// vertices of g and checked with verify_pg.
GeometrySearch all_geometries_on(const Graph &g, int clique_size = 6);

/// Per-point rational weights.
struct Weighting {
  std::vector<Rational> weights;
  Rational total() const;
  bool zero_sum() const { return total() == Rational(0); }
};

/// v-1 at p, -1 elsewhere.
Weighting star_weighting(const IncidenceStructure &g, int p);

struct NonnegativeLines {
  int count = 0;
  PointSet lines;
};

/// Lines whose weight sum is >= 0. Throws std::invalid_argument unless w is
/// a zero-sum weighting on the points of g.
NonnegativeLines count_nonnegative_lines(const IncidenceStructure &g, const Weighting &w);

/// True iff `lines` is exactly the set of lines through some point.
bool is_pencil(const IncidenceStructure &g, const PointSet &lines);

struct MmsWitness {
  Weighting weighting;
  NonnegativeLines nonnegative;
  /// Point cells the weighting is constant on, and the value on each.
  std::vector<PointSet> cells;
  std::vector<Rational> cell_values;
  /// Fewer nonnegative lines than a star has.
  bool below_star_size = false;
};

struct MmsSearch {
  std::optional<MmsWitness> witness;
  long weightings_tried = 0;
  /// True when every grid point was tried without a witness.
  bool exhausted = false;
};

/// Looks for a zero-sum weighting, constant on the cells of the clique's
/// incidence pattern, with at most star-size nonnegative lines that do not
/// form a star. Tries the three cells (on >= 2 clique lines, on exactly 1,
/// on none) first, then the cells split by exact clique-line count when that
/// gives at most four cells. Free cell values run over -range..range; the
/// last cell takes the value forced by the zero sum.
/// Throws std::invalid_argument for a star clique.
MmsSearch mms_counterexample_search(const IncidenceStructure &g, const PointSet &clique, int range = 81);

} // namespace pg
