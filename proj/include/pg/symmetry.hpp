#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "pg/gf3.hpp"
#include "pg/graph.hpp"
#include "pg/incidence.hpp"
#include "pg/permutation.hpp"

namespace pg {

/// Vertex-coloured simple graph of any order. Colours give the initial
/// ordered partition (cells in increasing colour).
class ColoredGraph {
public:
  ColoredGraph() = default;
  explicit ColoredGraph(int n, std::vector<int> colors = {});
  static ColoredGraph from(const Graph &g);

  int order() const { return n_; }
  int color(int x) const { return colors_[x]; }
  const std::vector<int> &colors() const { return colors_; }
  void add_edge(int x, int y);
  bool adjacent(int x, int y) const { return (rows_[x * words_ + (y >> 6)] >> (y & 63)) & 1u; }
  const std::vector<int> &neighbors(int x) const { return nbrs_[x]; }
  int words_per_row() const { return words_; }
  const std::uint64_t *row(int x) const { return rows_.data() + x * words_; }

  /// Vertex x becomes image[x]; colours travel with their vertices.
  ColoredGraph relabel(const std::vector<int> &image) const;
  /// True iff p preserves colours and adjacency.
  bool is_automorphism(const Permutation &p) const;

private:
  int n_ = 0;
  int words_ = 0;
  std::vector<int> colors_;
  std::vector<std::vector<int>> nbrs_;
  std::vector<std::uint64_t> rows_;
};

/// Bipartite incidence graph: points 0..v-1 (colour 0), then line i as
/// vertex v+i (colour 1).
ColoredGraph incidence_graph(const IncidenceStructure &g);

/// Colours in canonical order plus the adjacency matrix under the canonical
/// labelling. Equal certificates <=> isomorphic coloured graphs.
struct Certificate {
  int n = 0;
  std::vector<int> colors;
  std::vector<std::uint64_t> rows;
  friend bool operator==(const Certificate &, const Certificate &) = default;
  friend auto operator<=>(const Certificate &, const Certificate &) = default;
};

/// Which vertex of the target cell the automorphism search individualizes
/// on its first path. Different choices give independent searches.
enum class BaseChoice { Smallest, Largest };

struct AutomorphismSearch {
  std::vector<Permutation> generators;
  /// Vertices individualized along the first path.
  std::vector<int> base;
  /// Orbit of each base point under the stabilizer of the earlier ones.
  std::vector<std::uint64_t> orbit_sizes;
  std::uint64_t order() const;
  /// Search-tree nodes visited.
  long nodes = 0;
};

/// Full automorphism group by first-path search: each level's orbit is
/// settled exactly, deepest level first.
AutomorphismSearch automorphisms(const ColoredGraph &g, BaseChoice choice = BaseChoice::Smallest);

struct CanonicalForm {
  /// labeling[v] = canonical position of vertex v.
  std::vector<int> labeling;
  Certificate certificate;
  AutomorphismSearch automorphisms;
  long nodes = 0;
};

CanonicalForm canonical_form(const ColoredGraph &g);

/// Automorphisms of an incidence structure, acting on points and on lines.
struct IncidenceAutomorphisms {
  PermutationGroup points;
  PermutationGroup lines;
  /// Generators on the incidence graph (points first, then lines).
  std::vector<Permutation> generators;
  /// Order from the first-path orbit sizes.
  std::uint64_t search_order = 0;
};

IncidenceAutomorphisms aut_incidence(const IncidenceStructure &g, BaseChoice choice = BaseChoice::Smallest);
PermutationGroup aut_graph(const Graph &g, BaseChoice choice = BaseChoice::Smallest);

/// An isomorphism from `a` to `b` as a point map plus a line map, if any.
struct IncidenceIsomorphism {
  std::vector<int> point_map;
  std::vector<int> line_map;
};

bool is_isomorphic(const IncidenceStructure &a, const IncidenceStructure &b);
std::optional<IncidenceIsomorphism> find_isomorphism(const IncidenceStructure &a, const IncidenceStructure &b);

/// A correlation: point p goes to line point_to_line[p], line i goes to point
/// line_to_point[i], and p is on line i iff line_to_point[i] is on line
/// point_to_line[p].
struct DualityMap {
  std::vector<int> point_to_line;
  std::vector<int> line_to_point;
};

std::optional<DualityMap> self_duality(const IncidenceStructure &g);
inline bool is_self_dual(const IncidenceStructure &g) { return self_duality(g).has_value(); }
bool is_duality(const IncidenceStructure &g, const DualityMap &d);

/// True iff x -> x + a maps lines to lines for every a in `sub`.
bool translation_check(const IncidenceStructure &g, const Subspace &sub);

/// True iff conjugating each basis translation of `sub` by each generator of
/// `group` (acting on the 81 points) gives a translation by an element of `sub`.
bool translations_normal(const PermutationGroup &group, const Subspace &sub);

/// Permutation of the 81 points given by x -> x + a.
Permutation translation(const PointVector &a);

} // namespace pg
