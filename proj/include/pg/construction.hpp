#pragma once

#include <array>
#include <map>
#include <vector>

#include "pg/gf3.hpp"
#include "pg/incidence.hpp"

namespace pg {

using Basis = std::array<PointVector, kDim>;

/// {0, b1, b2, b3, b4, -(b1+b2+b3+b4)} for an independent basis.
struct SpecialSet {
  PointSet members;
  Basis generators;
  PointVector fifth; // -(b1 + b2 + b3 + b4)
};

/// Throws std::invalid_argument when the basis has rank < 4.
SpecialSet build_special_set(const Basis &basis);

/// e1..e4.
Basis standard_basis();
/// e1' = -e1+e3, e2' = -e1+e3-e4, e3' = -e2+e4, e4' = -e2-e3+e4.
Basis replacement_basis();

/// The subspace <e1, e2, e3-e4> and its two other cosets e3+N0, e3+e4+N0.
struct CosetSplit {
  Subspace n0;
  Coset n1;
  Coset n2;
};
CosetSplit standard_split();

/// Translates x + S of the special set of `basis`, over all x in V.
IncidenceStructure build_vls(const Basis &basis);
inline IncidenceStructure build_vls() { return build_vls(standard_basis()); }

/// {x + S' : x in N1} together with {x + S : x in N0 u N2}.
IncidenceStructure build_new();

/// Histogram |subset n line| -> number of lines.
std::map<int, int> secant_profile(const IncidenceStructure &g, const PointSet &subset);

/// Three-dimensional subspaces meeting every line of g in exactly two points.
std::vector<PointSet> find_2_ovoids(const IncidenceStructure &g);

/// The sets -l for every line l, in line order. For the translate geometry
/// these are exactly the sets -(x + S).
std::vector<PointSet> negative_lines(const IncidenceStructure &g);

/// Indices of the lines of g meeting `s` in exactly one point.
PointSet one_secant_lines(const IncidenceStructure &g, const PointSet &s);

} // namespace pg
