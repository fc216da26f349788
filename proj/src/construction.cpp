#include "pg/construction.hpp"

#include <stdexcept>

namespace pg {

SpecialSet build_special_set(const Basis &basis) {
  if (rank(basis) != kDim) throw std::invalid_argument("special set needs four independent vectors");
  SpecialSet s;
  s.generators = basis;
  PointVector sum;
  for (const auto &b : basis) sum += b;
  s.fifth = -sum;
  s.members.insert(index_of(PointVector{}));
  for (const auto &b : basis) s.members.insert(index_of(b));
  s.members.insert(index_of(s.fifth));
  return s;
}

Basis standard_basis() {
  return {PointVector::unit(1), PointVector::unit(2), PointVector::unit(3), PointVector::unit(4)};
}

Basis replacement_basis() {
  const auto [e1, e2, e3, e4] = standard_basis();
  return {-e1 + e3, -e1 + e3 - e4, -e2 + e4, -e2 - e3 + e4};
}

CosetSplit standard_split() {
  const auto [e1, e2, e3, e4] = standard_basis();
  Subspace n0 = span({e1, e2, e3 - e4});
  Coset n1 = coset_containing(n0, e3);
  Coset n2 = coset_containing(n0, e3 + e4);
  return {n0, n1, n2};
}

IncidenceStructure build_vls(const Basis &basis) {
  const PointSet s = build_special_set(basis).members;
  std::vector<PointSet> lines;
  for (int x = 0; x < kPoints; ++x) lines.push_back(translate(s, vector_at(x)));
  return {kPoints, std::move(lines)};
}

IncidenceStructure build_new() {
  const PointSet s = build_special_set(standard_basis()).members;
  const PointSet s_new = build_special_set(replacement_basis()).members;
  const auto split = standard_split();
  std::vector<PointSet> lines;
  split.n1.members.for_each([&](int x) { lines.push_back(translate(s_new, vector_at(x))); });
  (split.n0.members | split.n2.members).for_each([&](int x) { lines.push_back(translate(s, vector_at(x))); });
  return {kPoints, std::move(lines)};
}

std::map<int, int> secant_profile(const IncidenceStructure &g, const PointSet &subset) {
  std::map<int, int> out;
  for (const auto &l : g.lines()) ++out[intersect_count(l, subset)];
  return out;
}

std::vector<PointSet> find_2_ovoids(const IncidenceStructure &g) {
  std::vector<PointSet> out;
  for (const auto &n : enumerate_subspaces(3))
    if (secant_profile(g, n.members) == std::map<int, int>{{2, g.line_count()}}) out.push_back(n.members);
  return out;
}

std::vector<PointSet> negative_lines(const IncidenceStructure &g) {
  std::vector<PointSet> out;
  for (const auto &l : g.lines()) out.push_back(negate(l));
  return out;
}

PointSet one_secant_lines(const IncidenceStructure &g, const PointSet &s) {
  PointSet out;
  for (int i = 0; i < g.line_count(); ++i)
    if (intersect_count(g.line(i), s) == 1) out.insert(i);
  return out;
}

} // namespace pg
