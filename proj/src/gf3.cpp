#include "pg/gf3.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace pg {

PointVector PointVector::unit(int i) {
  if (i < 1 || i > kDim) throw std::out_of_range("unit vector index must be in 1..4");
  PointVector v;
  v.c_[i - 1] = 1;
  return v;
}

PointIndex encode(const PointVector &v) {
  return PointIndex{v[0] + 3 * v[1] + 9 * v[2] + 27 * v[3]};
}

PointVector decode(PointIndex index) {
  int x = index.value;
  if (x < 0 || x >= kPoints)
    throw std::out_of_range("point index out of range: " + std::to_string(x));
  return {x % 3, (x / 3) % 3, (x / 9) % 3, x / 27};
}

PointVector vec_add(const PointVector &a, const PointVector &b) { return a + b; }
PointVector vec_neg(const PointVector &a) { return -a; }

namespace {

// Row-reduce in place and return the nonzero rows in reduced echelon form.
std::vector<PointVector> echelon(std::vector<PointVector> rows) {
  std::vector<PointVector> out;
  for (int col = 0; col < kDim; ++col) {
    auto pivot = std::find_if(rows.begin(), rows.end(), [col](const PointVector &r) { return r[col] != 0; });
    if (pivot == rows.end()) continue;
    // Scale to leading 1; over F_3 the inverse of 2 is 2.
    PointVector p = (*pivot)[col] == 1 ? *pivot : 2 * *pivot;
    rows.erase(pivot);
    for (auto &r : rows) r = r - r[col] * p;
    for (auto &o : out) o = o - o[col] * p;
    out.push_back(p);
  }
  return out;
}

PointSet members_of(std::span<const PointVector> basis) {
  std::vector<PointVector> elems{PointVector{}};
  for (const auto &b : basis) {
    const auto n = elems.size();
    for (std::size_t i = 0; i < n; ++i) {
      elems.push_back(elems[i] + b);
      elems.push_back(elems[i] + 2 * b);
    }
  }
  return to_point_set(elems);
}

} // namespace

int rank(std::span<const PointVector> vectors) {
  return static_cast<int>(echelon({vectors.begin(), vectors.end()}).size());
}

Subspace span(std::span<const PointVector> vectors) {
  Subspace s;
  s.basis = echelon({vectors.begin(), vectors.end()});
  s.dim = static_cast<int>(s.basis.size());
  s.members = members_of(s.basis);
  return s;
}

std::vector<Subspace> enumerate_subspaces(int dim) {
  if (dim < 0 || dim > kDim) throw std::invalid_argument("subspace dimension must be in 0..4");
  std::vector<Subspace> out;
  // Choose pivot columns, then every filling of the free entries to the
  // right of each pivot that does not sit in another pivot column.
  for (unsigned pivots = 0; pivots < (1u << kDim); ++pivots) {
    if (std::popcount(pivots) != dim) continue;
    std::vector<int> cols;
    for (int c = 0; c < kDim; ++c)
      if (pivots & (1u << c)) cols.push_back(c);
    std::vector<std::pair<int, int>> free_slots; // (row, col)
    for (int r = 0; r < dim; ++r)
      for (int c = cols[r] + 1; c < kDim; ++c)
        if (!(pivots & (1u << c))) free_slots.emplace_back(r, c);
    int fillings = 1;
    for (std::size_t i = 0; i < free_slots.size(); ++i) fillings *= 3;
    for (int f = 0; f < fillings; ++f) {
      std::vector<std::array<int, kDim>> rows(dim, std::array<int, kDim>{});
      for (int r = 0; r < dim; ++r) rows[r][cols[r]] = 1;
      int code = f;
      for (auto [r, c] : free_slots) {
        rows[r][c] = code % 3;
        code /= 3;
      }
      std::vector<PointVector> basis;
      for (auto &r : rows) basis.emplace_back(r[0], r[1], r[2], r[3]);
      out.push_back(Subspace{basis, members_of(basis), dim});
    }
  }
  std::sort(out.begin(), out.end(), [](const Subspace &a, const Subspace &b) { return a.members < b.members; });
  return out;
}

Coset coset_containing(const Subspace &sub, const PointVector &v) {
  return Coset{v, sub, translate(sub.members, v)};
}

std::vector<Coset> cosets_of(const Subspace &sub) {
  std::vector<Coset> out;
  PointSet covered;
  for (int x = 0; x < kPoints; ++x) {
    if (covered.contains(x)) continue;
    auto c = coset_containing(sub, vector_at(x));
    covered |= c.members;
    out.push_back(std::move(c));
  }
  return out;
}

PointSet difference_set(const PointSet &s) {
  PointSet out;
  s.for_each([&](int x) {
    s.for_each([&](int y) {
      if (x != y) out.insert(index_of(vector_at(x) - vector_at(y)));
    });
  });
  return out;
}

PointSet translate(const PointSet &s, const PointVector &shift) {
  PointSet out;
  s.for_each([&](int x) { out.insert(index_of(vector_at(x) + shift)); });
  return out;
}

PointSet negate(const PointSet &s) {
  PointSet out;
  s.for_each([&](int x) { out.insert(index_of(-vector_at(x))); });
  return out;
}

PointSet to_point_set(std::span<const PointVector> vectors) {
  PointSet out;
  for (const auto &v : vectors) out.insert(index_of(v));
  return out;
}

} // namespace pg
