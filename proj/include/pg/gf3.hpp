#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <vector>

#include "pg/point_set.hpp"

namespace pg {

inline constexpr int kDim = 4;
inline constexpr int kPoints = 81; // 3^4

/// Element of the vector space F_3^4. Coordinates are kept reduced to {0,1,2}.
class PointVector {
public:
  constexpr PointVector() = default;
  constexpr PointVector(int c1, int c2, int c3, int c4)
      : c_{reduce(c1), reduce(c2), reduce(c3), reduce(c4)} {}

  /// Unit vector e_i for i in 1..4.
  static PointVector unit(int i);

  constexpr int operator[](int i) const { return c_[i]; }
  constexpr bool is_zero() const { return c_[0] == 0 && c_[1] == 0 && c_[2] == 0 && c_[3] == 0; }

  friend constexpr PointVector operator+(const PointVector &a, const PointVector &b) {
    return {a.c_[0] + b.c_[0], a.c_[1] + b.c_[1], a.c_[2] + b.c_[2], a.c_[3] + b.c_[3]};
  }
  friend constexpr PointVector operator-(const PointVector &a) {
    return {-a.c_[0], -a.c_[1], -a.c_[2], -a.c_[3]};
  }
  friend constexpr PointVector operator-(const PointVector &a, const PointVector &b) { return a + (-b); }
  friend constexpr PointVector operator*(int k, const PointVector &a) {
    return {k * a.c_[0], k * a.c_[1], k * a.c_[2], k * a.c_[3]};
  }
  PointVector &operator+=(const PointVector &o) { return *this = *this + o; }

  friend constexpr bool operator==(const PointVector &, const PointVector &) = default;
  friend constexpr auto operator<=>(const PointVector &, const PointVector &) = default;

private:
  static constexpr std::uint8_t reduce(int x) { return static_cast<std::uint8_t>(((x % 3) + 3) % 3); }
  std::array<std::uint8_t, kDim> c_{};
};

/// Canonical 0..80 label of a vector: c1 + 3 c2 + 9 c3 + 27 c4.
struct PointIndex {
  int value = 0;
  friend constexpr auto operator<=>(const PointIndex &, const PointIndex &) = default;
};

PointIndex encode(const PointVector &v);
/// Throws std::out_of_range unless 0 <= index.value <= 80.
PointVector decode(PointIndex index);

inline int index_of(const PointVector &v) { return encode(v).value; }
inline PointVector vector_at(int index) { return decode(PointIndex{index}); }

PointVector vec_add(const PointVector &a, const PointVector &b);
PointVector vec_neg(const PointVector &a);

/// Linear subspace of F_3^4 with an echelon basis and its full member set.
struct Subspace {
  std::vector<PointVector> basis;
  PointSet members;
  int dim = 0;

  bool contains(const PointVector &v) const { return members.contains(index_of(v)); }
};

struct Coset {
  PointVector representative;
  Subspace subspace;
  PointSet members;
};

/// Smallest subspace containing all inputs. Dependent inputs are fine.
Subspace span(std::span<const PointVector> vectors);
inline Subspace span(std::initializer_list<PointVector> vectors) {
  return span(std::span<const PointVector>(vectors.begin(), vectors.size()));
}

/// Rank of a list of vectors over F_3.
int rank(std::span<const PointVector> vectors);

/// Every subspace of the given dimension, ordered by member mask.
/// Built from reduced row echelon forms, so each subspace appears once.
std::vector<Subspace> enumerate_subspaces(int dim);

/// The 3^(4-dim) cosets of `sub`; the first one is `sub` itself.
std::vector<Coset> cosets_of(const Subspace &sub);

/// Coset of `sub` that contains `v`.
Coset coset_containing(const Subspace &sub, const PointVector &v);

/// {x - y : x, y in s, x != y}.
PointSet difference_set(const PointSet &s);

/// {x + shift : x in s}.
PointSet translate(const PointSet &s, const PointVector &shift);
/// {-x : x in s}.
PointSet negate(const PointSet &s);

/// Encoded point set of a list of vectors.
PointSet to_point_set(std::span<const PointVector> vectors);

} // namespace pg
