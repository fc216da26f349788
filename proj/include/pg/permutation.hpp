#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

#include "pg/point_set.hpp"

namespace pg {

/// Bijection of {0..n-1} in image-array form.
class Permutation {
public:
  Permutation() = default;
  /// Throws std::invalid_argument unless `image` is a bijection.
  explicit Permutation(std::vector<int> image);
  static Permutation identity(int n);

  int degree() const { return static_cast<int>(image_.size()); }
  int operator()(int x) const { return image_[x]; }
  const std::vector<int> &image() const { return image_; }
  bool is_identity() const;
  /// Smallest moved point, or -1 for the identity.
  int first_moved() const;
  Permutation inverse() const;

  /// Apply `a` first, then `b`.
  friend Permutation operator*(const Permutation &a, const Permutation &b);

  friend bool operator==(const Permutation &, const Permutation &) = default;
  friend auto operator<=>(const Permutation &, const Permutation &) = default;

private:
  std::vector<int> image_;
};

/// Permutation group given by generators, with a stabilizer chain built by
/// deterministic Schreier-Sims. Coset representatives are stored explicitly,
/// which is fine for the degrees used here (a few hundred at most).
class PermutationGroup {
public:
  PermutationGroup() = default;
  /// `base_prefix` fixes the first base points; the chain extends it as needed.
  PermutationGroup(int degree, std::vector<Permutation> generators, std::vector<int> base_prefix = {});

  int degree() const { return degree_; }
  const std::vector<Permutation> &generators() const { return generators_; }
  /// Strong generating set (input generators plus sifted residues).
  const std::vector<Permutation> &strong_generators() const { return strong_; }
  const std::vector<int> &base() const { return base_; }
  /// Lengths of the basic orbits; their product is the order.
  std::vector<std::uint64_t> basic_orbit_sizes() const;
  std::uint64_t order() const;

  bool contains(const Permutation &g) const;
  /// Strong generators fixing the first `level` base points pointwise.
  std::vector<Permutation> stabilizer_generators(int level) const;
  /// Generators of the pointwise stabilizer of `points`.
  std::vector<Permutation> pointwise_stabilizer(const std::vector<int> &points) const;

  /// Orbit of x under the generators, sorted.
  std::vector<int> orbit_of(int x) const;
  /// Orbit partition of {0..degree-1}, each orbit sorted, orbits ordered by minimum.
  std::vector<std::vector<int>> orbits() const;

private:
  struct Level {
    int point = 0;
    std::vector<int> orbit;
    std::vector<std::optional<Permutation>> transversal; // indexed by orbit point
  };

  void build();
  void rebuild_level(std::size_t i);
  std::pair<Permutation, std::size_t> strip(Permutation g, std::size_t from) const;
  std::vector<const Permutation *> level_generators(std::size_t i) const;

  int degree_ = 0;
  std::vector<Permutation> generators_;
  std::vector<Permutation> strong_;
  std::vector<int> base_;
  std::vector<Level> levels_;
};

/// Orbits of `group` restricted to `domain` (which must be a union of orbits
/// for the result to be a partition of it). Domain points must be < 128.
std::vector<PointSet> orbits(const PermutationGroup &group, const PointSet &domain);
bool is_transitive(const PermutationGroup &group, const PointSet &domain);
/// |G| / |orbit of point|.
std::uint64_t point_stabilizer_order(const PermutationGroup &group, int point);

/// Elements of the group generated by `generators`, by closure. For oracles
/// on small groups only.
std::vector<Permutation> enumerate_elements(int degree, const std::vector<Permutation> &generators,
                                            std::size_t limit = 1'000'000);

} // namespace pg
