#include <doctest.h>

#include <set>

#include "pg/construction.hpp"
#include "pg/permutation.hpp"
#include "pg/symmetry.hpp"
#include "support.hpp"

using namespace pg;

namespace {

Permutation cycle_perm(int n) {
  std::vector<int> img(n);
  for (int i = 0; i < n; ++i) img[i] = (i + 1) % n;
  return Permutation(img);
}

Permutation reflection(int n) {
  std::vector<int> img(n);
  for (int i = 0; i < n; ++i) img[i] = (n - i) % n;
  return Permutation(img);
}

Permutation transposition(int n, int a, int b) {
  std::vector<int> img(n);
  for (int i = 0; i < n; ++i) img[i] = i;
  std::swap(img[a], img[b]);
  return Permutation(img);
}

int parity(const Permutation &p) {
  int swaps = 0;
  std::vector<bool> seen(p.degree());
  for (int i = 0; i < p.degree(); ++i) {
    int len = 0;
    for (int j = i; !seen[j]; j = p(j)) seen[j] = true, ++len;
    if (len > 0) swaps += len - 1;
  }
  return swaps % 2;
}

} // namespace

TEST_CASE("permutation basics") {
  CHECK_THROWS_AS(Permutation({0, 0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation({0, 3, 1}), std::invalid_argument);
  const Permutation a({1, 2, 0}), b({1, 0, 2});
  // a first, then b.
  CHECK((a * b)(0) == b(a(0)));
  CHECK((a * b).image() == std::vector<int>{0, 2, 1});
  CHECK((a * a.inverse()).is_identity());
  CHECK(Permutation::identity(4).first_moved() == -1);
  CHECK(b.first_moved() == 0);
}

TEST_CASE("symmetric and dihedral groups against closure") {
  const PermutationGroup s5(5, {transposition(5, 0, 1), cycle_perm(5)});
  CHECK(s5.order() == 120);
  CHECK(enumerate_elements(5, s5.generators()).size() == 120);
  for (int n = 3; n <= 9; ++n) {
    const std::vector<Permutation> gens{cycle_perm(n), reflection(n)};
    const PermutationGroup d(n, gens);
    CHECK(d.order() == static_cast<std::uint64_t>(2 * n));
    CHECK(enumerate_elements(n, gens).size() == static_cast<std::size_t>(2 * n));
    CHECK(d.orbits().size() == 1);
    CHECK(point_stabilizer_order(d, 0) == 2);
  }
}

TEST_CASE("membership") {
  // A5 from two 3-cycles.
  const Permutation c1({1, 2, 0, 3, 4}), c2({0, 1, 3, 4, 2});
  const PermutationGroup a5(5, {c1, c2});
  CHECK(a5.order() == 60);
  const auto elems = enumerate_elements(5, {c1, c2});
  CHECK(elems.size() == 60);
  for (const auto &e : elems) {
    CHECK(a5.contains(e));
    CHECK(parity(e) == 0);
  }
  CHECK_FALSE(a5.contains(transposition(5, 0, 1)));
}

TEST_CASE("order does not depend on the base") {
  std::mt19937 rng(8);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 7;
    std::vector<Permutation> gens{Permutation(testing::random_permutation(n, rng)),
                                  Permutation(testing::random_permutation(n, rng))};
    const auto reference = enumerate_elements(n, gens).size();
    for (int b = 0; b < 3; ++b) {
      const PermutationGroup grp(n, gens, testing::random_permutation(n, rng));
      CHECK(grp.order() == reference);
      std::uint64_t product = 1;
      for (auto s : grp.basic_orbit_sizes()) product *= s;
      CHECK(product == grp.order());
    }
  }
}

TEST_CASE("pointwise stabilizers") {
  const PermutationGroup s5(5, {transposition(5, 0, 1), cycle_perm(5)});
  const PermutationGroup fix01(5, s5.pointwise_stabilizer({0, 1}));
  CHECK(fix01.order() == 6);
  for (const auto &g : fix01.generators()) {
    CHECK(g(0) == 0);
    CHECK(g(1) == 1);
  }
  CHECK(PermutationGroup(5, s5.stabilizer_generators(1)).order() == 24);
}

TEST_CASE("automorphism groups of the geometries against closure") {
  for (auto [g, expected] : {std::pair{build_new(), 972u}, std::pair{build_vls(), 58320u}}) {
    const auto aut = aut_incidence(g);
    CHECK(aut.points.order() == expected);
    CHECK(enumerate_elements(81, aut.points.generators()).size() == expected);
    // Random base orders.
    std::mt19937 rng(expected);
    for (int trial = 0; trial < 3; ++trial)
      CHECK(PermutationGroup(81, aut.points.generators(), testing::random_permutation(81, rng)).order() == expected);
  }
}

TEST_CASE("orbit helpers") {
  const auto aut = aut_incidence(build_new());
  const auto split = standard_split();
  const auto orbs = orbits(aut.points, PointSet::range(81));
  CHECK(std::set<PointSet>(orbs.begin(), orbs.end()) ==
        std::set<PointSet>{split.n0.members, split.n1.members | split.n2.members});
  CHECK_FALSE(is_transitive(aut.points, PointSet::range(81)));
  CHECK(point_stabilizer_order(aut.points, 0) == 36);
  CHECK(point_stabilizer_order(aut.points, index_of(PointVector::unit(3))) == 18);
  CHECK(is_transitive(aut_incidence(build_vls()).points, PointSet::range(81)));
}
