#include <doctest.h>

#include <set>

#include "pg/construction.hpp"
#include "pg/gf3.hpp"
#include "support.hpp"

using namespace pg;

namespace {

// Subspaces as kernels of nonzero functionals, with no echelon form involved.
std::set<PointSet> kernels() {
  std::set<PointSet> out;
  for (int f = 1; f < kPoints; ++f) {
    PointSet k;
    for (int x = 0; x < kPoints; ++x)
      if (testing::dot(vector_at(f), vector_at(x)) == 0) k.insert(x);
    out.insert(k);
  }
  return out;
}

std::set<PointSet> as_sets(const std::vector<Subspace> &subs) {
  std::set<PointSet> out;
  for (const auto &s : subs) out.insert(s.members);
  return out;
}

} // namespace

TEST_CASE("encode and decode are inverse") {
  for (int i = 0; i < kPoints; ++i) CHECK(index_of(vector_at(i)) == i);
  CHECK(index_of(PointVector(2, 2, 2, 2)) == 80);
  CHECK(index_of(PointVector::unit(3)) == 9);
  CHECK(index_of(PointVector(-1, 4, 0, -3)) == index_of(PointVector(2, 1, 0, 0)));
  CHECK_THROWS_AS(decode(PointIndex{81}), std::out_of_range);
  CHECK_THROWS_AS(decode(PointIndex{-1}), std::out_of_range);
}

TEST_CASE("vector arithmetic is mod 3") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const auto a = testing::random_vector(rng), b = testing::random_vector(rng);
    CHECK(a + b == b + a);
    CHECK(a - a == PointVector{});
    CHECK(3 * a == PointVector{});
    CHECK(vec_add(a, vec_neg(b)) == a - b);
    for (int i = 0; i < kDim; ++i) CHECK((a + b)[i] == (a[i] + b[i]) % 3);
  }
}

TEST_CASE("subspace counts match the kernel oracle") {
  const auto planes = kernels();
  CHECK(planes.size() == 40);
  CHECK(as_sets(enumerate_subspaces(3)) == planes);

  std::set<PointSet> two_dim;
  for (const auto &a : planes)
    for (const auto &b : planes)
      if (a != b) two_dim.insert(a & b);
  CHECK(two_dim.size() == 130);
  CHECK(as_sets(enumerate_subspaces(2)) == two_dim);

  std::set<PointSet> lines_through_0;
  for (int x = 1; x < kPoints; ++x) lines_through_0.insert(PointSet{0, x, index_of(2 * vector_at(x))});
  CHECK(as_sets(enumerate_subspaces(1)) == lines_through_0);

  CHECK(enumerate_subspaces(0).size() == 1);
  CHECK(enumerate_subspaces(4).size() == 1);
  for (const auto &s : enumerate_subspaces(3)) CHECK(s.members.size() == 27);
}

TEST_CASE("span is closed and its size is 3^rank") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<PointVector> gens;
    const int k = 1 + trial % 4;
    for (int i = 0; i < k; ++i) gens.push_back(testing::random_vector(rng));
    const auto sub = span(gens);
    int expected = 1;
    for (int i = 0; i < rank(gens); ++i) expected *= 3;
    CHECK(sub.members.size() == expected);
    CHECK(sub.dim == rank(gens));
    for (const auto &g : gens) CHECK(sub.contains(g));
    sub.members.for_each([&](int a) {
      sub.members.for_each([&](int b) { CHECK(sub.contains(vector_at(a) + vector_at(b))); });
    });
  }
}

TEST_CASE("cosets partition the space") {
  for (const auto &sub : enumerate_subspaces(2)) {
    const auto cs = cosets_of(sub);
    REQUIRE(cs.size() == 9);
    CHECK(cs.front().members == sub.members);
    PointSet all;
    for (const auto &c : cs) {
      CHECK_FALSE(all.intersects(c.members));
      all |= c.members;
      CHECK(coset_containing(sub, c.representative).members == c.members);
    }
    CHECK(all == PointSet::range(kPoints));
  }
}

TEST_CASE("only the constant combinations of the special set vanish") {
  for (const auto &basis : {standard_basis(), replacement_basis()}) {
    const auto special = build_special_set(basis);
    std::vector<PointVector> elems{PointVector{}};
    for (const auto &b : basis) elems.push_back(b);
    elems.push_back(special.fifth);
    int vanishing = 0;
    for (int code = 0; code < 729; ++code) {
      int c = code;
      std::array<int, 6> coef{};
      PointVector sum;
      for (int i = 0; i < 6; ++i, c /= 3) {
        coef[i] = c % 3;
        sum += coef[i] * elems[i];
      }
      if (!sum.is_zero()) continue;
      ++vanishing;
      // alpha * 0 + beta * (e1 + ... + e5)
      CHECK(std::all_of(coef.begin() + 2, coef.end(), [&](int x) { return x == coef[1]; }));
    }
    CHECK(vanishing == 9);
  }
}

TEST_CASE("difference sets against brute force") {
  std::mt19937 rng(9);
  for (int trial = 0; trial < 50; ++trial) {
    const auto s = testing::random_subset(kPoints, 0.08, rng);
    PointSet expected;
    for (int a : s.members())
      for (int b : s.members())
        if (a != b) expected.insert(index_of(vector_at(a) - vector_at(b)));
    CHECK(difference_set(s) == expected);
    CHECK(negate(negate(s)) == s);
    const auto shift = testing::random_vector(rng);
    CHECK(translate(translate(s, shift), -shift) == s);
    CHECK(difference_set(translate(s, shift)) == difference_set(s));
    CHECK(difference_set(s) == negate(difference_set(s)));
  }
  CHECK(difference_set(build_special_set(standard_basis()).members).size() == 30);
}
