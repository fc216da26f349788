#include <doctest.h>

#include <set>

#include "pg/construction.hpp"
#include "support.hpp"

using namespace pg;

namespace {

const PointVector e1 = PointVector::unit(1), e2 = PointVector::unit(2), e3 = PointVector::unit(3),
                  e4 = PointVector::unit(4);

PointSet special(const Basis &b) { return build_special_set(b).members; }

// |N n line| for the plane N = ker f, over all lines of g.
std::map<int, int> profile_oracle(const IncidenceStructure &g, const PointSet &n) {
  std::map<int, int> out;
  for (const auto &line : g.lines()) {
    int k = 0;
    for (int x : line.members()) k += n.contains(x);
    ++out[k];
  }
  return out;
}

Basis random_basis(std::mt19937 &rng) {
  for (;;) {
    Basis b{testing::random_vector(rng), testing::random_vector(rng), testing::random_vector(rng),
            testing::random_vector(rng)};
    if (rank(b) == 4) return b;
  }
}

} // namespace

TEST_CASE("special sets") {
  const auto s = build_special_set(standard_basis());
  CHECK(s.members == PointSet{0, 1, 3, 9, 27, 80});
  CHECK(s.fifth == PointVector(2, 2, 2, 2));

  const auto r = replacement_basis();
  CHECK(r[0] == -e1 + e3);
  CHECK(r[1] == -e1 + e3 - e4);
  CHECK(r[2] == -e2 + e4);
  CHECK(r[3] == -e2 - e3 + e4);
  CHECK(rank(r) == 4);
  // Same fifth vector as the standard basis.
  CHECK(build_special_set(r).fifth == s.fifth);

  CHECK_THROWS_AS(build_special_set({e1, e2, e3, e1 + e2}), std::invalid_argument);
}

TEST_CASE("coset split and intersection pattern") {
  const auto split = standard_split();
  CHECK(split.n0.members == span({e1, e2, e3 - e4}).members);
  CHECK(split.n1.members == translate(split.n0.members, e3));
  CHECK(split.n2.members == translate(split.n0.members, e3 + e4));
  CHECK((split.n0.members | split.n1.members | split.n2.members) == PointSet::range(81));
  for (const auto &s : {special(standard_basis()), special(replacement_basis())}) {
    CHECK(intersect_count(split.n0.members, s) == 3);
    CHECK(intersect_count(split.n1.members, s) == 3);
    CHECK(intersect_count(split.n2.members, s) == 0);
  }
}

TEST_CASE("translate geometry from any basis is pg(5,5,2)") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 8; ++trial) {
    const auto g = build_vls(random_basis(rng));
    const auto v = verify_pg(g);
    REQUIRE(v.ok());
    CHECK(*v.params == PgParams{5, 5, 2, 81, 81});
  }
}

TEST_CASE("new geometry keeps the 3-secants of N0 and swaps the rest") {
  const auto g = build_vls(), h = build_new();
  const auto split = standard_split();
  const PointSet s = special(standard_basis()), s2 = special(replacement_basis());
  int kept = 0, replaced = 0;
  for (int x = 0; x < kPoints; ++x) {
    const auto v = vector_at(x);
    if (split.n1.members.contains(x)) {
      CHECK(h.has_line(translate(s2, v)));
      replaced += !g.has_line(translate(s2, v));
    } else {
      CHECK(h.has_line(translate(s, v)));
    }
  }
  for (const auto &line : h.lines()) kept += g.has_line(line);
  CHECK(kept == 54);
  CHECK(replaced == 27);
  CHECK(h.line_count() == 81);
}

TEST_CASE("secant profiles of N0") {
  const auto n0 = standard_split().n0.members;
  const std::map<int, int> expected{{0, 27}, {3, 54}};
  CHECK(secant_profile(build_vls(), n0) == expected);
  CHECK(secant_profile(build_new(), n0) == expected);
  CHECK(profile_oracle(build_vls(), n0) == expected);
}

TEST_CASE("plane census against the kernel oracle") {
  const auto g = build_vls();
  const PointSet s = special(standard_basis());
  std::map<int, int> sizes;
  std::set<PointSet> ovoids;
  std::set<PointSet> seen;
  for (int f = 1; f < kPoints; ++f) {
    PointSet n;
    for (int x = 0; x < kPoints; ++x)
      if (testing::dot(vector_at(f), vector_at(x)) == 0) n.insert(x);
    if (!seen.insert(n).second) continue;
    const int k = intersect_count(n, s);
    ++sizes[k];
    if (k == 2) {
      CHECK(profile_oracle(g, n) == std::map<int, int>{{2, 81}});
      ovoids.insert(n);
    }
  }
  CHECK(seen.size() == 40);
  CHECK(sizes == std::map<int, int>{{1, 5}, {2, 15}, {3, 10}, {4, 10}});
  const auto found = find_2_ovoids(g);
  CHECK(std::set<PointSet>(found.begin(), found.end()) == ovoids);
}

TEST_CASE("difference-set identities") {
  const auto split = standard_split();
  const PointSet ds = difference_set(special(standard_basis()));
  const PointSet ds2 = difference_set(special(replacement_basis()));
  const PointSet outside = split.n1.members | split.n2.members;
  CHECK(ds.size() == 30);
  CHECK(ds2.size() == 30);
  CHECK((ds & ds2 & split.n0.members).empty());
  CHECK((ds & outside) == (ds2 & outside));
}

TEST_CASE("collinearity changes stay inside N1 or N2") {
  const auto split = standard_split();
  const auto a = testing::collinearity(build_vls()), b = testing::collinearity(build_new());
  int changed = 0;
  for (int x = 0; x < kPoints; ++x)
    for (int y = x + 1; y < kPoints; ++y)
      if (a[x][y] != b[x][y]) {
        ++changed;
        const bool n1 = split.n1.members.contains(x) && split.n1.members.contains(y);
        const bool n2 = split.n2.members.contains(x) && split.n2.members.contains(y);
        CHECK((n1 || n2));
      }
  CHECK(changed > 0);
}

TEST_CASE("negative lines and their one-secants") {
  const auto g = build_vls();
  const PointSet s = special(standard_basis());
  const auto negs = negative_lines(g);
  REQUIRE(negs.size() == 81);
  CHECK(std::find(negs.begin(), negs.end(), negate(s)) != negs.end());
  // None of them is a line.
  for (const auto &n : negs) CHECK_FALSE(g.has_line(n));

  PointSet expected;
  for (int i = 0; i < g.line_count(); ++i) {
    int k = 0;
    for (int x : g.line(i).members()) k += negate(s).contains(x);
    if (k == 1) expected.insert(i);
  }
  const auto secants = one_secant_lines(g, negate(s));
  CHECK(secants == expected);
  CHECK(secants.size() == 6);
  for (int i : secants.members())
    for (int j : secants.members()) CHECK(g.line(i).intersects(g.line(j)));
}
