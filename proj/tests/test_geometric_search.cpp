#include <doctest.h>

#include <set>

#include "pg/cliques.hpp"
#include "pg/construction.hpp"
#include "pg/geometric_search.hpp"
#include "pg/symmetry.hpp"
#include "support.hpp"

using namespace pg;

namespace {

// Exact covers by trying every subset of candidates (few candidates only).
std::set<std::vector<int>> covers_oracle(int universe, const std::vector<std::vector<int>> &cands) {
  std::set<std::vector<int>> out;
  const int m = static_cast<int>(cands.size());
  for (int mask = 0; mask < (1 << m); ++mask) {
    std::vector<int> hits(universe, 0);
    std::vector<int> chosen;
    for (int i = 0; i < m; ++i)
      if (mask >> i & 1) {
        chosen.push_back(i);
        for (int x : cands[i]) ++hits[x];
      }
    if (std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; })) out.insert(chosen);
  }
  return out;
}

Rational line_sum(const IncidenceStructure &g, const Weighting &w, int i) {
  Rational sum;
  g.line(i).for_each([&](int x) { sum += w.weights[x]; });
  return sum;
}

} // namespace

TEST_CASE("Knuth's exact cover example") {
  const std::vector<std::vector<int>> sets{{2, 4, 5}, {0, 3, 6}, {1, 2, 5}, {0, 3}, {1, 6}, {3, 4, 6}};
  CHECK(exact_covers(7, sets) == std::vector<std::vector<int>>{{0, 3, 4}});
}

TEST_CASE("exact cover against subset enumeration") {
  std::mt19937 rng(15);
  for (int trial = 0; trial < 200; ++trial) {
    const int universe = 4 + trial % 5;
    std::vector<std::vector<int>> cands;
    const int m = 6 + trial % 8;
    for (int i = 0; i < m; ++i) {
      auto s = testing::random_subset(universe, 0.35, rng).members();
      if (!s.empty()) cands.push_back(s);
    }
    const auto got = exact_covers(universe, cands);
    CHECK(std::set<std::vector<int>>(got.begin(), got.end()) == covers_oracle(universe, cands));
    CHECK(std::is_sorted(got.begin(), got.end()));
  }
  CHECK(exact_covers(3, {}).empty());
}

TEST_CASE("single clique among isolated points") {
  Graph g(81);
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j) g.add_edge(i, j);
  const auto inst = cover_instance(g);
  CHECK(inst.universe.size() == 15);
  CHECK(inst.cliques.size() == 1);
  const auto search = all_geometries_on(g);
  REQUIRE(search.solutions.size() == 1);
  CHECK(search.solutions[0].lines() == std::vector<PointSet>{PointSet{0, 1, 2, 3, 4, 5}});
  CHECK_FALSE(search.verdicts[0].ok());
}

TEST_CASE("point graphs support only their own geometry") {
  const auto vls = build_vls(), g = build_new();
  const auto a = all_geometries_on(point_graph(vls));
  CHECK(a.instance.cliques.size() == 162);
  CHECK(a.solutions.size() == 2);
  const IncidenceStructure negatives(81, negative_lines(vls));
  CHECK(std::find(a.solutions.begin(), a.solutions.end(), vls) != a.solutions.end());
  CHECK(std::find(a.solutions.begin(), a.solutions.end(), negatives) != a.solutions.end());
  for (std::size_t i = 0; i < a.solutions.size(); ++i) {
    REQUIRE(a.verdicts[i].ok());
    CHECK(*a.verdicts[i].params == PgParams{5, 5, 2, 81, 81});
    CHECK(is_isomorphic(a.solutions[i], vls));
  }

  const auto b = all_geometries_on(point_graph(g));
  CHECK(b.instance.cliques.size() == 108);
  REQUIRE(b.solutions.size() == 1);
  CHECK(b.solutions[0] == g);
  CHECK(b.verdicts[0].ok());
}

TEST_CASE("star weightings") {
  for (const auto &g : {build_vls(), build_new()}) {
    for (int p = 0; p < 81; ++p) {
      const auto w = star_weighting(g, p);
      CHECK(w.zero_sum());
      const auto nn = count_nonnegative_lines(g, w);
      CHECK(nn.count == 6);
      CHECK(nn.lines == g.pencil(p));
      CHECK(is_pencil(g, nn.lines));
    }
  }
}

TEST_CASE("nonnegative lines: validation, scaling and negation") {
  const auto g = build_new();
  Weighting bad{std::vector<Rational>(81, Rational(1))};
  CHECK_FALSE(bad.zero_sum());
  CHECK_THROWS_AS(count_nonnegative_lines(g, bad), std::invalid_argument);
  CHECK_THROWS_AS(count_nonnegative_lines(g, Weighting{std::vector<Rational>(5)}), std::invalid_argument);

  std::mt19937 rng(42);
  std::uniform_int_distribution<int> d(-5, 5);
  for (int trial = 0; trial < 50; ++trial) {
    Weighting w{std::vector<Rational>(81)};
    Rational sum;
    for (int x = 0; x < 80; ++x) sum += (w.weights[x] = Rational(d(rng), 1 + trial % 3));
    w.weights[80] = -sum;
    REQUIRE(w.zero_sum());
    const auto nn = count_nonnegative_lines(g, w);

    int expected = 0, zero = 0;
    for (int i = 0; i < 81; ++i) {
      expected += line_sum(g, w, i) >= Rational(0);
      zero += line_sum(g, w, i) == Rational(0);
    }
    CHECK(nn.count == expected);

    Weighting scaled = w, negated = w;
    for (auto &x : scaled.weights) x *= Rational(7, 3);
    for (auto &x : negated.weights) x = -x;
    CHECK(count_nonnegative_lines(g, scaled).lines == nn.lines);
    CHECK(nn.count + count_nonnegative_lines(g, negated).count == 81 + zero);
  }
}

TEST_CASE("counterexample search finds independently checked witnesses") {
  for (const auto &g : {build_vls(), build_new()}) {
    const auto classes = classify_line_cliques(g, max_cliques(line_graph(g)).of_size(6));
    REQUIRE_FALSE(classes.non_stars.empty());
    const auto result = mms_counterexample_search(g, classes.non_stars.front());
    REQUIRE(result.witness.has_value());
    const auto &w = *result.witness;

    Rational total;
    for (const auto &x : w.weighting.weights) total += x;
    CHECK(total == Rational(0));
    PointSet nonneg;
    for (int i = 0; i < 81; ++i)
      if (line_sum(g, w.weighting, i) >= Rational(0)) nonneg.insert(i);
    CHECK(nonneg == w.nonnegative.lines);
    CHECK(nonneg.size() <= 6);
    CHECK(w.below_star_size == (nonneg.size() < 6));
    for (int p = 0; p < 81; ++p) CHECK(nonneg != g.pencil(p));

    // Constant on each cell, cells partition the points.
    PointSet covered;
    for (std::size_t c = 0; c < w.cells.size(); ++c) {
      CHECK_FALSE(covered.intersects(w.cells[c]));
      covered |= w.cells[c];
      w.cells[c].for_each([&](int x) { CHECK(w.weighting.weights[x] == w.cell_values[c]); });
    }
    CHECK(covered == PointSet::range(81));
  }
}

TEST_CASE("search refuses star cliques") {
  const auto g = build_vls();
  CHECK_THROWS_AS(mms_counterexample_search(g, g.pencil(0)), std::invalid_argument);
}
