#pragma once

// Hand-rolled generators and brute-force helpers shared by the test suites.

#include <algorithm>
#include <random>
#include <vector>

#include "pg/gf3.hpp"
#include "pg/graph.hpp"
#include "pg/incidence.hpp"

namespace testing {

inline std::vector<int> random_permutation(int n, std::mt19937 &rng) {
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

inline pg::Graph random_graph(int n, double density, std::mt19937 &rng) {
  std::bernoulli_distribution coin(density);
  pg::Graph g(n);
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      if (coin(rng)) g.add_edge(x, y);
  return g;
}

inline pg::PointVector random_vector(std::mt19937 &rng) {
  std::uniform_int_distribution<int> d(0, 2);
  return {d(rng), d(rng), d(rng), d(rng)};
}

inline pg::PointSet random_subset(int n, double density, std::mt19937 &rng) {
  std::bernoulli_distribution coin(density);
  pg::PointSet s;
  for (int i = 0; i < n; ++i)
    if (coin(rng)) s.insert(i);
  return s;
}

inline pg::Graph petersen() {
  pg::Graph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(5 + i, 5 + (i + 2) % 5);
    g.add_edge(i, 5 + i);
  }
  return g;
}

/// Dot product over F_3 of the coordinate vectors.
inline int dot(const pg::PointVector &a, const pg::PointVector &b) {
  int s = 0;
  for (int i = 0; i < pg::kDim; ++i) s += a[i] * b[i];
  return s % 3;
}

/// Collinearity by scanning every line, no bitset tricks.
inline std::vector<std::vector<bool>> collinearity(const pg::IncidenceStructure &g) {
  const int v = g.point_count();
  std::vector<std::vector<bool>> c(v, std::vector<bool>(v, false));
  for (const auto &line : g.lines()) {
    const auto m = line.members();
    for (int a : m)
      for (int b : m)
        if (a != b) c[a][b] = true;
  }
  return c;
}

} // namespace testing
