#include "pg/graphs.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace pg {

SrgVerdict srg_check(const Graph &g) {
  const int n = g.order();
  if (n < 2) throw std::invalid_argument("srg_check needs at least two vertices");
  SrgVerdict out;
  const int k = g.degree(0);
  for (int x = 1; x < n; ++x)
    if (g.degree(x) != k) {
      out.failure = "not regular: vertex " + std::to_string(x) + " has degree " + std::to_string(g.degree(x)) +
                    ", vertex 0 has " + std::to_string(k);
      out.witness = std::make_pair(x, x);
      out.witness_count = g.degree(x);
      return out;
    }

  std::optional<int> lambda, mu;
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) {
      const int c = intersect_count(g.neighbors(x), g.neighbors(y));
      auto &expected = g.adjacent(x, y) ? lambda : mu;
      if (!expected) expected = c;
      if (c != *expected) {
        out.failure = std::string(g.adjacent(x, y) ? "adjacent" : "non-adjacent") + " pair (" + std::to_string(x) +
                      "," + std::to_string(y) + ") has " + std::to_string(c) + " common neighbours, expected " +
                      std::to_string(*expected);
        out.witness = std::make_pair(x, y);
        out.witness_count = c;
        return out;
      }
    }

  SrgParams p{n, k, lambda.value_or(0), mu.value_or(0), !mu.has_value(), !lambda.has_value()};
  if (!p.feasible()) {
    out.failure = "parameters violate k(k-lambda-1) = (v-k-1)mu";
    return out;
  }
  out.params = p;
  return out;
}

PointSet common_neighbors(const Graph &g, int x, int y) {
  if (x == y) throw std::invalid_argument("common_neighbors needs distinct vertices");
  return g.neighbors(x) & g.neighbors(y);
}

LocalConfig local_configuration(const IncidenceStructure &g, int x, int y) {
  int through = -1;
  for (int i = 0; i < g.line_count(); ++i)
    if (g.line(i).contains(x) && g.line(i).contains(y) && x != y) {
      through = i;
      break;
    }
  if (through < 0) throw std::invalid_argument("local_configuration needs two collinear points");

  const Graph collinear = point_graph(g);
  const PointSet common = common_neighbors(collinear, x, y);
  LocalConfig out;
  out.A = common & g.line(through);
  const PointSet off = common - out.A;
  int best = -1;
  off.for_each([&](int p) {
    const int d = intersect_count(collinear.neighbors(p), off);
    if (best < 0 || d < best) {
      best = d;
      out.z = p;
    }
  });
  out.B = off;
  if (out.z >= 0) out.B.erase(out.z);
  const PointSet all = common;
  out.induced = collinear.induced(all);
  const auto members = all.members();
  for (auto [i, j] : out.induced.edges()) out.induced_edges.emplace_back(members[i], members[j]);
  return out;
}

bool isomorphic_small(const Graph &a, const Graph &b) {
  const int n = a.order();
  if (n != b.order() || a.edge_count() != b.edge_count()) return false;
  std::vector<int> da(n), db(n);
  for (int i = 0; i < n; ++i) {
    da[i] = a.degree(i);
    db[i] = b.degree(i);
  }
  {
    auto sa = da, sb = db;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;
  }
  std::vector<int> image(n, -1);
  std::vector<bool> used(n, false);
  std::function<bool(int)> extend = [&](int x) {
    if (x == n) return true;
    for (int y = 0; y < n; ++y) {
      if (used[y] || da[x] != db[y]) continue;
      bool consistent = true;
      for (int w = 0; w < x && consistent; ++w) consistent = a.adjacent(x, w) == b.adjacent(y, image[w]);
      if (!consistent) continue;
      image[x] = y;
      used[y] = true;
      if (extend(x + 1)) return true;
      used[y] = false;
    }
    image[x] = -1;
    return false;
  };
  return extend(0);
}

} // namespace pg
