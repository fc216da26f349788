#include "pg/geometric_search.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>

#include "pg/cliques.hpp"

namespace pg {

CoverInstance cover_instance(const Graph &g, int clique_size) {
  CoverInstance inst;
  inst.universe = g.edges();
  std::map<std::pair<int, int>, int> edge_index;
  for (int i = 0; i < static_cast<int>(inst.universe.size()); ++i) edge_index[inst.universe[i]] = i;
  inst.cliques = max_cliques(g).of_size(clique_size);
  for (const auto &c : inst.cliques) {
    const auto m = c.members();
    std::vector<int> cover;
    for (std::size_t i = 0; i < m.size(); ++i)
      for (std::size_t j = i + 1; j < m.size(); ++j) cover.push_back(edge_index.at({m[i], m[j]}));
    std::sort(cover.begin(), cover.end());
    inst.covers.push_back(std::move(cover));
  }
  return inst;
}

namespace {

using Bits = std::vector<std::uint64_t>;

int popcount_and(const Bits &a, const Bits &b) {
  int c = 0;
  for (std::size_t i = 0; i < a.size(); ++i) c += std::popcount(a[i] & b[i]);
  return c;
}

} // namespace

std::vector<std::vector<int>> exact_covers(int universe_size, const std::vector<std::vector<int>> &candidates) {
  const int m = static_cast<int>(candidates.size());
  const std::size_t words = (static_cast<std::size_t>(m) + 63) / 64;
  // column -> candidates containing it; candidate -> candidates it conflicts with
  std::vector<Bits> column(universe_size, Bits(words, 0));
  for (int c = 0; c < m; ++c)
    for (int item : candidates[c]) {
      if (item < 0 || item >= universe_size) throw std::out_of_range("exact_covers: item out of range");
      column[item][c >> 6] |= std::uint64_t{1} << (c & 63);
    }
  std::vector<Bits> conflicts(m, Bits(words, 0));
  for (int c = 0; c < m; ++c)
    for (int item : candidates[c])
      for (std::size_t w = 0; w < words; ++w) conflicts[c][w] |= column[item][w];

  std::vector<std::vector<int>> solutions;
  std::vector<char> covered(universe_size, 0);
  std::vector<int> chosen;
  Bits all(words, 0);
  for (int c = 0; c < m; ++c) all[c >> 6] |= std::uint64_t{1} << (c & 63);

  std::function<void(const Bits &, int)> solve = [&](const Bits &live, int remaining) {
    if (remaining == 0) {
      auto s = chosen;
      std::sort(s.begin(), s.end());
      solutions.push_back(std::move(s));
      return;
    }
    int best = -1, best_count = 0;
    for (int item = 0; item < universe_size; ++item) {
      if (covered[item]) continue;
      const int count = popcount_and(live, column[item]);
      if (best < 0 || count < best_count) {
        best = item;
        best_count = count;
        if (count == 0) break;
      }
    }
    if (best_count == 0) return;
    for (int c = 0; c < m; ++c) {
      if (!((live[c >> 6] & column[best][c >> 6]) >> (c & 63) & 1u)) continue;
      Bits next(words);
      for (std::size_t w = 0; w < words; ++w) next[w] = live[w] & ~conflicts[c][w];
      for (int item : candidates[c]) covered[item] = 1;
      chosen.push_back(c);
      solve(next, remaining - static_cast<int>(candidates[c].size()));
      chosen.pop_back();
      for (int item : candidates[c]) covered[item] = 0;
    }
  };
  solve(all, universe_size);
  std::sort(solutions.begin(), solutions.end());
  return solutions;
}

GeometrySearch all_geometries_on(const Graph &g, int clique_size) {
  GeometrySearch out;
  out.instance = cover_instance(g, clique_size);
  for (const auto &sol : exact_covers(static_cast<int>(out.instance.universe.size()), out.instance.covers)) {
    std::vector<PointSet> lines;
    for (int c : sol) lines.push_back(out.instance.cliques[c]);
    out.solutions.emplace_back(g.order(), std::move(lines));
    out.verdicts.push_back(verify_pg(out.solutions.back()));
  }
  return out;
}

Rational Weighting::total() const {
  Rational sum;
  for (const auto &w : weights) sum += w;
  return sum;
}

Weighting star_weighting(const IncidenceStructure &g, int p) {
  const int v = g.point_count();
  if (p < 0 || p >= v) throw std::out_of_range("star_weighting: point out of range");
  Weighting w;
  w.weights.assign(v, Rational(-1));
  w.weights[p] = Rational(v - 1);
  return w;
}

NonnegativeLines count_nonnegative_lines(const IncidenceStructure &g, const Weighting &w) {
  if (static_cast<int>(w.weights.size()) != g.point_count())
    throw std::invalid_argument("weighting size does not match point count");
  if (!w.zero_sum()) throw std::invalid_argument("weighting does not sum to zero");
  NonnegativeLines out;
  for (int i = 0; i < g.line_count(); ++i) {
    Rational sum;
    g.line(i).for_each([&](int p) { sum += w.weights[p]; });
    if (sum >= Rational(0)) {
      out.lines.insert(i);
      ++out.count;
    }
  }
  return out;
}

bool is_pencil(const IncidenceStructure &g, const PointSet &lines) {
  for (int p = 0; p < g.point_count(); ++p)
    if (g.pencil(p) == lines) return true;
  return false;
}

namespace {

std::optional<MmsWitness> search_cells(const IncidenceStructure &g, const std::vector<PointSet> &cells, int range,
                                       int star_size, long &tried) {
  const std::size_t k = cells.size();
  std::vector<long long> values(k - 1, -range);
  const long long last_size = cells.back().size();
  while (true) {
    long long partial = 0;
    for (std::size_t i = 0; i + 1 < k; ++i) partial += values[i] * cells[i].size();
    Weighting w;
    w.weights.assign(g.point_count(), Rational(0));
    std::vector<Rational> cell_values;
    for (std::size_t i = 0; i < k; ++i) {
      const Rational val = i + 1 < k ? Rational(values[i]) : Rational(-partial, last_size);
      cell_values.push_back(val);
      cells[i].for_each([&](int p) { w.weights[p] = val; });
    }
    ++tried;
    auto nn = count_nonnegative_lines(g, w);
    if (nn.count <= star_size && !is_pencil(g, nn.lines))
      return MmsWitness{std::move(w), nn, cells, std::move(cell_values), nn.count < star_size};

    std::size_t i = k - 1;
    while (i-- > 0) {
      if (values[i] < range) {
        ++values[i];
        break;
      }
      values[i] = -range;
    }
    if (i == static_cast<std::size_t>(-1)) return std::nullopt;
  }
}

} // namespace

MmsSearch mms_counterexample_search(const IncidenceStructure &g, const PointSet &clique, int range) {
  if (is_star(g, clique)) throw std::invalid_argument("mms_counterexample_search needs a non-star clique");
  const auto deg = degrees(g);
  if (deg.point_degrees.size() != 1) throw std::invalid_argument("point degrees are not uniform");
  const int star_size = deg.point_degrees.begin()->first;

  std::vector<int> hits(g.point_count(), 0);
  clique.for_each([&](int i) { g.line(i).for_each([&](int p) { ++hits[p]; }); });

  auto nonempty = [](std::vector<PointSet> cells) {
    std::erase_if(cells, [](const PointSet &c) { return c.empty(); });
    return cells;
  };
  std::vector<PointSet> coarse(3);
  for (int p = 0; p < g.point_count(); ++p) coarse[hits[p] >= 2 ? 0 : hits[p] == 1 ? 1 : 2].insert(p);
  std::map<int, PointSet, std::greater<>> by_count;
  for (int p = 0; p < g.point_count(); ++p) by_count[hits[p]].insert(p);
  std::vector<PointSet> fine;
  for (auto &[count, cell] : by_count) fine.push_back(cell);

  MmsSearch out;
  std::vector<std::vector<PointSet>> partitions{nonempty(coarse)};
  if (fine.size() <= 4 && nonempty(fine) != partitions.front()) partitions.push_back(nonempty(fine));
  for (const auto &cells : partitions) {
    if (cells.size() < 2) continue;
    if (auto w = search_cells(g, cells, range, star_size, out.weightings_tried)) {
      out.witness = std::move(w);
      return out;
    }
  }
  out.exhausted = true;
  return out;
}

} // namespace pg
