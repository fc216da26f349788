#include "pg/cliques.hpp"

#include <algorithm>
#include <stdexcept>

#include "pg/construction.hpp"

namespace pg {

std::vector<PointSet> CliqueReport::of_size(int k) const {
  std::vector<PointSet> out;
  for (const auto &c : cliques)
    if (c.size() == k) out.push_back(c);
  return out;
}

namespace {

void bron_kerbosch(const Graph &g, PointSet r, PointSet p, PointSet x, std::vector<PointSet> &out) {
  if (p.empty()) {
    if (x.empty()) out.push_back(r);
    return;
  }
  int pivot = -1, best = -1;
  (p | x).for_each([&](int u) {
    const int c = intersect_count(p, g.neighbors(u));
    if (c > best) {
      best = c;
      pivot = u;
    }
  });
  const PointSet candidates = p - g.neighbors(pivot);
  candidates.for_each([&](int v) {
    PointSet rv = r;
    rv.insert(v);
    bron_kerbosch(g, rv, p & g.neighbors(v), x & g.neighbors(v), out);
    p.erase(v);
    x.insert(v);
  });
}

} // namespace

CliqueReport max_cliques(const Graph &g) {
  CliqueReport report;
  if (g.order() == 0) return report;
  bron_kerbosch(g, {}, PointSet::range(g.order()), {}, report.cliques);
  std::sort(report.cliques.begin(), report.cliques.end());
  for (const auto &c : report.cliques) ++report.size_histogram[c.size()];
  return report;
}

bool is_star(const IncidenceStructure &g, const PointSet &clique) {
  if (clique.empty()) return false;
  PointSet common = PointSet::range(g.point_count());
  clique.for_each([&](int i) { common &= g.line(i); });
  return !common.empty();
}

LineCliqueClasses classify_line_cliques(const IncidenceStructure &g, const std::vector<PointSet> &cliques) {
  LineCliqueClasses out;
  for (const auto &c : cliques) {
    const auto m = c.members();
    for (std::size_t i = 0; i < m.size(); ++i)
      for (std::size_t j = i + 1; j < m.size(); ++j)
        if (!g.line(m[i]).intersects(g.line(m[j])))
          throw std::invalid_argument("classify_line_cliques: input is not a clique of the line graph");
    (is_star(g, c) ? out.stars : out.non_stars).push_back(c);
  }
  return out;
}

std::vector<int> matching_negative_lines(const IncidenceStructure &g, const PointSet &clique) {
  std::vector<int> out;
  const auto negs = negative_lines(g);
  for (int i = 0; i < static_cast<int>(negs.size()); ++i)
    if (one_secant_lines(g, negs[i]) == clique) out.push_back(i);
  return out;
}

NegativeLineMatching match_negative_lines(const IncidenceStructure &g, const std::vector<PointSet> &non_stars) {
  NegativeLineMatching out;
  std::vector<int> hits(g.line_count(), 0);
  for (const auto &c : non_stars) {
    const auto m = matching_negative_lines(g, c);
    if (m.size() != 1)
      throw std::runtime_error("clique {" + c.to_string() + "} matches " + std::to_string(m.size()) +
                               " negative lines");
    out.match.push_back(m.front());
    ++hits[m.front()];
  }
  out.bijective = std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; });
  return out;
}

} // namespace pg
