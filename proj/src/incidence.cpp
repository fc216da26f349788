#include "pg/incidence.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

namespace pg {

IncidenceStructure::IncidenceStructure(int v, std::vector<PointSet> lines) : v_(v), lines_(std::move(lines)) {
  if (v < 0 || v > PointSet::kCapacity) throw std::invalid_argument("point count must be in 0..128");
  const PointSet all = PointSet::range(v);
  for (const auto &l : lines_) {
    if (l.empty()) throw std::invalid_argument("lines must be non-empty");
    if (!l.is_subset_of(all)) throw std::invalid_argument("line has a point outside 0..v-1");
  }
  std::sort(lines_.begin(), lines_.end());
  lines_.erase(std::unique(lines_.begin(), lines_.end()), lines_.end());
}

int IncidenceStructure::find_line(const PointSet &s) const {
  auto it = std::lower_bound(lines_.begin(), lines_.end(), s);
  return (it != lines_.end() && *it == s) ? static_cast<int>(it - lines_.begin()) : -1;
}

PointSet IncidenceStructure::pencil(int p) const {
  PointSet out;
  for (int i = 0; i < line_count(); ++i)
    if (lines_[i].contains(p)) out.insert(i);
  return out;
}

IncidenceStructure IncidenceStructure::relabel(const std::vector<int> &image) const {
  if (static_cast<int>(image.size()) != v_) throw std::invalid_argument("relabel: size mismatch");
  std::vector<PointSet> out;
  out.reserve(lines_.size());
  for (const auto &l : lines_) {
    PointSet m;
    l.for_each([&](int x) { m.insert(image[x]); });
    out.push_back(m);
  }
  return {v_, std::move(out)};
}

LinearSpaceCheck validate_partial_linear_space(const IncidenceStructure &g) {
  const auto &lines = g.lines();
  for (int i = 0; i < g.line_count(); ++i)
    for (int j = i + 1; j < g.line_count(); ++j) {
      PointSet common = lines[i] & lines[j];
      if (common.size() >= 2) {
        auto m = common.members();
        return {false, LinearSpaceViolation{m[0], m[1], i, j}};
      }
    }
  return {};
}

Degrees degrees(const IncidenceStructure &g) {
  Degrees d;
  std::vector<int> deg(g.point_count(), 0);
  for (const auto &l : g.lines()) {
    ++d.line_sizes[l.size()];
    l.for_each([&](int p) { ++deg[p]; });
  }
  for (int x : deg) ++d.point_degrees[x];
  return d;
}

PgVerdict verify_pg(const IncidenceStructure &g) {
  PgVerdict out;
  if (g.point_count() == 0 || g.line_count() == 0) {
    out.failure = "empty structure";
    return out;
  }
  if (auto pls = validate_partial_linear_space(g); !pls.ok) {
    const auto &w = *pls.violation;
    out.failure = "not a partial linear space: points " + std::to_string(w.p) + "," + std::to_string(w.q) +
                  " lie on lines " + std::to_string(w.line1) + " and " + std::to_string(w.line2);
    out.witness = std::make_pair(w.p, w.line1);
    return out;
  }
  const Degrees d = degrees(g);
  if (d.line_sizes.size() != 1) {
    out.failure = "nonuniform line sizes";
    return out;
  }
  if (d.point_degrees.size() != 1) {
    out.failure = "nonuniform point degrees";
    return out;
  }
  const int s = d.line_sizes.begin()->first - 1;
  const int t = d.point_degrees.begin()->first - 1;

  const Graph collinear = point_graph(g);
  std::optional<int> alpha;
  for (int p = 0; p < g.point_count(); ++p)
    for (int i = 0; i < g.line_count(); ++i) {
      const PointSet &l = g.line(i);
      if (l.contains(p)) continue;
      const int count = intersect_count(collinear.neighbors(p), l);
      if (!alpha) alpha = count;
      if (count != *alpha) {
        out.failure = "alpha condition fails at point " + std::to_string(p) + ", line " + std::to_string(i) + ": " +
                      std::to_string(count) + " collinear points, expected " + std::to_string(*alpha);
        out.witness = std::make_pair(p, i);
        out.witness_count = count;
        return out;
      }
    }
  if (!alpha) {
    out.failure = "no non-incident point-line pair";
    return out;
  }
  if (*alpha == 0) {
    out.failure = "alpha is zero";
    return out;
  }
  const int v = g.point_count();
  const int b = g.line_count();
  // v = (s+1)(st/alpha + 1) and b = (t+1)(st/alpha + 1), cleared of the division.
  const long a = *alpha;
  if (long{v} * a != long{s + 1} * (long{s} * t + a) || long{b} * a != long{t + 1} * (long{s} * t + a)) {
    out.failure = "point or line count disagrees with the partial geometry formulas";
    return out;
  }
  out.params = PgParams{s, t, *alpha, v, b};
  return out;
}

IncidenceStructure dual(const IncidenceStructure &g) {
  std::vector<PointSet> pencils;
  for (int p = 0; p < g.point_count(); ++p)
    if (auto pen = g.pencil(p); !pen.empty()) pencils.push_back(pen);
  return {g.line_count(), std::move(pencils)};
}

Graph point_graph(const IncidenceStructure &g) {
  Graph h(g.point_count());
  for (const auto &l : g.lines()) {
    auto m = l.members();
    for (std::size_t i = 0; i < m.size(); ++i)
      for (std::size_t j = i + 1; j < m.size(); ++j) h.add_edge(m[i], m[j]);
  }
  return h;
}

Graph line_graph(const IncidenceStructure &g) {
  Graph h(g.line_count());
  for (int i = 0; i < g.line_count(); ++i)
    for (int j = i + 1; j < g.line_count(); ++j)
      if (g.line(i).intersects(g.line(j))) h.add_edge(i, j);
  return h;
}

void write_incidence(std::ostream &out, const IncidenceStructure &g) {
  out << "pg " << g.point_count() << ' ' << g.line_count() << '\n';
  for (const auto &l : g.lines()) out << l.to_string() << '\n';
}

std::string to_incidence_text(const IncidenceStructure &g) {
  std::ostringstream os;
  write_incidence(os, g);
  return os.str();
}

IncidenceStructure read_incidence(std::istream &in) {
  std::string header;
  if (!std::getline(in, header)) throw FormatError("missing header");
  std::istringstream hs(header);
  std::string tag;
  long v = -1, b = -1;
  std::string extra;
  if (!(hs >> tag >> v >> b) || tag != "pg" || (hs >> extra))
    throw FormatError("header must be 'pg <v> <b>'");
  if (v < 0 || v > PointSet::kCapacity) throw FormatError("point count out of range");
  if (b < 0) throw FormatError("negative line count");

  std::vector<PointSet> lines;
  std::set<PointSet> seen;
  std::string row;
  for (long i = 0; i < b; ++i) {
    if (!std::getline(in, row)) throw FormatError("expected " + std::to_string(b) + " lines, got " + std::to_string(i));
    std::istringstream rs(row);
    PointSet l;
    long prev = -1, x = 0;
    int count = 0;
    while (rs >> x) {
      if (x < 0 || x >= v) throw FormatError("point index out of range on line " + std::to_string(i + 2));
      if (x <= prev) throw FormatError("indices not strictly increasing on line " + std::to_string(i + 2));
      l.insert(static_cast<int>(x));
      prev = x;
      ++count;
    }
    if (!rs.eof()) throw FormatError("non-numeric entry on line " + std::to_string(i + 2));
    if (count == 0) throw FormatError("empty line " + std::to_string(i + 2));
    if (!seen.insert(l).second) throw FormatError("duplicate line " + std::to_string(i + 2));
    lines.push_back(l);
  }
  while (std::getline(in, row))
    if (row.find_first_not_of(" \t\r") != std::string::npos) throw FormatError("more lines than declared");
  return {static_cast<int>(v), std::move(lines)};
}

IncidenceStructure parse_incidence(const std::string &text) {
  std::istringstream is(text);
  return read_incidence(is);
}

} // namespace pg
