#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pg/graph.hpp"
#include "pg/point_set.hpp"

namespace pg {

/// Points 0..v-1 and a deduplicated list of non-empty lines sorted by mask.
/// Line indices are stable and are what dual() and the file format refer to.
class IncidenceStructure {
public:
  IncidenceStructure() = default;
  IncidenceStructure(int v, std::vector<PointSet> lines);

  int point_count() const { return v_; }
  int line_count() const { return static_cast<int>(lines_.size()); }
  const std::vector<PointSet> &lines() const { return lines_; }
  const PointSet &line(int i) const { return lines_[i]; }

  /// Index of a line equal to `s`, or -1.
  int find_line(const PointSet &s) const;
  bool has_line(const PointSet &s) const { return find_line(s) >= 0; }
  /// Indices of the lines through point p.
  PointSet pencil(int p) const;

  /// Same structure with point x renamed to image[x].
  IncidenceStructure relabel(const std::vector<int> &image) const;

  friend bool operator==(const IncidenceStructure &, const IncidenceStructure &) = default;

private:
  int v_ = 0;
  std::vector<PointSet> lines_;
};

struct PgParams {
  int s = 0;
  int t = 0;
  int alpha = 0;
  int v = 0;
  int b = 0;
  friend bool operator==(const PgParams &, const PgParams &) = default;
};

/// Two distinct points on two distinct common lines.
struct LinearSpaceViolation {
  int p = 0, q = 0;
  int line1 = 0, line2 = 0;
};

struct LinearSpaceCheck {
  bool ok = true;
  std::optional<LinearSpaceViolation> violation;
};

LinearSpaceCheck validate_partial_linear_space(const IncidenceStructure &g);

/// Histograms: line size -> number of lines, point degree -> number of points.
struct Degrees {
  std::map<int, int> line_sizes;
  std::map<int, int> point_degrees;
};

Degrees degrees(const IncidenceStructure &g);

struct PgVerdict {
  std::optional<PgParams> params;
  std::string failure;
  /// For alpha failures: the non-incident (point, line) pair and its count.
  std::optional<std::pair<int, int>> witness;
  int witness_count = 0;

  bool ok() const { return params.has_value(); }
};

/// Checks the partial geometry axioms by direct count over every
/// non-incident point-line pair.
PgVerdict verify_pg(const IncidenceStructure &g);

/// Points of the dual are the line indices of `g`; its lines are the pencils
/// of the points of `g`. Isolated points have an empty pencil and contribute
/// no line; equal pencils collapse to one line.
IncidenceStructure dual(const IncidenceStructure &g);

/// Collinearity graph on points.
Graph point_graph(const IncidenceStructure &g);
/// Intersection graph on line indices.
Graph line_graph(const IncidenceStructure &g);

class FormatError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// "pg <v> <b>" followed by one line per block, indices strictly increasing.
void write_incidence(std::ostream &out, const IncidenceStructure &g);
std::string to_incidence_text(const IncidenceStructure &g);
/// Throws FormatError on malformed input.
IncidenceStructure read_incidence(std::istream &in);
IncidenceStructure parse_incidence(const std::string &text);

} // namespace pg
