#include "pg/symmetry.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <stdexcept>

namespace pg {

ColoredGraph::ColoredGraph(int n, std::vector<int> colors) : n_(n), words_((n + 63) / 64), colors_(std::move(colors)) {
  if (n < 0) throw std::invalid_argument("negative order");
  if (colors_.empty()) colors_.assign(n, 0);
  if (static_cast<int>(colors_.size()) != n) throw std::invalid_argument("colour vector size mismatch");
  nbrs_.resize(n);
  rows_.assign(static_cast<std::size_t>(n) * words_, 0);
}

ColoredGraph ColoredGraph::from(const Graph &g) {
  ColoredGraph c(g.order());
  for (auto [x, y] : g.edges()) c.add_edge(x, y);
  return c;
}

void ColoredGraph::add_edge(int x, int y) {
  if (x == y) throw std::invalid_argument("loops are not allowed");
  if (adjacent(x, y)) return;
  rows_[x * words_ + (y >> 6)] |= std::uint64_t{1} << (y & 63);
  rows_[y * words_ + (x >> 6)] |= std::uint64_t{1} << (x & 63);
  nbrs_[x].push_back(y);
  nbrs_[y].push_back(x);
}

ColoredGraph ColoredGraph::relabel(const std::vector<int> &image) const {
  if (static_cast<int>(image.size()) != n_) throw std::invalid_argument("relabel: size mismatch");
  std::vector<int> colors(n_);
  for (int x = 0; x < n_; ++x) colors[image[x]] = colors_[x];
  ColoredGraph h(n_, std::move(colors));
  for (int x = 0; x < n_; ++x)
    for (int y : nbrs_[x])
      if (x < y) h.add_edge(image[x], image[y]);
  return h;
}

bool ColoredGraph::is_automorphism(const Permutation &p) const {
  if (p.degree() != n_) return false;
  for (int x = 0; x < n_; ++x) {
    if (colors_[p(x)] != colors_[x]) return false;
    for (int y : nbrs_[x])
      if (!adjacent(p(x), p(y))) return false;
  }
  return true;
}

ColoredGraph incidence_graph(const IncidenceStructure &g) {
  const int v = g.point_count();
  std::vector<int> colors(v + g.line_count(), 1);
  std::fill(colors.begin(), colors.begin() + v, 0);
  ColoredGraph h(v + g.line_count(), std::move(colors));
  for (int i = 0; i < g.line_count(); ++i) g.line(i).for_each([&](int p) { h.add_edge(p, v + i); });
  return h;
}

std::uint64_t AutomorphismSearch::order() const {
  std::uint64_t n = 1;
  for (auto s : orbit_sizes) n *= s;
  return n;
}

namespace {

std::uint64_t mix(std::uint64_t h, std::uint64_t x) {
  h ^= x + 0x9E3779B97F4A7C15ull + (h << 6) + (h >> 2);
  h ^= h >> 31;
  h *= 0xBF58476D1CE4E5B9ull;
  h ^= h >> 27;
  return h;
}

/// Ordered partition with cells stored as contiguous runs of `lab`.
struct Partition {
  std::vector<int> lab;
  std::vector<int> pos;
  std::vector<int> cell_of;  // vertex -> start of its cell
  std::vector<int> cell_end; // start -> one past the end of that cell
  int cells = 0;

  bool discrete() const { return cells == static_cast<int>(lab.size()); }
};

/// Per-level invariant: hash of the refinement trace plus the cell count.
struct LevelTrace {
  std::uint64_t hash = 0;
  int cells = 0;
  friend bool operator==(const LevelTrace &, const LevelTrace &) = default;
  friend auto operator<=>(const LevelTrace &, const LevelTrace &) = default;
};

/// Equitable refinement driven by neighbour counts into splitter cells.
/// Every decision depends only on cell positions and counts, so the result
/// commutes with relabelling the graph.
class Refiner {
public:
  explicit Refiner(const ColoredGraph &g) : g_(g), count_(g.order(), 0), in_queue_(g.order(), 0) {}

  Partition initial(LevelTrace &trace) {
    const int n = g_.order();
    Partition p;
    p.lab.resize(n);
    for (int i = 0; i < n; ++i) p.lab[i] = i;
    std::stable_sort(p.lab.begin(), p.lab.end(), [&](int a, int b) { return g_.color(a) < g_.color(b); });
    p.pos.resize(n);
    p.cell_of.resize(n);
    p.cell_end.assign(n, 0);
    std::vector<int> starts;
    std::uint64_t h = 0x51ED2701ull;
    for (int i = 0; i < n;) {
      int j = i;
      while (j < n && g_.color(p.lab[j]) == g_.color(p.lab[i])) ++j;
      for (int k = i; k < j; ++k) {
        p.pos[p.lab[k]] = k;
        p.cell_of[p.lab[k]] = i;
      }
      p.cell_end[i] = j;
      h = mix(mix(h, static_cast<std::uint64_t>(g_.color(p.lab[i]))), static_cast<std::uint64_t>(j - i));
      starts.push_back(i);
      ++p.cells;
      i = j;
    }
    trace.hash = refine(p, starts, h);
    trace.cells = p.cells;
    return p;
  }

  LevelTrace individualize(Partition &p, int v) {
    const int c = p.cell_of[v];
    const int e = p.cell_end[c];
    const int at = p.pos[v];
    std::swap(p.lab[c], p.lab[at]);
    p.pos[p.lab[at]] = at;
    p.pos[v] = c;
    p.cell_end[c] = c + 1;
    p.cell_end[c + 1] = e;
    for (int k = c + 1; k < e; ++k) p.cell_of[p.lab[k]] = c + 1;
    ++p.cells;
    LevelTrace t;
    t.hash = refine(p, {c}, mix(0xC0FFEEull, static_cast<std::uint64_t>(c)));
    t.cells = p.cells;
    return t;
  }

  /// Start of the first smallest non-singleton cell, or -1 if discrete.
  static int target_cell(const Partition &p) {
    int best = -1, best_size = 0;
    for (int c = 0; c < static_cast<int>(p.lab.size()); c = p.cell_end[c]) {
      const int size = p.cell_end[c] - c;
      if (size > 1 && (best < 0 || size < best_size)) {
        best = c;
        best_size = size;
      }
    }
    return best;
  }

private:
  std::uint64_t refine(Partition &p, const std::vector<int> &splitters, std::uint64_t h) {
    const int n = g_.order();
    std::deque<int> queue;
    for (int s : splitters) {
      queue.push_back(s);
      in_queue_[s] = 1;
    }
    std::vector<int> touched, touched_cells;
    while (!queue.empty()) {
      const int w = queue.front();
      queue.pop_front();
      in_queue_[w] = 0;
      if (p.cells == n) continue;
      h = mix(h, static_cast<std::uint64_t>(w));
      touched.clear();
      for (int i = w; i < p.cell_end[w]; ++i)
        for (int u : g_.neighbors(p.lab[i]))
          if (count_[u]++ == 0) touched.push_back(u);
      touched_cells.clear();
      for (int u : touched) touched_cells.push_back(p.cell_of[u]);
      std::sort(touched_cells.begin(), touched_cells.end());
      touched_cells.erase(std::unique(touched_cells.begin(), touched_cells.end()), touched_cells.end());

      for (int c : touched_cells) {
        const int e = p.cell_end[c];
        if (e - c == 1) {
          h = mix(mix(h, static_cast<std::uint64_t>(c)), static_cast<std::uint64_t>(count_[p.lab[c]]));
          continue;
        }
        std::sort(p.lab.begin() + c, p.lab.begin() + e, [&](int a, int b) { return count_[a] < count_[b]; });
        int largest = c, largest_size = 0, fragments = 0;
        for (int f = c; f < e;) {
          int fe = f;
          const int k = count_[p.lab[f]];
          while (fe < e && count_[p.lab[fe]] == k) ++fe;
          for (int i = f; i < fe; ++i) {
            p.pos[p.lab[i]] = i;
            p.cell_of[p.lab[i]] = f;
          }
          p.cell_end[f] = fe;
          h = mix(mix(mix(h, static_cast<std::uint64_t>(f)), static_cast<std::uint64_t>(k)),
                  static_cast<std::uint64_t>(fe - f));
          if (fe - f > largest_size) {
            largest = f;
            largest_size = fe - f;
          }
          ++fragments;
          f = fe;
        }
        if (fragments == 1) continue;
        p.cells += fragments - 1;
        const bool was_queued = in_queue_[c] != 0;
        for (int f = c; f < e; f = p.cell_end[f]) {
          if (in_queue_[f]) continue;
          if (!was_queued && f == largest) continue;
          queue.push_back(f);
          in_queue_[f] = 1;
        }
      }
      for (int u : touched) count_[u] = 0;
    }
    return h;
  }

  const ColoredGraph &g_;
  std::vector<int> count_;
  std::vector<char> in_queue_;
};

Certificate certificate_of(const ColoredGraph &g, const Partition &p) {
  const int n = g.order();
  const int words = g.words_per_row();
  Certificate c;
  c.n = n;
  c.colors.resize(n);
  c.rows.assign(static_cast<std::size_t>(n) * words, 0);
  for (int i = 0; i < n; ++i) {
    const int v = p.lab[i];
    c.colors[i] = g.color(v);
    for (int u : g.neighbors(v)) {
      const int j = p.pos[u];
      c.rows[static_cast<std::size_t>(i) * words + (j >> 6)] |= std::uint64_t{1} << (j & 63);
    }
  }
  return c;
}

std::vector<int> cell_members(const Partition &p, int c) {
  std::vector<int> m(p.lab.begin() + c, p.lab.begin() + p.cell_end[c]);
  std::sort(m.begin(), m.end());
  return m;
}

/// Orbit labels (smallest member) of the group generated by `gens`.
std::vector<int> orbit_labels(int n, const std::vector<Permutation> &gens) {
  std::vector<int> parent(n);
  for (int i = 0; i < n; ++i) parent[i] = i;
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (const auto &g : gens)
    for (int x = 0; x < n; ++x) {
      int a = find(x), b = find(g(x));
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  std::vector<int> label(n);
  for (int x = 0; x < n; ++x) label[x] = find(x);
  return label;
}

} // namespace

AutomorphismSearch automorphisms(const ColoredGraph &g, BaseChoice choice) {
  const int n = g.order();
  AutomorphismSearch out;
  if (n == 0) return out;
  Refiner refiner(g);

  std::vector<Partition> path;
  std::vector<LevelTrace> traces(1);
  path.push_back(refiner.initial(traces[0]));
  while (!path.back().discrete()) {
    const auto cell = cell_members(path.back(), Refiner::target_cell(path.back()));
    const int v = choice == BaseChoice::Smallest ? cell.front() : cell.back();
    Partition child = path.back();
    traces.push_back(refiner.individualize(child, v));
    out.base.push_back(v);
    path.push_back(std::move(child));
    ++out.nodes;
  }
  const std::vector<int> first_leaf = path.back().lab;
  const std::size_t depth = out.base.size();

  // Search below `node` (at `level`) for a leaf equivalent to the first leaf.
  std::function<std::optional<Permutation>(const Partition &, std::size_t)> equivalent_leaf =
      [&](const Partition &node, std::size_t level) -> std::optional<Permutation> {
    if (node.discrete()) {
      std::vector<int> image(n);
      for (int i = 0; i < n; ++i) image[first_leaf[i]] = node.lab[i];
      Permutation gamma(std::move(image));
      if (g.is_automorphism(gamma)) return gamma;
      return std::nullopt;
    }
    if (level >= depth) return std::nullopt;
    for (int w : cell_members(node, Refiner::target_cell(node))) {
      Partition child = node;
      ++out.nodes;
      if (refiner.individualize(child, w) != traces[level + 1]) continue;
      if (auto found = equivalent_leaf(child, level + 1)) return found;
    }
    return std::nullopt;
  };

  out.orbit_sizes.assign(depth, 1);
  for (std::size_t i = depth; i-- > 0;) {
    const Partition &node = path[i];
    const auto cell = cell_members(node, Refiner::target_cell(node));
    auto labels = orbit_labels(n, out.generators);
    for (int w : cell) {
      if (labels[w] == labels[out.base[i]]) continue;
      Partition child = node;
      ++out.nodes;
      if (refiner.individualize(child, w) != traces[i + 1]) continue;
      if (auto gamma = equivalent_leaf(child, i + 1)) {
        out.generators.push_back(std::move(*gamma));
        labels = orbit_labels(n, out.generators);
      }
    }
    out.orbit_sizes[i] = static_cast<std::uint64_t>(
        std::count(labels.begin(), labels.end(), labels[out.base[i]]));
  }
  return out;
}

CanonicalForm canonical_form(const ColoredGraph &g) {
  const int n = g.order();
  CanonicalForm out;
  out.automorphisms = automorphisms(g);
  Refiner refiner(g);

  struct Best {
    std::vector<LevelTrace> trace;
    Certificate certificate;
    std::vector<int> lab;
  };
  std::optional<Best> best;

  // Prune when every leaf below is known to sort after the best leaf.
  auto worse = [&](const std::vector<LevelTrace> &trace) {
    if (!best) return false;
    const std::size_t m = std::min(trace.size(), best->trace.size());
    for (std::size_t i = 0; i < m; ++i) {
      if (trace[i] < best->trace[i]) return false;
      if (best->trace[i] < trace[i]) return true;
    }
    return trace.size() > best->trace.size();
  };

  std::function<void(const Partition &, std::vector<LevelTrace> &, const std::vector<Permutation> &)> search =
      [&](const Partition &node, std::vector<LevelTrace> &trace, const std::vector<Permutation> &stabilizer) {
        ++out.nodes;
        if (worse(trace)) return;
        if (node.discrete()) {
          Certificate c = certificate_of(g, node);
          if (!best || std::tie(trace, c) < std::tie(best->trace, best->certificate))
            best = Best{trace, std::move(c), node.lab};
          return;
        }
        const auto cell = cell_members(node, Refiner::target_cell(node));
        const auto labels = orbit_labels(n, stabilizer);
        std::vector<int> tried;
        for (int w : cell) {
          if (std::find(tried.begin(), tried.end(), labels[w]) != tried.end()) continue;
          tried.push_back(labels[w]);
          Partition child = node;
          trace.push_back(refiner.individualize(child, w));
          std::vector<Permutation> child_stab;
          if (!stabilizer.empty()) child_stab = PermutationGroup(n, stabilizer, {w}).stabilizer_generators(1);
          search(child, trace, child_stab);
          trace.pop_back();
        }
      };

  if (n > 0) {
    std::vector<LevelTrace> trace(1);
    Partition root = refiner.initial(trace[0]);
    search(root, trace, out.automorphisms.generators);
    out.labeling.resize(n);
    for (int i = 0; i < n; ++i) out.labeling[best->lab[i]] = i;
    out.certificate = std::move(best->certificate);
  } else {
    out.certificate.n = 0;
  }
  return out;
}

namespace {

Permutation restrict_to(const Permutation &p, int offset, int count) {
  std::vector<int> img(count);
  for (int x = 0; x < count; ++x) img[x] = p(offset + x) - offset;
  return Permutation(std::move(img));
}

} // namespace

IncidenceAutomorphisms aut_incidence(const IncidenceStructure &g, BaseChoice choice) {
  const int v = g.point_count();
  const int b = g.line_count();
  const auto search = automorphisms(incidence_graph(g), choice);
  std::vector<Permutation> on_points, on_lines;
  for (const auto &p : search.generators) {
    on_points.push_back(restrict_to(p, 0, v));
    on_lines.push_back(restrict_to(p, v, b));
  }
  IncidenceAutomorphisms out;
  out.generators = search.generators;
  out.search_order = search.order();
  out.points = PermutationGroup(v, std::move(on_points));
  out.lines = PermutationGroup(b, std::move(on_lines));
  return out;
}

PermutationGroup aut_graph(const Graph &g, BaseChoice choice) {
  return PermutationGroup(g.order(), automorphisms(ColoredGraph::from(g), choice).generators);
}

std::optional<IncidenceIsomorphism> find_isomorphism(const IncidenceStructure &a, const IncidenceStructure &b) {
  if (a.point_count() != b.point_count() || a.line_count() != b.line_count()) return std::nullopt;
  const auto ca = canonical_form(incidence_graph(a));
  const auto cb = canonical_form(incidence_graph(b));
  if (ca.certificate != cb.certificate) return std::nullopt;
  const int n = static_cast<int>(ca.labeling.size());
  std::vector<int> from_canon_b(n);
  for (int x = 0; x < n; ++x) from_canon_b[cb.labeling[x]] = x;
  const int v = a.point_count();
  IncidenceIsomorphism iso;
  for (int x = 0; x < v; ++x) iso.point_map.push_back(from_canon_b[ca.labeling[x]]);
  for (int i = 0; i < a.line_count(); ++i) iso.line_map.push_back(from_canon_b[ca.labeling[v + i]] - v);
  return iso;
}

bool is_isomorphic(const IncidenceStructure &a, const IncidenceStructure &b) {
  return find_isomorphism(a, b).has_value();
}

std::optional<DualityMap> self_duality(const IncidenceStructure &g) {
  const IncidenceStructure d = dual(g);
  const auto iso = find_isomorphism(g, d);
  if (!iso) return std::nullopt;
  // Dual line j is the pencil of exactly one point of g.
  std::map<PointSet, int> pencil_owner;
  for (int p = 0; p < g.point_count(); ++p) pencil_owner.emplace(g.pencil(p), p);
  DualityMap out;
  out.point_to_line = iso->point_map;
  for (int j : iso->line_map) out.line_to_point.push_back(pencil_owner.at(d.line(j)));
  if (!is_duality(g, out)) return std::nullopt;
  return out;
}

bool is_duality(const IncidenceStructure &g, const DualityMap &d) {
  if (static_cast<int>(d.point_to_line.size()) != g.point_count() ||
      static_cast<int>(d.line_to_point.size()) != g.line_count())
    return false;
  for (int p = 0; p < g.point_count(); ++p)
    for (int i = 0; i < g.line_count(); ++i)
      if (g.line(i).contains(p) != g.line(d.point_to_line[p]).contains(d.line_to_point[i])) return false;
  return true;
}

Permutation translation(const PointVector &a) {
  std::vector<int> img(kPoints);
  for (int x = 0; x < kPoints; ++x) img[x] = index_of(vector_at(x) + a);
  return Permutation(std::move(img));
}

bool translation_check(const IncidenceStructure &g, const Subspace &sub) {
  if (g.point_count() != kPoints) throw std::invalid_argument("translation_check needs a structure on F_3^4");
  bool ok = true;
  sub.members.for_each([&](int a) {
    if (!ok) return;
    const PointVector shift = vector_at(a);
    for (const auto &l : g.lines())
      if (!g.has_line(translate(l, shift))) {
        ok = false;
        return;
      }
  });
  return ok;
}

bool translations_normal(const PermutationGroup &group, const Subspace &sub) {
  if (group.degree() != kPoints) throw std::invalid_argument("translations_normal needs a group on F_3^4");
  for (const auto &gen : group.generators())
    for (const auto &b : sub.basis) {
      const Permutation conj = gen.inverse() * translation(b) * gen;
      // A translation is determined by the image of 0.
      const PointVector shift = vector_at(conj(0));
      if (!sub.contains(shift) || conj != translation(shift)) return false;
    }
  return true;
}

} // namespace pg
