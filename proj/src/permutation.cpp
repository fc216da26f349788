#include "pg/permutation.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <stdexcept>

namespace pg {

Permutation::Permutation(std::vector<int> image) : image_(std::move(image)) {
  std::vector<char> seen(image_.size(), 0);
  for (int y : image_) {
    if (y < 0 || y >= degree() || seen[y]) throw std::invalid_argument("not a permutation");
    seen[y] = 1;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 0);
  return Permutation(std::move(img));
}

bool Permutation::is_identity() const { return first_moved() < 0; }

int Permutation::first_moved() const {
  for (int x = 0; x < degree(); ++x)
    if (image_[x] != x) return x;
  return -1;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(image_.size());
  for (int x = 0; x < degree(); ++x) inv[image_[x]] = x;
  Permutation p;
  p.image_ = std::move(inv);
  return p;
}

Permutation operator*(const Permutation &a, const Permutation &b) {
  if (a.degree() != b.degree()) throw std::invalid_argument("degree mismatch");
  Permutation p;
  p.image_.resize(a.image_.size());
  for (int x = 0; x < a.degree(); ++x) p.image_[x] = b.image_[a.image_[x]];
  return p;
}

PermutationGroup::PermutationGroup(int degree, std::vector<Permutation> generators, std::vector<int> base_prefix)
    : degree_(degree), generators_(std::move(generators)), base_(std::move(base_prefix)) {
  for (const auto &g : generators_)
    if (g.degree() != degree_) throw std::invalid_argument("generator degree mismatch");
  std::set<int> distinct(base_.begin(), base_.end());
  if (distinct.size() != base_.size()) throw std::invalid_argument("repeated base point");
  for (int b : base_)
    if (b < 0 || b >= degree_) throw std::invalid_argument("base point out of range");
  build();
}

std::vector<const Permutation *> PermutationGroup::level_generators(std::size_t i) const {
  std::vector<const Permutation *> out;
  for (const auto &s : strong_) {
    bool fixes = true;
    for (std::size_t j = 0; j < i && fixes; ++j) fixes = s(base_[j]) == base_[j];
    if (fixes) out.push_back(&s);
  }
  return out;
}

void PermutationGroup::rebuild_level(std::size_t i) {
  Level &lv = levels_[i];
  lv.point = base_[i];
  lv.orbit.assign(1, lv.point);
  lv.transversal.assign(degree_, std::nullopt);
  lv.transversal[lv.point] = Permutation::identity(degree_);
  const auto gens = level_generators(i);
  for (std::size_t q = 0; q < lv.orbit.size(); ++q) {
    const int u = lv.orbit[q];
    for (const Permutation *s : gens) {
      const int v = (*s)(u);
      if (!lv.transversal[v]) {
        lv.transversal[v] = *lv.transversal[u] * *s;
        lv.orbit.push_back(v);
      }
    }
  }
}

std::pair<Permutation, std::size_t> PermutationGroup::strip(Permutation g, std::size_t from) const {
  for (std::size_t l = from; l < levels_.size(); ++l) {
    const int x = g(levels_[l].point);
    if (!levels_[l].transversal[x]) return {std::move(g), l};
    g = g * levels_[l].transversal[x]->inverse();
  }
  return {std::move(g), levels_.size()};
}

void PermutationGroup::build() {
  for (const auto &g : generators_)
    if (!g.is_identity() && std::find(strong_.begin(), strong_.end(), g) == strong_.end()) strong_.push_back(g);

  // Every strong generator must move some base point.
  for (const auto &s : strong_) {
    const bool fixes_base = std::all_of(base_.begin(), base_.end(), [&](int b) { return s(b) == b; });
    if (fixes_base) {
      for (int x = 0; x < degree_; ++x)
        if (s(x) != x && std::find(base_.begin(), base_.end(), x) == base_.end()) {
          base_.push_back(x);
          break;
        }
    }
  }
  levels_.assign(base_.size(), Level{});
  for (std::size_t i = 0; i < levels_.size(); ++i) rebuild_level(i);

  std::ptrdiff_t i = static_cast<std::ptrdiff_t>(levels_.size()) - 1;
  while (i >= 0) {
    bool extended = false;
    const auto gens = level_generators(static_cast<std::size_t>(i));
    const auto orbit = levels_[i].orbit;
    for (std::size_t oi = 0; oi < orbit.size() && !extended; ++oi) {
      const int u = orbit[oi];
      for (const Permutation *s : gens) {
        const int su = (*s)(u);
        Permutation h = *levels_[i].transversal[u] * *s * levels_[i].transversal[su]->inverse();
        if (h.is_identity()) continue;
        auto [residue, j] = strip(std::move(h), static_cast<std::size_t>(i) + 1);
        if (j == levels_.size() && residue.is_identity()) continue;
        if (j == levels_.size()) {
          int moved = -1;
          for (int x = 0; x < degree_; ++x)
            if (residue(x) != x && std::find(base_.begin(), base_.end(), x) == base_.end()) {
              moved = x;
              break;
            }
          base_.push_back(moved);
          levels_.emplace_back();
        }
        strong_.push_back(std::move(residue));
        for (std::size_t l = static_cast<std::size_t>(i) + 1; l <= j; ++l) rebuild_level(l);
        i = static_cast<std::ptrdiff_t>(j);
        extended = true;
        break;
      }
    }
    if (!extended) --i;
  }
}

std::vector<std::uint64_t> PermutationGroup::basic_orbit_sizes() const {
  std::vector<std::uint64_t> out;
  for (const auto &lv : levels_) out.push_back(lv.orbit.size());
  return out;
}

std::uint64_t PermutationGroup::order() const {
  std::uint64_t n = 1;
  for (const auto &lv : levels_) n *= lv.orbit.size();
  return n;
}

bool PermutationGroup::contains(const Permutation &g) const {
  if (g.degree() != degree_) return false;
  auto [residue, j] = strip(g, 0);
  return j == levels_.size() && residue.is_identity();
}

std::vector<Permutation> PermutationGroup::stabilizer_generators(int level) const {
  std::vector<Permutation> out;
  for (const Permutation *s : level_generators(static_cast<std::size_t>(level))) out.push_back(*s);
  return out;
}

std::vector<Permutation> PermutationGroup::pointwise_stabilizer(const std::vector<int> &points) const {
  PermutationGroup rebased(degree_, strong_, points);
  return rebased.stabilizer_generators(static_cast<int>(points.size()));
}

std::vector<int> PermutationGroup::orbit_of(int x) const {
  std::vector<char> seen(degree_, 0);
  std::vector<int> out{x};
  seen[x] = 1;
  for (std::size_t q = 0; q < out.size(); ++q)
    for (const auto &g : generators_) {
      const int y = g(out[q]);
      if (!seen[y]) {
        seen[y] = 1;
        out.push_back(y);
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<int>> PermutationGroup::orbits() const {
  std::vector<char> done(degree_, 0);
  std::vector<std::vector<int>> out;
  for (int x = 0; x < degree_; ++x) {
    if (done[x]) continue;
    auto o = orbit_of(x);
    for (int y : o) done[y] = 1;
    out.push_back(std::move(o));
  }
  return out;
}

std::vector<PointSet> orbits(const PermutationGroup &group, const PointSet &domain) {
  std::vector<PointSet> out;
  PointSet done;
  domain.for_each([&](int x) {
    if (done.contains(x)) return;
    PointSet o = PointSet::from(group.orbit_of(x));
    done |= o;
    out.push_back(o);
  });
  return out;
}

bool is_transitive(const PermutationGroup &group, const PointSet &domain) {
  return orbits(group, domain).size() == 1;
}

std::uint64_t point_stabilizer_order(const PermutationGroup &group, int point) {
  return group.order() / group.orbit_of(point).size();
}

std::vector<Permutation> enumerate_elements(int degree, const std::vector<Permutation> &generators,
                                            std::size_t limit) {
  std::set<std::vector<int>> seen;
  std::vector<Permutation> out{Permutation::identity(degree)};
  seen.insert(out.front().image());
  for (std::size_t q = 0; q < out.size(); ++q)
    for (const auto &g : generators) {
      Permutation h = out[q] * g;
      if (seen.insert(h.image()).second) {
        if (out.size() >= limit) throw std::length_error("group larger than enumeration limit");
        out.push_back(std::move(h));
      }
    }
  return out;
}

} // namespace pg
