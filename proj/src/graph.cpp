#include "pg/graph.hpp"

#include <stdexcept>

namespace pg {

Graph::Graph(int n) {
  if (n < 0 || n > PointSet::kCapacity) throw std::invalid_argument("graph order must be in 0..128");
  adj_.resize(n);
}

void Graph::add_edge(int x, int y) {
  if (x == y) throw std::invalid_argument("loops are not allowed");
  adj_.at(x).insert(y);
  adj_.at(y).insert(x);
}

void Graph::remove_edge(int x, int y) {
  adj_.at(x).erase(y);
  adj_.at(y).erase(x);
}

long Graph::edge_count() const {
  long twice = 0;
  for (const auto &row : adj_) twice += row.size();
  return twice / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int x = 0; x < order(); ++x)
    adj_[x].for_each([&](int y) {
      if (x < y) out.emplace_back(x, y);
    });
  return out;
}

Graph Graph::induced(const PointSet &vertices) const {
  auto vs = vertices.members();
  Graph h(static_cast<int>(vs.size()));
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (adjacent(vs[i], vs[j])) h.add_edge(static_cast<int>(i), static_cast<int>(j));
  return h;
}

Graph Graph::relabel(const std::vector<int> &image) const {
  if (static_cast<int>(image.size()) != order()) throw std::invalid_argument("relabel: size mismatch");
  Graph h(order());
  for (auto [x, y] : edges()) h.add_edge(image[x], image[y]);
  return h;
}

Graph Graph::complete(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

Graph Graph::cycle(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

} // namespace pg
