#include "pg/point_set.hpp"

namespace pg {

std::string PointSet::to_string() const {
  std::string out;
  for_each([&](int x) {
    if (!out.empty()) out += ' ';
    out += std::to_string(x);
  });
  return out;
}

} // namespace pg
