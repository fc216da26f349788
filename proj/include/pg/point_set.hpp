#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace pg {

/// Fixed-capacity set of small non-negative integers (points, line indices,
/// graph vertices) stored as a 128-bit mask.
///
/// Ordering compares the mask as an unsigned 128-bit number, which is the
/// order used everywhere a list of sets has to be deterministic.
class PointSet {
public:
  static constexpr int kCapacity = 128;

  constexpr PointSet() = default;
  PointSet(std::initializer_list<int> members) {
    for (int m : members) insert(m);
  }
  template <typename Range>
  static PointSet from(const Range &members) {
    PointSet s;
    for (auto m : members) s.insert(static_cast<int>(m));
    return s;
  }
  /// The set {0, 1, ..., n-1}.
  static PointSet range(int n) {
    check(n == 0 ? 0 : n - 1);
    PointSet s;
    for (int i = 0; i < n; ++i) s.insert(i);
    return s;
  }

  bool contains(int x) const {
    if (x < 0 || x >= kCapacity) return false;
    return (word(x) >> (x & 63)) & 1u;
  }
  void insert(int x) {
    check(x);
    word(x) |= std::uint64_t{1} << (x & 63);
  }
  void erase(int x) {
    check(x);
    word(x) &= ~(std::uint64_t{1} << (x & 63));
  }

  int size() const { return std::popcount(lo_) + std::popcount(hi_); }
  bool empty() const { return (lo_ | hi_) == 0; }
  /// Smallest member, or -1 when empty.
  int first() const {
    if (lo_) return std::countr_zero(lo_);
    if (hi_) return 64 + std::countr_zero(hi_);
    return -1;
  }
  /// Largest member, or -1 when empty.
  int last() const {
    if (hi_) return 127 - std::countl_zero(hi_);
    if (lo_) return 63 - std::countl_zero(lo_);
    return -1;
  }

  template <typename F>
  void for_each(F &&f) const {
    for (std::uint64_t w = lo_; w; w &= w - 1) f(std::countr_zero(w));
    for (std::uint64_t w = hi_; w; w &= w - 1) f(64 + std::countr_zero(w));
  }
  std::vector<int> members() const {
    std::vector<int> out;
    out.reserve(size());
    for_each([&](int x) { out.push_back(x); });
    return out;
  }

  bool is_subset_of(const PointSet &o) const {
    return (lo_ & ~o.lo_) == 0 && (hi_ & ~o.hi_) == 0;
  }
  bool intersects(const PointSet &o) const {
    return (lo_ & o.lo_) != 0 || (hi_ & o.hi_) != 0;
  }

  PointSet &operator&=(const PointSet &o) { lo_ &= o.lo_; hi_ &= o.hi_; return *this; }
  PointSet &operator|=(const PointSet &o) { lo_ |= o.lo_; hi_ |= o.hi_; return *this; }
  PointSet &operator^=(const PointSet &o) { lo_ ^= o.lo_; hi_ ^= o.hi_; return *this; }
  /// Set difference.
  PointSet &operator-=(const PointSet &o) { lo_ &= ~o.lo_; hi_ &= ~o.hi_; return *this; }

  friend PointSet operator&(PointSet a, const PointSet &b) { return a &= b; }
  friend PointSet operator|(PointSet a, const PointSet &b) { return a |= b; }
  friend PointSet operator^(PointSet a, const PointSet &b) { return a ^= b; }
  friend PointSet operator-(PointSet a, const PointSet &b) { return a -= b; }

  friend bool operator==(const PointSet &, const PointSet &) = default;
  friend std::strong_ordering operator<=>(const PointSet &a, const PointSet &b) {
    if (auto c = a.hi_ <=> b.hi_; c != 0) return c;
    return a.lo_ <=> b.lo_;
  }

  std::uint64_t low_word() const { return lo_; }
  std::uint64_t high_word() const { return hi_; }

  /// Space-separated members, e.g. "0 1 5".
  std::string to_string() const;

private:
  static void check(int x) {
    if (x < 0 || x >= kCapacity)
      throw std::out_of_range("PointSet member out of range: " + std::to_string(x));
  }
  std::uint64_t &word(int x) { return x < 64 ? lo_ : hi_; }
  const std::uint64_t &word(int x) const { return x < 64 ? lo_ : hi_; }

  std::uint64_t lo_ = 0;
  std::uint64_t hi_ = 0;
};

inline int intersect_count(const PointSet &a, const PointSet &b) { return (a & b).size(); }

struct PointSetHash {
  std::size_t operator()(const PointSet &s) const noexcept {
    std::uint64_t h = s.low_word() * 0x9E3779B97F4A7C15ull;
    h ^= s.high_word() + 0x7F4A7C159E3779B9ull + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h);
  }
};

} // namespace pg
