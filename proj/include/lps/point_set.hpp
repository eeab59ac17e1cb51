#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <iterator>
#include <vector>

namespace lps {

/// Index of a point inside its Universe.
using PointIndex = std::size_t;

/// Maximum number of points in a universe; sets and relation rows are single
/// 64-bit words.
inline constexpr std::size_t kMaxPoints = 64;

/// A subset of a universe of at most 64 points, stored as a bit mask.
class PointSet {
 public:
  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = PointIndex;
    using difference_type = std::ptrdiff_t;
    using pointer = const PointIndex*;
    using reference = PointIndex;

    iterator() = default;
    explicit iterator(std::uint64_t rest) : rest_(rest) {}
    PointIndex operator*() const { return static_cast<PointIndex>(std::countr_zero(rest_)); }
    iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    bool operator==(const iterator&) const = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr PointSet() = default;
  constexpr explicit PointSet(std::uint64_t bits) : bits_(bits) {}

  static constexpr PointSet singleton(PointIndex i) { return PointSet(std::uint64_t{1} << i); }
  static constexpr PointSet first_n(std::size_t n) {
    return PointSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  int size() const { return std::popcount(bits_); }
  constexpr bool contains(PointIndex i) const { return (bits_ >> i) & 1U; }
  constexpr bool subset_of(PointSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(PointSet other) const { return (bits_ & other.bits_) != 0; }

  constexpr void insert(PointIndex i) { bits_ |= std::uint64_t{1} << i; }
  constexpr void erase(PointIndex i) { bits_ &= ~(std::uint64_t{1} << i); }

  /// Least element; the set must be non-empty.
  PointIndex front() const { return static_cast<PointIndex>(std::countr_zero(bits_)); }

  iterator begin() const { return iterator(bits_); }
  iterator end() const { return iterator(0); }

  std::vector<PointIndex> to_vector() const { return {begin(), end()}; }

  friend constexpr PointSet operator|(PointSet a, PointSet b) { return PointSet(a.bits_ | b.bits_); }
  friend constexpr PointSet operator&(PointSet a, PointSet b) { return PointSet(a.bits_ & b.bits_); }
  /// Set difference.
  friend constexpr PointSet operator-(PointSet a, PointSet b) { return PointSet(a.bits_ & ~b.bits_); }
  constexpr PointSet& operator|=(PointSet o) {
    bits_ |= o.bits_;
    return *this;
  }
  constexpr PointSet& operator&=(PointSet o) {
    bits_ &= o.bits_;
    return *this;
  }

  friend constexpr bool operator==(PointSet, PointSet) = default;
  friend constexpr auto operator<=>(PointSet a, PointSet b) { return a.bits_ <=> b.bits_; }

 private:
  std::uint64_t bits_ = 0;
};

/// A function between finite point sets: entry i is the image of point i.
using PointMap = std::vector<PointIndex>;

inline PointSet image(const PointMap& f, PointSet a) {
  PointSet out;
  for (PointIndex i : a) out.insert(f[i]);
  return out;
}

inline PointSet preimage(const PointMap& f, PointSet b) {
  PointSet out;
  for (PointIndex i = 0; i < f.size(); ++i)
    if (b.contains(f[i])) out.insert(i);
  return out;
}

inline PointMap compose(const PointMap& g, const PointMap& f) {
  PointMap out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = g[f[i]];
  return out;
}

inline PointMap identity_point_map(std::size_t n) {
  PointMap out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = i;
  return out;
}

}  // namespace lps
