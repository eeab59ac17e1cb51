#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lps/point_set.hpp"

namespace lps {

class Universe;
using UniversePtr = std::shared_ptr<const Universe>;

/// An interned, sorted list of point names. Indices follow the sorted order,
/// so two universes with the same names index their points identically.
class Universe {
 public:
  /// Sorts the names; rejects duplicates and more than kMaxPoints entries.
  static UniversePtr make(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::string& name(PointIndex i) const { return names_[i]; }
  const std::vector<std::string>& names() const { return names_; }
  PointSet all() const { return PointSet::first_n(names_.size()); }

  std::optional<PointIndex> find(std::string_view name) const;
  /// Throws UnknownPoint.
  PointIndex index_of(std::string_view name) const;
  PointSet set_of(std::span<const std::string> names) const;
  std::vector<std::string> names_of(PointSet s) const;

  friend bool operator==(const Universe& a, const Universe& b) { return a.names_ == b.names_; }

 private:
  explicit Universe(std::vector<std::string> names) : names_(std::move(names)) {}
  std::vector<std::string> names_;
};

inline bool same_universe(const UniversePtr& a, const UniversePtr& b) {
  return a == b || (a && b && *a == *b);
}

/// Universe of named pairs "(a,b)" for a product, with the index bookkeeping
/// needed to move between factor indices and product indices.
struct ProductUniverse {
  UniversePtr universe;
  std::size_t first_size = 0;
  std::size_t second_size = 0;
  std::vector<PointIndex> index;  // index[i * second_size + j]
  PointMap first;                 // product index -> first factor index
  PointMap second;

  PointIndex at(PointIndex i, PointIndex j) const { return index[i * second_size + j]; }
};

ProductUniverse make_product_universe(const Universe& a, const Universe& b);

/// Name of a tuple point, e.g. "(a,b,c)".
std::string tuple_name(std::span<const std::string> parts);

}  // namespace lps
