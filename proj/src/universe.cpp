#include "lps/universe.hpp"

#include <algorithm>

#include "lps/error.hpp"

namespace lps {

UniversePtr Universe::make(std::vector<std::string> names) {
  if (names.size() > kMaxPoints)
    throw Error(ErrorCode::CapacityExceeded,
                std::to_string(names.size()) + " points exceeds the limit of " + std::to_string(kMaxPoints));
  std::sort(names.begin(), names.end());
  auto dup = std::adjacent_find(names.begin(), names.end());
  if (dup != names.end()) throw Error(ErrorCode::DuplicatePoint, "point '" + *dup + "' appears twice");
  for (const auto& n : names)
    if (n.empty()) throw Error(ErrorCode::InvalidArgument, "point names must be non-empty");
  return UniversePtr(new Universe(std::move(names)));
}

std::optional<PointIndex> Universe::find(std::string_view name) const {
  auto it = std::lower_bound(names_.begin(), names_.end(), name,
                             [](const std::string& a, std::string_view b) { return a < b; });
  if (it == names_.end() || *it != name) return std::nullopt;
  return static_cast<PointIndex>(it - names_.begin());
}

PointIndex Universe::index_of(std::string_view name) const {
  if (auto i = find(name)) return *i;
  throw Error(ErrorCode::UnknownPoint, "no point named '" + std::string(name) + "'");
}

PointSet Universe::set_of(std::span<const std::string> names) const {
  PointSet s;
  for (const auto& n : names) s.insert(index_of(n));
  return s;
}

std::vector<std::string> Universe::names_of(PointSet s) const {
  std::vector<std::string> out;
  for (PointIndex i : s) out.push_back(names_[i]);
  return out;
}

std::string tuple_name(std::span<const std::string> parts) {
  std::string out = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ',';
    out += parts[i];
  }
  out += ')';
  return out;
}

ProductUniverse make_product_universe(const Universe& a, const Universe& b) {
  if (a.size() * b.size() > kMaxPoints)
    throw Error(ErrorCode::CapacityExceeded, "product of " + std::to_string(a.size()) + " and " +
                                                 std::to_string(b.size()) + " points exceeds the limit");
  std::vector<std::string> names;
  names.reserve(a.size() * b.size());
  for (PointIndex i = 0; i < a.size(); ++i)
    for (PointIndex j = 0; j < b.size(); ++j) {
      const std::string parts[] = {a.name(i), b.name(j)};
      names.push_back(tuple_name(parts));
    }
  ProductUniverse pu;
  pu.first_size = a.size();
  pu.second_size = b.size();
  pu.universe = Universe::make(names);
  pu.index.resize(names.size());
  pu.first.resize(names.size());
  pu.second.resize(names.size());
  for (PointIndex i = 0; i < a.size(); ++i)
    for (PointIndex j = 0; j < b.size(); ++j) {
      PointIndex k = pu.universe->index_of(names[i * b.size() + j]);
      pu.index[i * b.size() + j] = k;
      pu.first[k] = i;
      pu.second[k] = j;
    }
  return pu;
}

}  // namespace lps
