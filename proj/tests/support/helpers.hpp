#pragma once

#include <string>
#include <utility>
#include <vector>

#include "lps/relation.hpp"
#include "lps/finite_space.hpp"

namespace th {

using Pairs = std::vector<std::pair<std::string, std::string>>;

inline lps::PointSet set(const lps::UniversePtr& u, const std::vector<std::string>& names) { return u->set_of(names); }

inline lps::Relation rel(const lps::UniversePtr& u, const std::vector<std::string>& carrier, const Pairs& pairs) {
  lps::Relation r(u, u->set_of(carrier));
  for (const auto& [a, b] : pairs) r.add(u->index_of(a), u->index_of(b));
  return r;
}

inline lps::Preorder pre(const lps::UniversePtr& u, const std::vector<std::string>& carrier, const Pairs& pairs) {
  return lps::transitive_reflexive_closure(rel(u, carrier, pairs));
}

inline std::vector<std::string> names(const lps::UniversePtr& u, lps::PointSet s) { return u->names_of(s); }

/// Pairs of a relation as names, in index order.
inline Pairs named_pairs(const lps::Relation& r) {
  Pairs out;
  for (auto [x, y] : r.pairs()) out.emplace_back(r.universe()->name(x), r.universe()->name(y));
  return out;
}

inline bool related(const lps::Preorder& p, const std::string& a, const std::string& b) {
  return p.related(p.universe()->index_of(a), p.universe()->index_of(b));
}

}  // namespace th
