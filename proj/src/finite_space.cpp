#include "lps/finite_space.hpp"

#include <algorithm>
#include <cassert>
#include <unordered_set>

#include "lps/error.hpp"

namespace lps {

FiniteSpace FiniteSpace::from_min_opens(UniversePtr universe, std::vector<PointSet> min_open) {
  if (min_open.size() != universe->size())
    throw Error(ErrorCode::MissingPoint, "minimal-open table has " + std::to_string(min_open.size()) +
                                             " entries for " + std::to_string(universe->size()) + " points");
  const PointSet all = universe->all();
  for (PointIndex x = 0; x < min_open.size(); ++x) {
    if (!min_open[x].subset_of(all)) throw Error(ErrorCode::UnknownPoint, "minimal open of '" + universe->name(x) + "' leaves the space");
    if (!min_open[x].contains(x))
      throw Error(ErrorCode::MissingPoint, "'" + universe->name(x) + "' is not in its own minimal open");
  }
  for (PointIndex x = 0; x < min_open.size(); ++x)
    for (PointIndex y : min_open[x])
      if (!min_open[y].subset_of(min_open[x]))
        throw Error(ErrorCode::NotMinimal, "'" + universe->name(y) + "' lies in the minimal open of '" +
                                               universe->name(x) + "' but its own minimal open is not contained in it");
  return FiniteSpace(std::move(universe), std::move(min_open));
}

FiniteSpace FiniteSpace::from_named(std::vector<std::string> points,
                                    const std::vector<std::pair<std::string, std::vector<std::string>>>& min_open) {
  auto u = Universe::make(std::move(points));
  std::vector<PointSet> table(u->size());
  std::vector<bool> seen(u->size(), false);
  for (const auto& [name, members] : min_open) {
    PointIndex x = u->index_of(name);
    if (seen[x]) throw Error(ErrorCode::DuplicatePoint, "two minimal opens given for '" + name + "'");
    seen[x] = true;
    table[x] = u->set_of(members);
  }
  for (PointIndex x = 0; x < u->size(); ++x)
    if (!seen[x]) throw Error(ErrorCode::MissingPoint, "no minimal open given for '" + u->name(x) + "'");
  return from_min_opens(std::move(u), std::move(table));
}

FiniteSpace FiniteSpace::discrete(UniversePtr universe) {
  std::vector<PointSet> table(universe->size());
  for (PointIndex x = 0; x < table.size(); ++x) table[x] = PointSet::singleton(x);
  return FiniteSpace(std::move(universe), std::move(table));
}

FiniteSpace FiniteSpace::empty() { return FiniteSpace(Universe::make({}), {}); }

void FiniteSpace::require_subset(PointSet s) const {
  if (!s.subset_of(points())) throw Error(ErrorCode::UnknownPoint, "set leaves the space");
}

void FiniteSpace::require_open(PointSet u) const {
  require_subset(u);
  if (!is_open(u)) {
    std::string names;
    for (const auto& n : universe_->names_of(u)) names += (names.empty() ? "" : ",") + n;
    throw Error(ErrorCode::NotOpen, "{" + names + "} is not open");
  }
}

bool FiniteSpace::is_open(PointSet u) const {
  if (!u.subset_of(points())) return false;
  for (PointIndex x : u)
    if (!min_open_[x].subset_of(u)) return false;
  return true;
}

PointSet FiniteSpace::open_hull(PointSet s) const {
  PointSet out;
  for (PointIndex x : s) out |= min_open_[x];
  return out;
}

PointSet FiniteSpace::interior(PointSet a) const {
  require_subset(a);
  PointSet out;
  for (PointIndex x : a)
    if (min_open_[x].subset_of(a)) out.insert(x);
  return out;
}

PointSet FiniteSpace::closure(PointSet a) const {
  require_subset(a);
  PointSet out;
  for (PointIndex x = 0; x < size(); ++x)
    if (min_open_[x].intersects(a)) out.insert(x);
  return out;
}

std::vector<PointSet> FiniteSpace::opens(std::size_t max_count) const {
  std::unordered_set<std::uint64_t> seen{0};
  std::vector<PointSet> out{PointSet()};
  for (PointIndex x = 0; x < size(); ++x) {
    const std::size_t n = out.size();
    for (std::size_t i = 0; i < n; ++i) {
      PointSet u = out[i] | min_open_[x];
      if (seen.insert(u.bits()).second) {
        out.push_back(u);
        if (out.size() > max_count)
          throw Error(ErrorCode::CapacityExceeded, "space has more than " + std::to_string(max_count) + " open sets");
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool FiniteSpace::is_t0() const {
  for (PointIndex x = 0; x < size(); ++x)
    for (PointIndex y = x + 1; y < size(); ++y)
      if (min_open_[x] == min_open_[y]) return false;
  return true;
}

Preorder specialization_preorder(const FiniteSpace& x) {
  Relation r(x.universe(), x.points());
  for (PointIndex p = 0; p < x.size(); ++p)
    for (PointIndex q : x.min_open(p)) r.add(p, q);
  return Preorder::checked(std::move(r));
}

void require_point_map(const PointMap& f, const FiniteSpace& source, const FiniteSpace& target) {
  if (f.size() != source.size())
    throw Error(ErrorCode::InvalidArgument, "point map has " + std::to_string(f.size()) + " entries for " +
                                                std::to_string(source.size()) + " source points");
  for (PointIndex i : f)
    if (i >= target.size()) throw Error(ErrorCode::InvalidArgument, "point map leaves the target");
}

bool is_continuous_by_opens(const PointMap& f, const FiniteSpace& source, const FiniteSpace& target) {
  require_point_map(f, source, target);
  // Checking preimages of minimal opens suffices: preimages commute with unions.
  for (PointIndex y = 0; y < target.size(); ++y)
    if (!source.is_open(preimage(f, target.min_open(y)))) return false;
  return true;
}

bool is_continuous_by_specialization(const PointMap& f, const FiniteSpace& source, const FiniteSpace& target) {
  require_point_map(f, source, target);
  for (PointIndex x = 0; x < source.size(); ++x)
    for (PointIndex y : source.min_open(x))
      if (!target.min_open(f[x]).contains(f[y])) return false;
  return true;
}

bool is_continuous(const PointMap& f, const FiniteSpace& source, const FiniteSpace& target) {
  const bool by_opens = is_continuous_by_opens(f, source, target);
  assert(by_opens == is_continuous_by_specialization(f, source, target));
  return by_opens;
}

void require_continuous(const PointMap& f, const FiniteSpace& source, const FiniteSpace& target) {
  if (!is_continuous(f, source, target)) throw Error(ErrorCode::NotContinuous, "point map is not continuous");
}

bool is_open_map(const PointMap& f, const FiniteSpace& source, const FiniteSpace& target) {
  require_point_map(f, source, target);
  for (PointIndex x = 0; x < source.size(); ++x)
    if (!target.is_open(image(f, source.min_open(x)))) return false;
  return true;
}

bool is_connected(const FiniteSpace& x, PointSet a) {
  x.require_subset(a);
  if (a.empty()) return true;
  PointSet reached = PointSet::singleton(a.front());
  PointSet frontier = reached;
  while (!frontier.empty()) {
    PointSet next;
    for (PointIndex p : frontier) {
      next |= x.min_open(p) & a;  // points above p
      for (PointIndex q : a)
        if (x.min_open(q).contains(p)) next.insert(q);  // points below p
    }
    frontier = next - reached;
    reached |= next;
  }
  return reached == a;
}

ProductSpace product_space(const FiniteSpace& x, const FiniteSpace& y) {
  ProductUniverse pu = make_product_universe(*x.universe(), *y.universe());
  std::vector<PointSet> table(pu.universe->size());
  for (PointIndex k = 0; k < table.size(); ++k) {
    PointSet m;
    for (PointIndex i : x.min_open(pu.first[k]))
      for (PointIndex j : y.min_open(pu.second[k])) m.insert(pu.at(i, j));
    table[k] = m;
  }
  return {FiniteSpace::from_min_opens(pu.universe, std::move(table)), std::move(pu)};
}

CoproductSpace coproduct_space(std::span<const FiniteSpace> family) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < family.size(); ++i)
    for (const auto& n : family[i].universe()->names()) names.push_back(std::to_string(i) + ":" + n);
  auto u = Universe::make(names);
  CoproductSpace out{FiniteSpace::empty(), {}};
  std::vector<PointSet> table(u->size());
  for (std::size_t i = 0; i < family.size(); ++i) {
    PointMap inj(family[i].size());
    for (PointIndex p = 0; p < family[i].size(); ++p)
      inj[p] = u->index_of(std::to_string(i) + ":" + family[i].name(p));
    for (PointIndex p = 0; p < family[i].size(); ++p) table[inj[p]] = image(inj, family[i].min_open(p));
    out.injections.push_back(std::move(inj));
  }
  out.space = FiniteSpace::from_min_opens(std::move(u), std::move(table));
  return out;
}

Subspace subspace(const FiniteSpace& x, PointSet a) {
  if (!a.subset_of(x.points())) throw Error(ErrorCode::InvalidSubset, "subspace set leaves the space");
  auto u = Universe::make(x.universe()->names_of(a));
  PointMap inclusion;
  for (PointIndex p : a) inclusion.push_back(p);  // sorted order is preserved
  PointMap back(x.size(), kMaxPoints);
  for (PointIndex i = 0; i < inclusion.size(); ++i) back[inclusion[i]] = i;
  std::vector<PointSet> table(u->size());
  for (PointIndex i = 0; i < inclusion.size(); ++i)
    for (PointIndex q : x.min_open(inclusion[i]) & a) table[i].insert(back[q]);
  return {FiniteSpace::from_min_opens(std::move(u), std::move(table)), std::move(inclusion)};
}

QuotientSpace quotient_space(const FiniteSpace& x, std::span<const PointSet> classes) {
  PointSet covered;
  for (PointSet c : classes) {
    if (c.empty()) throw Error(ErrorCode::InvalidPartition, "empty class");
    if (!c.subset_of(x.points())) throw Error(ErrorCode::InvalidPartition, "class leaves the space");
    if (c.intersects(covered)) throw Error(ErrorCode::InvalidPartition, "classes overlap");
    covered |= c;
  }
  if (covered != x.points()) throw Error(ErrorCode::InvalidPartition, "classes do not cover the space");

  std::vector<PointSet> sorted(classes.begin(), classes.end());
  std::sort(sorted.begin(), sorted.end(), [](PointSet a, PointSet b) { return a.front() < b.front(); });
  std::vector<std::string> names;
  for (PointSet c : sorted) names.push_back(x.name(c.front()));
  auto u = Universe::make(names);

  PointMap projection(x.size());
  std::vector<PointSet> class_of_index(u->size());
  for (PointSet c : sorted) {
    PointIndex k = u->index_of(x.name(c.front()));
    class_of_index[k] = c;
    for (PointIndex p : c) projection[p] = k;
  }
  // Opens of the quotient correspond to saturated opens upstairs; grow the
  // class by open hull and saturation until stable.
  std::vector<PointSet> table(u->size());
  for (PointIndex k = 0; k < u->size(); ++k) {
    PointSet s = class_of_index[k];
    for (;;) {
      PointSet grown = preimage(projection, image(projection, x.open_hull(s)));
      if (grown == s) break;
      s = grown;
    }
    table[k] = image(projection, s);
  }
  return {FiniteSpace::from_min_opens(std::move(u), std::move(table)), std::move(projection)};
}

QuotientSpace quotient_space_by_labels(const FiniteSpace& x, const std::vector<std::size_t>& label) {
  if (label.size() != x.size()) throw Error(ErrorCode::InvalidPartition, "one label per point required");
  std::vector<std::pair<std::size_t, PointSet>> groups;
  for (PointIndex p = 0; p < x.size(); ++p) {
    auto it = std::find_if(groups.begin(), groups.end(), [&](const auto& g) { return g.first == label[p]; });
    if (it == groups.end()) groups.push_back({label[p], PointSet::singleton(p)});
    else it->second.insert(p);
  }
  std::vector<PointSet> classes;
  for (const auto& g : groups) classes.push_back(g.second);
  return quotient_space(x, classes);
}

}  // namespace lps
