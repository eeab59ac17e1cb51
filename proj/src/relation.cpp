#include "lps/relation.hpp"

#include <sstream>

#include "lps/error.hpp"

namespace lps {

namespace {

void require_universe(const UniversePtr& a, const UniversePtr& b, const char* what) {
  if (!same_universe(a, b)) throw Error(ErrorCode::CarrierMismatch, std::string(what) + ": relations live in different universes");
}

std::string pair_text(const Universe& u, PointIndex x, PointIndex y) {
  auto name = [&](PointIndex i) { return i < u.size() ? u.name(i) : "#" + std::to_string(i); };
  return "(" + name(x) + "," + name(y) + ")";
}

}  // namespace

Relation::Relation(UniversePtr universe, PointSet carrier)
    : universe_(std::move(universe)), carrier_(carrier), rows_(universe_->size()) {
  if (!carrier_.subset_of(universe_->all()))
    throw Error(ErrorCode::UnknownPoint, "carrier exceeds the universe");
}

Relation Relation::identity(UniversePtr universe, PointSet carrier) {
  Relation r(std::move(universe), carrier);
  for (PointIndex i : carrier) r.rows_[i].insert(i);
  return r;
}

Relation Relation::full(UniversePtr universe, PointSet carrier) {
  Relation r(std::move(universe), carrier);
  for (PointIndex i : carrier) r.rows_[i] = carrier;
  return r;
}

Relation Relation::from_pairs(UniversePtr universe, PointSet carrier,
                              std::span<const std::pair<PointIndex, PointIndex>> pairs) {
  Relation r(std::move(universe), carrier);
  for (auto [x, y] : pairs) r.add(x, y);
  return r;
}

PointSet Relation::predecessors(PointIndex y) const {
  PointSet out;
  for (PointIndex x : carrier_)
    if (rows_[x].contains(y)) out.insert(x);
  return out;
}

void Relation::add(PointIndex x, PointIndex y) {
  if (x >= kMaxPoints || y >= kMaxPoints || !carrier_.contains(x) || !carrier_.contains(y))
    throw Error(ErrorCode::UnknownPoint, "pair " + pair_text(*universe_, x, y) + " leaves the carrier");
  rows_[x].insert(y);
}

void Relation::merge(const Relation& other) {
  require_universe(universe_, other.universe_, "merge");
  if (!other.carrier_.subset_of(carrier_)) throw Error(ErrorCode::CarrierMismatch, "merge: carrier not contained");
  for (PointIndex x : other.carrier_) rows_[x] |= other.rows_[x];
}

std::size_t Relation::pair_count() const {
  std::size_t n = 0;
  for (PointIndex x : carrier_) n += static_cast<std::size_t>(rows_[x].size());
  return n;
}

std::vector<std::pair<PointIndex, PointIndex>> Relation::pairs() const {
  std::vector<std::pair<PointIndex, PointIndex>> out;
  for (PointIndex x : carrier_)
    for (PointIndex y : rows_[x]) out.emplace_back(x, y);
  return out;
}

bool Relation::graph_subset_of(const Relation& other) const {
  require_universe(universe_, other.universe_, "graph comparison");
  for (PointIndex x : carrier_)
    if (!rows_[x].subset_of(other.rows_[x])) return false;
  return true;
}

bool Relation::is_reflexive() const {
  for (PointIndex x : carrier_)
    if (!rows_[x].contains(x)) return false;
  return true;
}

bool Relation::is_transitive() const {
  for (PointIndex x : carrier_)
    for (PointIndex y : rows_[x])
      if (!rows_[y].subset_of(rows_[x])) return false;
  return true;
}

bool Relation::is_antisymmetric() const {
  for (PointIndex x : carrier_)
    for (PointIndex y : rows_[x])
      if (y != x && rows_[y].contains(x)) return false;
  return true;
}

bool operator==(const Relation& a, const Relation& b) {
  return same_universe(a.universe_, b.universe_) && a.carrier_ == b.carrier_ && a.rows_ == b.rows_;
}

Preorder Preorder::identity(UniversePtr universe, PointSet carrier) {
  return Preorder(Relation::identity(std::move(universe), carrier));
}

Preorder Preorder::chaotic(UniversePtr universe, PointSet carrier) {
  return Preorder(Relation::full(std::move(universe), carrier));
}

Preorder Preorder::checked(Relation r) {
  if (!r.is_reflexive()) throw Error(ErrorCode::NotAPreorder, "relation is not reflexive");
  if (!r.is_transitive()) throw Error(ErrorCode::NotAPreorder, "relation is not transitive");
  return Preorder(std::move(r));
}

bool Preorder::is_total() const {
  for (PointIndex x : carrier())
    for (PointIndex y : carrier())
      if (!related(x, y) && !related(y, x)) return false;
  return true;
}

Preorder transitive_reflexive_closure(Relation r) {
  // Warshall over bit rows.
  for (PointIndex x : r.carrier_) r.rows_[x].insert(x);
  for (PointIndex k : r.carrier_)
    for (PointIndex i : r.carrier_)
      if (r.rows_[i].contains(k)) r.rows_[i] |= r.rows_[k];
  return Preorder(std::move(r));
}

Preorder join(std::span<const Preorder> family) {
  if (family.empty()) throw Error(ErrorCode::InvalidArgument, "join of an empty family; use join_on");
  PointSet carrier;
  for (const auto& p : family) carrier |= p.carrier();
  return join_on(family.front().universe(), carrier, family);
}

Preorder join_on(const UniversePtr& universe, PointSet carrier, std::span<const Preorder> family) {
  Relation u(universe, carrier);
  for (const auto& p : family) u.merge(p.relation());
  return transitive_reflexive_closure(std::move(u));
}

Relation product(const Relation& a, const Relation& b, const ProductUniverse& pu) {
  if (pu.first_size != a.universe()->size() || pu.second_size != b.universe()->size())
    throw Error(ErrorCode::CarrierMismatch, "product universe does not match the factors");
  PointSet carrier;
  for (PointIndex i : a.carrier())
    for (PointIndex j : b.carrier()) carrier.insert(pu.at(i, j));
  Relation out(pu.universe, carrier);
  for (auto [x, x2] : a.pairs())
    for (auto [y, y2] : b.pairs()) out.add(pu.at(x, y), pu.at(x2, y2));
  return out;
}

Relation product(const Relation& a, const Relation& b) {
  return product(a, b, make_product_universe(*a.universe(), *b.universe()));
}

Relation product(std::span<const Relation> factors) {
  if (factors.empty()) throw Error(ErrorCode::InvalidArgument, "product of an empty family");
  Relation acc = factors.front();
  for (std::size_t i = 1; i < factors.size(); ++i) acc = product(acc, factors[i]);
  return acc;
}

Preorder product(const Preorder& a, const Preorder& b, const ProductUniverse& pu) {
  // Componentwise order of preorders is again reflexive and transitive.
  return Preorder::checked(product(a.relation(), b.relation(), pu));
}

Relation restrict(const Relation& r, PointSet a) {
  if (!a.subset_of(r.carrier())) throw Error(ErrorCode::InvalidSubset, "restriction to a set outside the carrier");
  Relation out(r.universe(), a);
  for (PointIndex x : a)
    for (PointIndex y : r.successors(x) & a) out.add(x, y);
  return out;
}

Preorder restrict(const Preorder& p, PointSet a) { return Preorder::checked(restrict(p.relation(), a)); }

Relation inverse(const Relation& r) {
  Relation out(r.universe(), r.carrier());
  for (auto [x, y] : r.pairs()) out.add(y, x);
  return out;
}

Preorder inverse(const Preorder& p) { return Preorder::checked(inverse(p.relation())); }

PointSet image_set(const Relation& r, PointIndex x) {
  if (x >= kMaxPoints || !r.carrier().contains(x)) throw Error(ErrorCode::UnknownPoint, "point outside the carrier");
  return r.successors(x);
}

Relation pair_image(const Relation& r, const PointMap& f, UniversePtr target, PointSet target_carrier) {
  Relation out(std::move(target), target_carrier);
  for (auto [x, y] : r.pairs()) out.add(f[x], f[y]);
  return out;
}

Relation pair_preimage(const Relation& r, const PointMap& f, UniversePtr source, PointSet carrier) {
  Relation out(std::move(source), carrier);
  for (PointIndex x : carrier)
    for (PointIndex y : carrier)
      if (r.related(f[x], f[y])) out.add(x, y);
  return out;
}

PointSet bounded_interval(const Preorder& p, PointIndex x, PointIndex y) {
  if (x >= kMaxPoints || y >= kMaxPoints || !p.carrier().contains(x) || !p.carrier().contains(y))
    throw Error(ErrorCode::UnknownPoint, "interval endpoint outside the carrier");
  return p.up(x) & p.down(y);
}

bool is_convex(const Preorder& p, PointSet c) {
  if (!c.subset_of(p.carrier())) throw Error(ErrorCode::InvalidSubset, "convexity test on a set outside the carrier");
  PointSet between;
  for (PointIndex x : c) between |= p.up(x);
  PointSet below;
  for (PointIndex z : c) below |= p.down(z);
  // y lies between two members iff it is above some member and below some member.
  return (between & below).subset_of(c);
}

}  // namespace lps
