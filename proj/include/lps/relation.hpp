#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "lps/point_set.hpp"
#include "lps/universe.hpp"

namespace lps {

class Preorder;
class Relation;
Preorder transitive_reflexive_closure(Relation r);

/// A relation: a carrier (subset of a universe) and a graph contained in
/// carrier x carrier, stored as one successor row per point.
class Relation {
 public:
  Relation(UniversePtr universe, PointSet carrier);

  static Relation identity(UniversePtr universe, PointSet carrier);
  static Relation full(UniversePtr universe, PointSet carrier);
  /// Throws UnknownPoint if a pair leaves the carrier.
  static Relation from_pairs(UniversePtr universe, PointSet carrier,
                             std::span<const std::pair<PointIndex, PointIndex>> pairs);

  const UniversePtr& universe() const { return universe_; }
  PointSet carrier() const { return carrier_; }

  bool related(PointIndex x, PointIndex y) const { return successors(x).contains(y); }
  /// R[x]; empty outside the carrier.
  PointSet successors(PointIndex x) const { return x < rows_.size() ? rows_[x] : PointSet(); }
  PointSet predecessors(PointIndex y) const;

  /// Throws UnknownPoint if either point lies outside the carrier.
  void add(PointIndex x, PointIndex y);
  /// Union of graphs; other must live in the same universe with carrier inside ours.
  void merge(const Relation& other);

  std::size_t pair_count() const;
  /// Pairs in lexicographic index order.
  std::vector<std::pair<PointIndex, PointIndex>> pairs() const;

  bool graph_subset_of(const Relation& other) const;
  bool is_reflexive() const;
  bool is_transitive() const;
  bool is_antisymmetric() const;

  friend bool operator==(const Relation& a, const Relation& b);

 private:
  friend class Preorder;
  friend Preorder transitive_reflexive_closure(Relation r);
  UniversePtr universe_;
  PointSet carrier_;
  std::vector<PointSet> rows_;
};

/// A reflexive, transitive relation. Only constructible through operations
/// that establish the invariant.
class Preorder {
 public:
  static Preorder identity(UniversePtr universe, PointSet carrier);
  static Preorder chaotic(UniversePtr universe, PointSet carrier);
  /// Throws NotAPreorder.
  static Preorder checked(Relation r);

  const Relation& relation() const { return rel_; }
  const UniversePtr& universe() const { return rel_.universe(); }
  PointSet carrier() const { return rel_.carrier(); }
  bool related(PointIndex x, PointIndex y) const { return rel_.related(x, y); }
  PointSet up(PointIndex x) const { return rel_.successors(x); }
  PointSet down(PointIndex y) const { return rel_.predecessors(y); }
  std::size_t pair_count() const { return rel_.pair_count(); }
  std::vector<std::pair<PointIndex, PointIndex>> pairs() const { return rel_.pairs(); }
  bool graph_subset_of(const Preorder& o) const { return rel_.graph_subset_of(o.rel_); }
  bool is_antisymmetric() const { return rel_.is_antisymmetric(); }
  /// Every two carrier points are comparable.
  bool is_total() const;

  friend bool operator==(const Preorder& a, const Preorder& b) { return a.rel_ == b.rel_; }

 private:
  explicit Preorder(Relation r) : rel_(std::move(r)) {}
  friend Preorder transitive_reflexive_closure(Relation r);
  Relation rel_;
};

/// Smallest preorder on r's carrier whose graph contains r's graph.
class Relation;
Preorder transitive_reflexive_closure(Relation r);

/// Join of a non-empty family sharing a universe: closure of the union of the
/// graphs on the union of the carriers. Throws InvalidArgument on an empty family.
Preorder join(std::span<const Preorder> family);
/// Join with an explicit carrier containing every member's carrier; an empty
/// family yields the identity on the carrier.
Preorder join_on(const UniversePtr& universe, PointSet carrier, std::span<const Preorder> family);

/// Componentwise product over the product universe.
Relation product(const Relation& a, const Relation& b, const ProductUniverse& pu);
Relation product(const Relation& a, const Relation& b);
/// Left-nested product of an ordered family: ((r0 x r1) x r2) ...
Relation product(std::span<const Relation> factors);
Preorder product(const Preorder& a, const Preorder& b, const ProductUniverse& pu);

/// Throws InvalidSubset unless a lies inside the carrier.
Relation restrict(const Relation& r, PointSet a);
Preorder restrict(const Preorder& p, PointSet a);
Relation inverse(const Relation& r);
Preorder inverse(const Preorder& p);
/// R[x]; throws UnknownPoint outside the carrier.
PointSet image_set(const Relation& r, PointIndex x);

/// (f x f)(graph r), as a relation on target_carrier of the target universe.
Relation pair_image(const Relation& r, const PointMap& f, UniversePtr target, PointSet target_carrier);
/// (f x f)^{-1}(graph r) intersected with carrier x carrier.
Relation pair_preimage(const Relation& r, const PointMap& f, UniversePtr source, PointSet carrier);

/// Up-set of x intersected with down-set of y.
PointSet bounded_interval(const Preorder& p, PointIndex x, PointIndex y);
bool is_convex(const Preorder& p, PointSet c);

}  // namespace lps
