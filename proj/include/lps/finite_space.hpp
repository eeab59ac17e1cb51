#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lps/point_set.hpp"
#include "lps/relation.hpp"
#include "lps/universe.hpp"

namespace lps {

/// A finite topological space, held as the minimal open neighborhood of each
/// point. A set is open iff it is the union of the minimal opens of its points.
class FiniteSpace {
 public:
  /// Validates x in U_x and y in U_x => U_y subset of U_x.
  /// Throws MissingPoint / NotMinimal (naming the offending pair).
  static FiniteSpace from_min_opens(UniversePtr universe, std::vector<PointSet> min_open);
  /// Named form; every point needs an entry.
  static FiniteSpace from_named(std::vector<std::string> points,
                                const std::vector<std::pair<std::string, std::vector<std::string>>>& min_open);
  static FiniteSpace discrete(UniversePtr universe);
  static FiniteSpace empty();

  const UniversePtr& universe() const { return universe_; }
  std::size_t size() const { return min_open_.size(); }
  PointSet points() const { return universe_->all(); }
  const std::string& name(PointIndex i) const { return universe_->name(i); }
  PointSet min_open(PointIndex x) const { return min_open_[x]; }
  const std::vector<PointSet>& min_opens() const { return min_open_; }

  /// Throws UnknownPoint if s leaves the space.
  void require_subset(PointSet s) const;
  /// Throws NotOpen.
  void require_open(PointSet u) const;

  bool is_open(PointSet u) const;
  /// Union of minimal opens: the smallest open set containing s.
  PointSet open_hull(PointSet s) const;
  PointSet interior(PointSet a) const;
  PointSet closure(PointSet a) const;
  /// All open sets, ascending by bit mask. Throws CapacityExceeded past max_count.
  std::vector<PointSet> opens(std::size_t max_count = 1U << 20) const;
  bool is_t0() const;

  friend bool operator==(const FiniteSpace& a, const FiniteSpace& b) {
    return same_universe(a.universe_, b.universe_) && a.min_open_ == b.min_open_;
  }

 private:
  FiniteSpace(UniversePtr u, std::vector<PointSet> m) : universe_(std::move(u)), min_open_(std::move(m)) {}
  UniversePtr universe_;
  std::vector<PointSet> min_open_;
};

/// x <= y iff y lies in the minimal open of x.
Preorder specialization_preorder(const FiniteSpace& x);

/// Throws InvalidArgument if f is not a total map into target.
void require_point_map(const PointMap& f, const FiniteSpace& source, const FiniteSpace& target);
/// Preimage of every open is open.
bool is_continuous_by_opens(const PointMap& f, const FiniteSpace& source, const FiniteSpace& target);
/// Monotone for the specialization preorders.
bool is_continuous_by_specialization(const PointMap& f, const FiniteSpace& source, const FiniteSpace& target);
/// Both criteria; they agree on finite spaces.
bool is_continuous(const PointMap& f, const FiniteSpace& source, const FiniteSpace& target);
void require_continuous(const PointMap& f, const FiniteSpace& source, const FiniteSpace& target);
bool is_open_map(const PointMap& f, const FiniteSpace& source, const FiniteSpace& target);

/// Connectedness of a as a subspace, via the comparability graph of the
/// specialization preorder restricted to a. The empty set counts as connected.
bool is_connected(const FiniteSpace& x, PointSet a);

struct ProductSpace {
  FiniteSpace space;
  ProductUniverse universe;
};
ProductSpace product_space(const FiniteSpace& x, const FiniteSpace& y);

struct CoproductSpace {
  FiniteSpace space;
  std::vector<PointMap> injections;
};
/// Points are tagged "<i>:<name>".
CoproductSpace coproduct_space(std::span<const FiniteSpace> family);

struct Subspace {
  FiniteSpace space;
  PointMap inclusion;
};
/// Points keep their names; U^A_a = A intersect U_a.
Subspace subspace(const FiniteSpace& x, PointSet a);

struct QuotientSpace {
  FiniteSpace space;
  PointMap projection;
};
/// classes must partition the points; each class is named after its least member.
QuotientSpace quotient_space(const FiniteSpace& x, std::span<const PointSet> classes);
/// Classes given as a class label per point (labels need not be contiguous).
QuotientSpace quotient_space_by_labels(const FiniteSpace& x, const std::vector<std::size_t>& label);

}  // namespace lps
