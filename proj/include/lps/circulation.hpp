#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lps/finite_space.hpp"
#include "lps/relation.hpp"

namespace lps {

// Circulations on a finite space are stored only through their values on
// minimal opens. Every cover of an open W is refined by the cover of W by
// minimal opens, so the cosheaf condition forces the value on W to be the
// join of the generators of its points.

/// A circulation: one preorder per point, on that point's minimal open,
/// saturated so that gen(x) is the join of gen(y) over y in U_x.
class Circulation {
 public:
  /// generators[x] must be a preorder on min_open(x); the result is their
  /// saturation. Throws CarrierMismatch.
  static Circulation from_generators(FiniteSpace space, std::vector<Preorder> generators);

  const FiniteSpace& space() const { return space_; }
  const Preorder& on_min_open(PointIndex x) const { return gen_[x]; }
  const std::vector<Preorder>& generators() const { return gen_; }
  /// Join of the generators of U's points. Throws NotOpen.
  Preorder on_open(PointSet u) const;
  Preorder underlying() const { return on_open(space_.points()); }

  friend bool operator==(const Circulation& a, const Circulation& b) {
    return a.space_ == b.space_ && a.gen_ == b.gen_;
  }

 private:
  Circulation(FiniteSpace s, std::vector<Preorder> g) : space_(std::move(s)), gen_(std::move(g)) {}
  FiniteSpace space_;
  std::vector<Preorder> gen_;
};

/// A space equipped with a circulation.
class Stream {
 public:
  explicit Stream(Circulation c) : circ_(std::move(c)) {}

  const FiniteSpace& space() const { return circ_.space(); }
  const Circulation& circulation() const { return circ_; }
  std::size_t size() const { return circ_.space().size(); }
  Preorder on_open(PointSet u) const { return circ_.on_open(u); }
  Preorder underlying() const { return circ_.underlying(); }

  friend bool operator==(const Stream& a, const Stream& b) { return a.circ_ == b.circ_; }

 private:
  Circulation circ_;
};

/// A monotone assignment of preorders to open sets, evaluated lazily and
/// memoized. Copies share the memo; lookups are safe from several threads.
class Precirculation {
 public:
  using Assign = std::function<Preorder(PointSet)>;

  Precirculation(FiniteSpace space, Assign assign);
  static Precirculation of(const Circulation& c);
  /// Values on a declared family of opens; any other open U receives the
  /// closure of the union of stored values on members inside U. exact() is
  /// true only when the family lists every open of the space.
  static Precirculation from_table(FiniteSpace space, std::vector<std::pair<PointSet, Preorder>> table);

  const FiniteSpace& space() const { return space_; }
  /// Throws NotOpen.
  Preorder assign(PointSet u) const;
  bool exact() const { return exact_; }

 private:
  struct Memo;
  FiniteSpace space_;
  std::shared_ptr<Memo> memo_;
  bool exact_ = true;
};

enum class Mode { Fast, Exhaustive };

/// Outcome of testing the cosheaf condition. On failure, collection is the
/// witnessing family of opens and (x, y) the least pair on which the value on
/// its union and the join of its values disagree.
struct CosheafCheck {
  bool holds = true;
  std::vector<PointSet> collection;
  PointIndex x = 0;
  PointIndex y = 0;
  /// True when (x, y) is in the value on the union but missing from the join.
  bool pair_in_union = false;
};

/// Fast mode tests only covers by minimal opens, which is sufficient for
/// monotone assignments; exhaustive mode tests every collection of opens.
CosheafCheck is_circulation(const Precirculation& pc, Mode mode = Mode::Fast);
/// Monotone in graph inclusion over every pair of nested opens.
bool is_precirculation(const Precirculation& pc);

Circulation trivial_circulation(const FiniteSpace& space);
Circulation specialization_circulation(const FiniteSpace& space);
/// The circulation "occupying a common compact Hausdorff connected subspace".
/// On a finite space such subspaces are single points, so this is the trivial
/// circulation.
Circulation connected_hausdorff_circulation(const FiniteSpace& space);

/// Pointwise join of a non-empty family on one space. Throws SpaceMismatch.
Circulation join_circulations(std::span<const Circulation> family);

/// Largest circulation pointwise below pc. Reads pc only on minimal opens.
Circulation cosheafify(const Precirculation& pc);

/// Value on an open U of Y: closure of (f x f)(value on f^{-1}U).
Precirculation pushforward_precirculation(const Precirculation& pc, const PointMap& f, const FiniteSpace& target);
/// Throws NotContinuous.
Circulation pushforward(const Stream& s, const PointMap& f, const FiniteSpace& target);
/// Value on an open U of X: pairs of U whose images are related on the
/// smallest open containing f(U). Throws NotContinuous.
Precirculation pullback(const Precirculation& pc, const PointMap& f, const FiniteSpace& source);

Preorder underlying_preorder(const Stream& s);

/// x = points[0] <=_{label[0]} points[1] <=_{label[1]} ... = y with
/// alternating labels (0 for U, 1 for V).
struct AlternatingChain {
  std::vector<PointIndex> points;
  std::vector<int> labels;
  std::size_t length() const { return labels.size(); }
};
/// Minimal-length certificate of x <=_{U u V} y. Throws NotOpen / NotRelated.
AlternatingChain alternating_witness(const Stream& s, PointSet u, PointSet v, PointIndex x, PointIndex y);
bool validate_alternating_witness(const Stream& s, PointSet u, PointSet v, const AlternatingChain& chain);

/// Steps through minimal opens inside U; step_star[i] is the point whose
/// minimal open certifies step i.
struct StarChain {
  std::vector<PointIndex> points;
  std::vector<PointIndex> step_star;
};
/// Minimal-length chain certifying x <=_U y. Throws NotOpen / NotRelated.
StarChain star_chain_witness(const Stream& s, PointSet u, PointIndex x, PointIndex y);

struct IntervalCheck {
  bool holds = true;
  PointIndex x = 0;
  PointIndex y = 0;
  PointSet interval;
};
/// Every bounded interval of the value on the whole space has connected closure.
IntervalCheck check_connected_intervals(const Precirculation& pc);
IntervalCheck check_connected_intervals(const Stream& s);

struct ConvexRestrictionCheck {
  bool holds = true;
  PointSet failing_open;
};
/// For convex A: (value on U) restricted to A equals the underlying preorder
/// restricted to A, for every open U containing the closure of A. Throws NotConvex.
ConvexRestrictionCheck check_convex_restriction(const Stream& s, PointSet a);

struct AntisymmetryCheck {
  bool t0 = false;
  bool convex_neighborhoods = false;  // every minimal open is convex
  bool antisymmetric = false;
  bool holds() const { return !(t0 && convex_neighborhoods) || antisymmetric; }
};
/// A T0 stream whose points have convex neighborhood bases has an
/// antisymmetric underlying preorder.
AntisymmetryCheck check_antisymmetry(const Stream& s);

struct ConvexGenerationCheck {
  bool applicable = false;
  bool holds = true;
};
/// When every point of the open U has a convex neighborhood whose closure
/// lies in U: value on U equals the join of underlying restrictions to convex
/// sets with closure in U. Throws NotOpen; CapacityExceeded past 20 points in U.
ConvexGenerationCheck check_convex_generation(const Stream& s, PointSet u);

}  // namespace lps
