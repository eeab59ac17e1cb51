#pragma once

#include <optional>
#include <span>
#include <vector>

#include "lps/circulation.hpp"

namespace lps {

/// Outcome of the stream-map test. When holds is false and continuous is
/// true, x <= y on f^{-1}(open) but f(x), f(y) are unrelated on open.
struct StreamMapCheck {
  bool holds = true;
  bool continuous = true;
  PointSet open;
  PointIndex x = 0;
  PointIndex y = 0;
};

/// Fast mode tests the target's minimal opens only; exhaustive tests all opens.
StreamMapCheck check_stream_map(const Stream& source, const Stream& target, const PointMap& f, Mode mode = Mode::Fast);
bool is_stream_map(const Stream& source, const Stream& target, const PointMap& f, Mode mode = Mode::Fast);

struct StreamMap {
  Stream source;
  Stream target;
  PointMap map;
};
/// Throws NotContinuous / NotAStreamMap.
StreamMap make_stream_map(Stream source, Stream target, PointMap f);
StreamMap identity_map(const Stream& s);
/// g after f. Throws SpaceMismatch if f's target is not g's source.
StreamMap compose(const StreamMap& g, const StreamMap& f);

struct CoconeLeg {
  Stream source;
  PointMap map;
};
/// Join of the pushforwards along the legs; trivial for an empty cocone.
/// Throws NotContinuous.
Stream final_structure(const FiniteSpace& space, std::span<const CoconeLeg> legs);

struct ConeLeg {
  Stream target;
  PointMap map;
};
/// Value on U: pairs of U related, for every leg, on the smallest open
/// containing the image of U. Chaotic for an empty cone.
Precirculation initial_precirculation(const FiniteSpace& space, std::span<const ConeLeg> legs);
/// Cosheafification of initial_precirculation. Throws NotContinuous.
Stream initial_structure(const FiniteSpace& space, std::span<const ConeLeg> legs);

struct ProductStream {
  Stream stream;
  PointMap first;
  PointMap second;
  ProductUniverse universe;
};
/// Value on W: the product of the values on the projections of W, restricted to W.
Precirculation product_precirculation(const Stream& s, const Stream& t, const ProductSpace& ps);
ProductStream product_stream(const Stream& s, const Stream& t);

/// Box opens U x V on which the product value differs from the product of
/// the factor values.
struct BoxMismatch {
  PointSet first_open;
  PointSet second_open;
};
std::vector<BoxMismatch> product_box_diagnostic(const ProductStream& p, const Stream& s, const Stream& t);

struct SubstreamResult {
  Stream stream;
  PointMap inclusion;
};
/// Cosheafified pullback along the inclusion. Throws InvalidSubset.
SubstreamResult substream(const Stream& s, PointSet a);

struct QuotientStream {
  Stream stream;
  PointMap projection;
};
/// Pushforward along the quotient projection. Throws InvalidPartition.
QuotientStream quotient_stream(const Stream& s, std::span<const PointSet> classes);

struct CoproductStream {
  Stream stream;
  std::vector<PointMap> injections;
};
CoproductStream coproduct_stream(std::span<const Stream> family);

struct StreamDiagram {
  struct Arrow {
    std::size_t source = 0;
    std::size_t target = 0;
    PointMap map;
  };
  std::vector<Stream> objects;
  std::vector<Arrow> arrows;
};
/// Throws IllTypedDiagram unless every arrow is a stream map between listed objects.
void validate_diagram(const StreamDiagram& d);

/// Apex and one leg per object (apex -> object for limits, object -> apex
/// for colimits).
struct ConeResult {
  Stream apex;
  std::vector<PointMap> legs;
};
/// Compatible tuples with the subspace-of-product topology and the initial
/// structure of the projections. A single object keeps its point names;
/// otherwise points are named "(x0,x1,...)".
ConeResult limit(const StreamDiagram& d);
/// Quotient of the coproduct by the arrows with the final structure of the
/// coprojections.
ConeResult colimit(const StreamDiagram& d);

/// For a family whose members include a neighborhood of each point of the
/// union: value on the union = join of substream values = join of
/// restrictions of the value on the union. Throws NeighborhoodConditionFailed.
bool check_pseudo_circulation(const Stream& s, std::span<const PointSet> family);

/// A bijection of points carrying topology and circulation onto each other.
std::optional<PointMap> find_isomorphism(const Stream& a, const Stream& b);

}  // namespace lps
