#pragma once

#include <vector>

#include "lps/circulation.hpp"
#include "lps/stream_cat.hpp"

namespace lps {

/// Points v0, e1, v1, ..., en, vn. Edges are open points, vertices closed;
/// the star of v_i carries e_i <= v_i <= e_{i+1}. Throws InvalidArgument for n < 1.
Stream directed_interval(int n);

/// Points v0..v_{n-1}, e1..en with e_i running from v_{i-1} to v_i (indices
/// mod n), built from oriented vertex stars. Identical to the endpoint
/// quotient of directed_interval(n). Throws InvalidArgument for n < 2.
Stream directed_circle(int n);
/// Pushforward of directed_interval(n) along the quotient identifying v0 and vn.
Stream directed_circle_via_quotient(int n);

/// Product of directed_interval(n) and directed_interval(m).
Stream directed_square(int n, int m);
/// Substream of directed_square(n, n) on points with a coordinate in {v0, vn}.
Stream boundary_square(int n);

/// Alexandrov space of a partial order (minimal open = up-set) with its
/// specialization circulation. Throws NotAntisymmetric.
Stream stream_from_poset(const Preorder& order);

struct Chart {
  PointSet open;
  Preorder order;  // partial order on open
};
/// Cosheafification of the precirculation the atlas induces on the basis of
/// minimal opens. Throws NotOpen / NotACover / ChartNotPartialOrder /
/// IncompatibleCharts.
Stream stream_from_atlas(const FiniteSpace& space, std::span<const Chart> charts);
Precirculation atlas_precirculation(const FiniteSpace& space, std::span<const Chart> charts);

Stream point_stream();
Stream empty_stream();
/// The two-point chain a <= b: minimal opens a -> {a,b}, b -> {b}.
Stream sierpinski_stream();

/// Finite counterpart of a pullback that fails the cosheaf condition: the
/// directed square(1,1) relates its corners (v0,v0) and (v1,v1) only through
/// opens containing the centre (e1,e1), while the pullback to the discrete
/// two-corner subspace still relates them.
struct PathologyFixture {
  Stream square;
  Subspace corners;
  Precirculation pullback;
};
PathologyFixture pathology_fixture();

}  // namespace lps
