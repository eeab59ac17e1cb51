#include "lps/models.hpp"

#include <cassert>
#include <string>

#include "lps/error.hpp"

namespace lps {

namespace {

std::string v(int i) { return "v" + std::to_string(i); }
std::string e(int i) { return "e" + std::to_string(i); }

/// Stream whose vertex stars carry the chain in_edge <= vertex <= out_edge.
Stream from_vertex_stars(const std::vector<std::string>& names,
                         const std::vector<std::pair<std::string, std::vector<std::string>>>& stars) {
  std::vector<std::pair<std::string, std::vector<std::string>>> table;
  for (const auto& n : names) table.push_back({n, {n}});
  for (const auto& [vertex, chain] : stars)
    for (auto& entry : table)
      if (entry.first == vertex) entry.second = chain;
  FiniteSpace space = FiniteSpace::from_named(names, table);
  const auto& u = space.universe();
  std::vector<Preorder> gen;
  for (PointIndex x = 0; x < space.size(); ++x) {
    Relation r(u, space.min_open(x));
    for (const auto& [vertex, chain] : stars)
      if (vertex == space.name(x))
        for (std::size_t k = 0; k + 1 < chain.size(); ++k) r.add(u->index_of(chain[k]), u->index_of(chain[k + 1]));
    gen.push_back(transitive_reflexive_closure(std::move(r)));
  }
  return Stream(Circulation::from_generators(std::move(space), std::move(gen)));
}

}  // namespace

Stream directed_interval(int n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "directed interval needs n >= 1");
  std::vector<std::string> names;
  for (int i = 0; i <= n; ++i) names.push_back(v(i));
  for (int i = 1; i <= n; ++i) names.push_back(e(i));
  std::vector<std::pair<std::string, std::vector<std::string>>> stars;
  for (int i = 0; i <= n; ++i) {
    std::vector<std::string> chain;
    if (i > 0) chain.push_back(e(i));
    chain.push_back(v(i));
    if (i < n) chain.push_back(e(i + 1));
    stars.push_back({v(i), chain});
  }
  return from_vertex_stars(names, stars);
}

Stream directed_circle_via_quotient(int n) {
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "directed circle needs n >= 2");
  Stream interval = directed_interval(n);
  const auto& u = interval.space().universe();
  std::vector<PointSet> classes;
  for (PointIndex i = 0; i < u->size(); ++i)
    if (u->name(i) != v(0) && u->name(i) != v(n)) classes.push_back(PointSet::singleton(i));
  PointSet ends = PointSet::singleton(u->index_of(v(0)));
  ends.insert(u->index_of(v(n)));
  classes.push_back(ends);
  return quotient_stream(interval, classes).stream;
}

Stream directed_circle(int n) {
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "directed circle needs n >= 2");
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back(v(i));
  for (int i = 1; i <= n; ++i) names.push_back(e(i));
  std::vector<std::pair<std::string, std::vector<std::string>>> stars;
  for (int i = 0; i < n; ++i) stars.push_back({v(i), {e(i == 0 ? n : i), v(i), e(i + 1)}});
  Stream direct = from_vertex_stars(names, stars);
  assert(direct == directed_circle_via_quotient(n));
  return direct;
}

Stream directed_square(int n, int m) { return product_stream(directed_interval(n), directed_interval(m)).stream; }

Stream boundary_square(int n) {
  Stream square = directed_square(n, n);
  const auto& u = square.space().universe();
  PointSet boundary;
  for (const std::string& a : {v(0), v(n)})
    for (PointIndex i = 0; i < u->size(); ++i) {
      const std::string& name = u->name(i);
      // names are "(p,q)"
      auto comma = name.find(',');
      std::string p = name.substr(1, comma - 1);
      std::string q = name.substr(comma + 1, name.size() - comma - 2);
      if (p == a || q == a) boundary.insert(i);
    }
  return substream(square, boundary).stream;
}

Stream stream_from_poset(const Preorder& order) {
  if (!order.is_antisymmetric()) throw Error(ErrorCode::NotAntisymmetric, "poset stream needs a partial order");
  const auto& src = *order.universe();
  auto u = Universe::make(src.names_of(order.carrier()));
  std::vector<PointSet> table(u->size());
  for (PointIndex x : order.carrier())
    for (PointIndex y : order.up(x)) table[u->index_of(src.name(x))].insert(u->index_of(src.name(y)));
  return Stream(specialization_circulation(FiniteSpace::from_min_opens(std::move(u), std::move(table))));
}

Precirculation atlas_precirculation(const FiniteSpace& space, std::span<const Chart> charts) {
  PointSet covered;
  for (const auto& c : charts) {
    space.require_open(c.open);
    if (!same_universe(c.order.universe(), space.universe()) || c.order.carrier() != c.open)
      throw Error(ErrorCode::CarrierMismatch, "chart order must live on its open set");
    if (!c.order.is_antisymmetric()) throw Error(ErrorCode::ChartNotPartialOrder, "chart order is not antisymmetric");
    covered |= c.open;
  }
  if (covered != space.points()) throw Error(ErrorCode::NotACover, "charts do not cover the space");
  // On the basis of minimal opens the charts must agree.
  std::vector<Preorder> basis;
  for (PointIndex x = 0; x < space.size(); ++x) {
    std::optional<Preorder> value;
    for (const auto& c : charts) {
      if (!c.open.contains(x)) continue;
      Preorder r = restrict(c.order, space.min_open(x));
      if (!value) value = r;
      else if (!(*value == r))
        throw Error(ErrorCode::IncompatibleCharts, "charts disagree on the minimal open of '" + space.name(x) + "'");
    }
    basis.push_back(*value);
  }
  auto universe = space.universe();
  return Precirculation(space, [basis = std::move(basis), universe](PointSet u) {
    Relation r(universe, u);
    for (PointIndex x : u) r.merge(basis[x].relation());
    return transitive_reflexive_closure(std::move(r));
  });
}

Stream stream_from_atlas(const FiniteSpace& space, std::span<const Chart> charts) {
  return Stream(cosheafify(atlas_precirculation(space, charts)));
}

Stream point_stream() { return Stream(trivial_circulation(FiniteSpace::discrete(Universe::make({"*"})))); }

Stream empty_stream() { return Stream(trivial_circulation(FiniteSpace::empty())); }

Stream sierpinski_stream() {
  auto u = Universe::make({"a", "b"});
  Relation r = Relation::identity(u, u->all());
  r.add(u->index_of("a"), u->index_of("b"));
  return stream_from_poset(Preorder::checked(std::move(r)));
}

PathologyFixture pathology_fixture() {
  Stream square = directed_square(1, 1);
  const auto& u = square.space().universe();
  PointSet corners;
  corners.insert(u->index_of("(v0,v0)"));
  corners.insert(u->index_of("(v1,v1)"));
  Subspace sub = subspace(square.space(), corners);
  Precirculation pb = pullback(Precirculation::of(square.circulation()), sub.inclusion, sub.space);
  return {std::move(square), std::move(sub), std::move(pb)};
}

}  // namespace lps
