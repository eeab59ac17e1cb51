#include "lps/stream_cat.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "lps/error.hpp"

namespace lps {

StreamMapCheck check_stream_map(const Stream& source, const Stream& target, const PointMap& f, Mode mode) {
  StreamMapCheck out;
  if (!is_continuous(f, source.space(), target.space())) {
    out.holds = false;
    out.continuous = false;
    return out;
  }
  auto test = [&](PointSet u, const Preorder& value) {
    Preorder up = source.on_open(preimage(f, u));
    for (auto [a, b] : up.pairs())
      if (!value.related(f[a], f[b])) {
        out.holds = false;
        out.open = u;
        out.x = a;
        out.y = b;
        return false;
      }
    return true;
  };
  if (mode == Mode::Fast) {
    for (PointIndex y = 0; y < target.size(); ++y)
      if (!test(target.space().min_open(y), target.circulation().on_min_open(y))) return out;
  } else {
    for (PointSet u : target.space().opens())
      if (!test(u, target.on_open(u))) return out;
  }
  return out;
}

bool is_stream_map(const Stream& source, const Stream& target, const PointMap& f, Mode mode) {
  return check_stream_map(source, target, f, mode).holds;
}

StreamMap make_stream_map(Stream source, Stream target, PointMap f) {
  require_point_map(f, source.space(), target.space());
  StreamMapCheck c = check_stream_map(source, target, f);
  if (!c.continuous) throw Error(ErrorCode::NotContinuous, "point map is not continuous");
  if (!c.holds)
    throw Error(ErrorCode::NotAStreamMap, source.space().name(c.x) + " <= " + source.space().name(c.y) +
                                              " is not preserved");
  return {std::move(source), std::move(target), std::move(f)};
}

StreamMap identity_map(const Stream& s) { return {s, s, identity_point_map(s.size())}; }

StreamMap compose(const StreamMap& g, const StreamMap& f) {
  if (!(f.target == g.source)) throw Error(ErrorCode::SpaceMismatch, "composing maps whose ends do not meet");
  return {f.source, g.target, lps::compose(g.map, f.map)};
}

// ---------------------------------------------------------------------------
// Final and initial structures

Stream final_structure(const FiniteSpace& space, std::span<const CoconeLeg> legs) {
  if (legs.empty()) return Stream(trivial_circulation(space));
  std::vector<Circulation> pushed;
  for (const auto& leg : legs) pushed.push_back(pushforward(leg.source, leg.map, space));
  return Stream(join_circulations(pushed));
}

Precirculation initial_precirculation(const FiniteSpace& space, std::span<const ConeLeg> legs) {
  std::vector<Precirculation> targets;
  for (const auto& leg : legs) {
    require_continuous(leg.map, space, leg.target.space());
    targets.push_back(Precirculation::of(leg.target.circulation()));
  }
  std::vector<ConeLeg> kept(legs.begin(), legs.end());
  auto universe = space.universe();
  return Precirculation(space, [kept = std::move(kept), targets = std::move(targets), universe](PointSet u) {
    Relation r = Relation::full(universe, u);
    for (std::size_t i = 0; i < kept.size(); ++i) {
      PointSet v = kept[i].target.space().open_hull(image(kept[i].map, u));
      Relation pulled = pair_preimage(targets[i].assign(v).relation(), kept[i].map, universe, u);
      Relation meet(universe, u);
      for (PointIndex x : u)
        for (PointIndex y : r.successors(x) & pulled.successors(x)) meet.add(x, y);
      r = std::move(meet);
    }
    return Preorder::checked(std::move(r));
  });
}

Stream initial_structure(const FiniteSpace& space, std::span<const ConeLeg> legs) {
  return Stream(cosheafify(initial_precirculation(space, legs)));
}

// ---------------------------------------------------------------------------
// Products, substreams, quotients, coproducts

Precirculation product_precirculation(const Stream& s, const Stream& t, const ProductSpace& ps) {
  ProductUniverse pu = ps.universe;
  return Precirculation(ps.space, [s, t, pu](PointSet w) {
    Preorder box = product(s.on_open(image(pu.first, w)), t.on_open(image(pu.second, w)), pu);
    return restrict(box, w);
  });
}

ProductStream product_stream(const Stream& s, const Stream& t) {
  ProductSpace ps = product_space(s.space(), t.space());
  Circulation c = cosheafify(product_precirculation(s, t, ps));
  PointMap first = ps.universe.first;
  PointMap second = ps.universe.second;
  return {Stream(std::move(c)), std::move(first), std::move(second), std::move(ps.universe)};
}

std::vector<BoxMismatch> product_box_diagnostic(const ProductStream& p, const Stream& s, const Stream& t) {
  std::vector<BoxMismatch> out;
  for (PointSet u : s.space().opens())
    for (PointSet v : t.space().opens()) {
      if (u.empty() || v.empty()) continue;
      PointSet w;
      for (PointIndex i : u)
        for (PointIndex j : v) w.insert(p.universe.at(i, j));
      if (!(p.stream.on_open(w) == product(s.on_open(u), t.on_open(v), p.universe))) out.push_back({u, v});
    }
  return out;
}

SubstreamResult substream(const Stream& s, PointSet a) {
  Subspace sub = subspace(s.space(), a);
  Circulation c = cosheafify(pullback(Precirculation::of(s.circulation()), sub.inclusion, sub.space));
  return {Stream(std::move(c)), std::move(sub.inclusion)};
}

QuotientStream quotient_stream(const Stream& s, std::span<const PointSet> classes) {
  QuotientSpace q = quotient_space(s.space(), classes);
  Circulation c = pushforward(s, q.projection, q.space);
  return {Stream(std::move(c)), std::move(q.projection)};
}

CoproductStream coproduct_stream(std::span<const Stream> family) {
  std::vector<FiniteSpace> spaces;
  for (const auto& s : family) spaces.push_back(s.space());
  CoproductSpace cs = coproduct_space(spaces);
  std::vector<Preorder> gen(cs.space.size(), Preorder::identity(cs.space.universe(), PointSet()));
  for (std::size_t i = 0; i < family.size(); ++i)
    for (PointIndex p = 0; p < family[i].size(); ++p) {
      const PointMap& inj = cs.injections[i];
      PointIndex k = inj[p];
      gen[k] = transitive_reflexive_closure(
          pair_image(family[i].circulation().on_min_open(p).relation(), inj, cs.space.universe(), cs.space.min_open(k)));
    }
  return {Stream(Circulation::from_generators(cs.space, std::move(gen))), std::move(cs.injections)};
}

// ---------------------------------------------------------------------------
// Limits and colimits

void validate_diagram(const StreamDiagram& d) {
  for (std::size_t i = 0; i < d.arrows.size(); ++i) {
    const auto& a = d.arrows[i];
    if (a.source >= d.objects.size() || a.target >= d.objects.size())
      throw Error(ErrorCode::IllTypedDiagram, "arrow " + std::to_string(i) + " names a missing object");
    const Stream& s = d.objects[a.source];
    const Stream& t = d.objects[a.target];
    if (a.map.size() != s.size() ||
        std::any_of(a.map.begin(), a.map.end(), [&](PointIndex p) { return p >= t.size(); }))
      throw Error(ErrorCode::IllTypedDiagram, "arrow " + std::to_string(i) + " is not a map between its objects");
    if (!is_stream_map(s, t, a.map)) throw Error(ErrorCode::IllTypedDiagram, "arrow " + std::to_string(i) + " is not a stream map");
  }
}

ConeResult limit(const StreamDiagram& d) {
  validate_diagram(d);
  const std::size_t n = d.objects.size();
  std::vector<std::vector<PointIndex>> tuples;
  std::vector<PointIndex> current(n);
  std::function<void(std::size_t)> extend = [&](std::size_t i) {
    if (i == n) {
      tuples.push_back(current);
      if (tuples.size() > kMaxPoints) throw Error(ErrorCode::CapacityExceeded, "limit has more than 64 points");
      return;
    }
    for (PointIndex p = 0; p < d.objects[i].size(); ++p) {
      current[i] = p;
      bool ok = true;
      for (const auto& a : d.arrows) {
        std::size_t hi = std::max(a.source, a.target);
        if (hi == i && a.map[current[a.source]] != current[a.target]) {
          ok = false;
          break;
        }
      }
      if (ok) extend(i + 1);
    }
  };
  extend(0);

  auto name_of = [&](const std::vector<PointIndex>& t) {
    if (n == 1) return d.objects[0].space().name(t[0]);
    std::vector<std::string> parts;
    for (std::size_t i = 0; i < n; ++i) parts.push_back(d.objects[i].space().name(t[i]));
    return tuple_name(parts);
  };
  std::vector<std::string> names;
  for (const auto& t : tuples) names.push_back(name_of(t));
  auto u = Universe::make(names);
  std::vector<std::vector<PointIndex>> by_index(u->size());
  for (const auto& t : tuples) by_index[u->index_of(name_of(t))] = t;

  std::vector<PointSet> table(u->size());
  for (PointIndex a = 0; a < u->size(); ++a)
    for (PointIndex b = 0; b < u->size(); ++b) {
      bool inside = true;
      for (std::size_t i = 0; i < n; ++i)
        if (!d.objects[i].space().min_open(by_index[a][i]).contains(by_index[b][i])) inside = false;
      if (inside) table[a].insert(b);
    }
  FiniteSpace space = FiniteSpace::from_min_opens(u, std::move(table));
  std::vector<PointMap> legs(n, PointMap(u->size()));
  std::vector<ConeLeg> cone;
  for (std::size_t i = 0; i < n; ++i) {
    for (PointIndex a = 0; a < u->size(); ++a) legs[i][a] = by_index[a][i];
    cone.push_back({d.objects[i], legs[i]});
  }
  return {initial_structure(space, cone), std::move(legs)};
}

ConeResult colimit(const StreamDiagram& d) {
  validate_diagram(d);
  std::vector<FiniteSpace> spaces;
  for (const auto& s : d.objects) spaces.push_back(s.space());
  CoproductSpace cs = coproduct_space(spaces);
  std::vector<std::size_t> parent(cs.space.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  for (const auto& a : d.arrows)
    for (PointIndex p = 0; p < a.map.size(); ++p)
      parent[find(cs.injections[a.source][p])] = find(cs.injections[a.target][a.map[p]]);
  std::vector<std::size_t> label(cs.space.size());
  for (std::size_t k = 0; k < label.size(); ++k) label[k] = find(k);
  QuotientSpace q = quotient_space_by_labels(cs.space, label);
  std::vector<PointMap> legs;
  std::vector<CoconeLeg> cocone;
  for (std::size_t i = 0; i < d.objects.size(); ++i) {
    legs.push_back(lps::compose(q.projection, cs.injections[i]));
    cocone.push_back({d.objects[i], legs.back()});
  }
  return {final_structure(q.space, cocone), std::move(legs)};
}

// ---------------------------------------------------------------------------

bool check_pseudo_circulation(const Stream& s, std::span<const PointSet> family) {
  const FiniteSpace& space = s.space();
  PointSet whole;
  for (PointSet a : family) {
    space.require_subset(a);
    whole |= a;
  }
  for (PointIndex x : whole) {
    bool ok = std::any_of(family.begin(), family.end(), [&](PointSet a) { return space.min_open(x).subset_of(a); });
    if (!ok) throw Error(ErrorCode::NeighborhoodConditionFailed, "no member is a neighborhood of '" + space.name(x) + "'");
  }
  Preorder left = s.on_open(whole);
  std::vector<Preorder> middle;
  std::vector<Preorder> right;
  for (PointSet a : family) {
    SubstreamResult sub = substream(s, a);
    middle.push_back(transitive_reflexive_closure(
        pair_image(sub.stream.underlying().relation(), sub.inclusion, space.universe(), a)));
    right.push_back(restrict(left, a));
  }
  return left == join_on(space.universe(), whole, middle) && left == join_on(space.universe(), whole, right);
}

std::optional<PointMap> find_isomorphism(const Stream& a, const Stream& b) {
  const FiniteSpace& sa = a.space();
  const FiniteSpace& sb = b.space();
  if (sa.size() != sb.size()) return std::nullopt;
  const std::size_t n = sa.size();
  std::vector<PointIndex> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](PointIndex x, PointIndex y) {
    return sa.min_open(x).size() > sa.min_open(y).size();
  });
  PointMap phi(n, kMaxPoints);
  PointSet used;
  const Circulation& ca = a.circulation();
  const Circulation& cb = b.circulation();

  auto consistent = [&](PointIndex x) {
    PointIndex fx = phi[x];
    if (sa.min_open(x).size() != sb.min_open(fx).size()) return false;
    if (ca.on_min_open(x).pair_count() != cb.on_min_open(fx).pair_count()) return false;
    for (PointIndex y = 0; y < n; ++y) {
      if (phi[y] == kMaxPoints) continue;
      PointIndex fy = phi[y];
      if (sa.min_open(x).contains(y) != sb.min_open(fx).contains(fy)) return false;
      if (sa.min_open(y).contains(x) != sb.min_open(fy).contains(fx)) return false;
    }
    // Generator pairs among assigned points must correspond.
    for (PointIndex z = 0; z < n; ++z) {
      if (phi[z] == kMaxPoints) continue;
      for (PointIndex p : sa.min_open(z))
        for (PointIndex q : sa.min_open(z)) {
          if (phi[p] == kMaxPoints || phi[q] == kMaxPoints) continue;
          if (p != x && q != x && z != x) continue;
          if (ca.on_min_open(z).related(p, q) != cb.on_min_open(phi[z]).related(phi[p], phi[q])) return false;
        }
    }
    return true;
  };

  std::function<bool(std::size_t)> search = [&](std::size_t k) {
    if (k == n) return true;
    PointIndex x = order[k];
    for (PointIndex c = 0; c < n; ++c) {
      if (used.contains(c)) continue;
      phi[x] = c;
      used.insert(c);
      if (consistent(x) && search(k + 1)) return true;
      used.erase(c);
      phi[x] = kMaxPoints;
    }
    return false;
  };
  if (!search(0)) return std::nullopt;
  return phi;
}

}  // namespace lps
