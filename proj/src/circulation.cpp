#include "lps/circulation.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <mutex>
#include <unordered_map>
#include <unordered_set>

#include "lps/error.hpp"

namespace lps {

namespace {

void require_carrier(const Preorder& p, const FiniteSpace& space, PointSet carrier, const char* what) {
  if (!same_universe(p.universe(), space.universe()) || p.carrier() != carrier)
    throw Error(ErrorCode::CarrierMismatch, std::string(what) + ": preorder carrier does not match the open set");
}

/// Least pair in the symmetric difference of two preorders on one carrier.
std::pair<PointIndex, PointIndex> least_difference(const Preorder& a, const Preorder& b) {
  for (PointIndex x : a.carrier() | b.carrier()) {
    PointSet diff = PointSet(a.up(x).bits() ^ b.up(x).bits());
    if (!diff.empty()) return {x, diff.front()};
  }
  return {0, 0};
}

}  // namespace

// ---------------------------------------------------------------------------
// Circulation

Circulation Circulation::from_generators(FiniteSpace space, std::vector<Preorder> generators) {
  if (generators.size() != space.size())
    throw Error(ErrorCode::CarrierMismatch, "one generator per point required");
  for (PointIndex x = 0; x < space.size(); ++x) require_carrier(generators[x], space, space.min_open(x), "generator");
  std::vector<Preorder> saturated;
  saturated.reserve(space.size());
  for (PointIndex x = 0; x < space.size(); ++x) {
    Relation u(space.universe(), space.min_open(x));
    for (PointIndex y : space.min_open(x)) u.merge(generators[y].relation());
    saturated.push_back(transitive_reflexive_closure(std::move(u)));
  }
  return Circulation(std::move(space), std::move(saturated));
}

Preorder Circulation::on_open(PointSet u) const {
  space_.require_open(u);
  Relation r(space_.universe(), u);
  for (PointIndex x : u) r.merge(gen_[x].relation());
  return transitive_reflexive_closure(std::move(r));
}

// ---------------------------------------------------------------------------
// Precirculation

struct Precirculation::Memo {
  Assign fn;
  std::mutex mutex;
  std::unordered_map<std::uint64_t, Preorder> cache;
};

Precirculation::Precirculation(FiniteSpace space, Assign assign) : space_(std::move(space)), memo_(std::make_shared<Memo>()) {
  memo_->fn = std::move(assign);
}

Precirculation Precirculation::of(const Circulation& c) {
  return Precirculation(c.space(), [c](PointSet u) { return c.on_open(u); });
}

Precirculation Precirculation::from_table(FiniteSpace space, std::vector<std::pair<PointSet, Preorder>> table) {
  std::unordered_set<std::uint64_t> declared;
  for (const auto& [u, p] : table) {
    space.require_open(u);
    require_carrier(p, space, u, "table entry");
    if (!declared.insert(u.bits()).second) throw Error(ErrorCode::InvalidArgument, "open set listed twice in table");
  }
  bool exact = true;
  for (PointSet u : space.opens())
    if (!u.empty() && !declared.contains(u.bits())) exact = false;
  auto universe = space.universe();
  Precirculation pc(std::move(space), [table = std::move(table), universe](PointSet u) {
    Relation r(universe, u);
    for (const auto& [w, p] : table)
      if (w.subset_of(u)) r.merge(p.relation());
    return transitive_reflexive_closure(std::move(r));
  });
  pc.exact_ = exact;
  return pc;
}

Preorder Precirculation::assign(PointSet u) const {
  space_.require_open(u);
  if (u.empty()) return Preorder::identity(space_.universe(), u);
  {
    std::lock_guard lock(memo_->mutex);
    if (auto it = memo_->cache.find(u.bits()); it != memo_->cache.end()) return it->second;
  }
  Preorder value = memo_->fn(u);
  require_carrier(value, space_, u, "precirculation value");
  std::lock_guard lock(memo_->mutex);
  return memo_->cache.emplace(u.bits(), std::move(value)).first->second;
}

// ---------------------------------------------------------------------------
// Cosheaf predicate

CosheafCheck is_circulation(const Precirculation& pc, Mode mode) {
  const FiniteSpace& space = pc.space();
  const auto& universe = space.universe();
  std::vector<PointSet> opens = space.opens();
  std::erase(opens, PointSet());
  CosheafCheck result;

  auto fail = [&](std::vector<PointSet> collection, const Preorder& whole, const Preorder& joined) {
    std::sort(collection.begin(), collection.end());
    result.holds = false;
    result.collection = std::move(collection);
    std::tie(result.x, result.y) = least_difference(whole, joined);
    result.pair_in_union = whole.related(result.x, result.y);
  };

  if (mode == Mode::Fast) {
    for (PointSet w : opens) {
      Relation r(universe, w);
      std::vector<PointSet> cover;
      for (PointIndex x : w) {
        r.merge(pc.assign(space.min_open(x)).relation());
        if (std::find(cover.begin(), cover.end(), space.min_open(x)) == cover.end()) cover.push_back(space.min_open(x));
      }
      Preorder joined = transitive_reflexive_closure(std::move(r));
      Preorder whole = pc.assign(w);
      if (!(whole == joined)) {
        fail(std::move(cover), whole, joined);
        return result;
      }
    }
    return result;
  }

  if (opens.size() > 24)
    throw Error(ErrorCode::CapacityExceeded, "exhaustive cosheaf check over " + std::to_string(opens.size()) + " open sets");
  std::vector<Preorder> values;
  for (PointSet u : opens) values.push_back(pc.assign(u));
  const std::uint64_t limit = std::uint64_t{1} << opens.size();
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    PointSet w;
    for (PointIndex i : PointSet(mask)) w |= opens[i];
    Relation r(universe, w);
    for (PointIndex i : PointSet(mask)) r.merge(values[i].relation());
    Preorder joined = transitive_reflexive_closure(std::move(r));
    Preorder whole = pc.assign(w);
    if (!(whole == joined)) {
      std::vector<PointSet> collection;
      for (PointIndex i : PointSet(mask)) collection.push_back(opens[i]);
      fail(std::move(collection), whole, joined);
      return result;
    }
  }
  return result;
}

bool is_precirculation(const Precirculation& pc) {
  std::vector<PointSet> opens = pc.space().opens();
  for (PointSet u : opens)
    for (PointSet v : opens)
      if (u != v && u.subset_of(v)) {
        Preorder big = pc.assign(v);
        if (!pc.assign(u).relation().graph_subset_of(restrict(big.relation(), u))) return false;
      }
  return true;
}

// ---------------------------------------------------------------------------
// Constructions

Circulation trivial_circulation(const FiniteSpace& space) {
  std::vector<Preorder> gen;
  for (PointIndex x = 0; x < space.size(); ++x) gen.push_back(Preorder::identity(space.universe(), space.min_open(x)));
  return Circulation::from_generators(space, std::move(gen));
}

Circulation specialization_circulation(const FiniteSpace& space) {
  Preorder spec = specialization_preorder(space);
  std::vector<Preorder> gen;
  for (PointIndex x = 0; x < space.size(); ++x) gen.push_back(restrict(spec, space.min_open(x)));
  return Circulation::from_generators(space, std::move(gen));
}

Circulation connected_hausdorff_circulation(const FiniteSpace& space) { return trivial_circulation(space); }

Circulation join_circulations(std::span<const Circulation> family) {
  if (family.empty()) throw Error(ErrorCode::InvalidArgument, "join of an empty family of circulations");
  const FiniteSpace& space = family.front().space();
  for (const auto& c : family)
    if (!(c.space() == space)) throw Error(ErrorCode::SpaceMismatch, "circulations live on different spaces");
  std::vector<Preorder> gen;
  for (PointIndex x = 0; x < space.size(); ++x) {
    Relation r(space.universe(), space.min_open(x));
    for (const auto& c : family) r.merge(c.on_min_open(x).relation());
    gen.push_back(transitive_reflexive_closure(std::move(r)));
  }
  return Circulation::from_generators(space, std::move(gen));
}

Circulation cosheafify(const Precirculation& pc) {
  const FiniteSpace& space = pc.space();
  std::vector<Preorder> gen;
  for (PointIndex x = 0; x < space.size(); ++x) gen.push_back(pc.assign(space.min_open(x)));
  return Circulation::from_generators(space, std::move(gen));
}

Precirculation pushforward_precirculation(const Precirculation& pc, const PointMap& f, const FiniteSpace& target) {
  require_continuous(f, pc.space(), target);
  auto universe = target.universe();
  return Precirculation(target, [pc, f, universe](PointSet u) {
    return transitive_reflexive_closure(pair_image(pc.assign(preimage(f, u)).relation(), f, universe, u));
  });
}

Circulation pushforward(const Stream& s, const PointMap& f, const FiniteSpace& target) {
  require_continuous(f, s.space(), target);
  std::vector<Preorder> gen;
  for (PointIndex y = 0; y < target.size(); ++y) {
    PointSet u = target.min_open(y);
    gen.push_back(transitive_reflexive_closure(pair_image(s.on_open(preimage(f, u)).relation(), f, target.universe(), u)));
  }
  Circulation out = Circulation::from_generators(target, std::move(gen));
#ifndef NDEBUG
  assert(is_circulation(pushforward_precirculation(Precirculation::of(s.circulation()), f, target)).holds);
#endif
  return out;
}

Precirculation pullback(const Precirculation& pc, const PointMap& f, const FiniteSpace& source) {
  require_continuous(f, source, pc.space());
  auto universe = source.universe();
  const FiniteSpace& target = pc.space();
  return Precirculation(source, [pc, f, universe, target](PointSet u) {
    PointSet v = target.open_hull(image(f, u));
    return Preorder::checked(pair_preimage(pc.assign(v).relation(), f, universe, u));
  });
}

Preorder underlying_preorder(const Stream& s) { return s.underlying(); }

// ---------------------------------------------------------------------------
// Witnesses

namespace {

/// Breadth-first shortest path from x to y under a step function; empty
/// optional if y is unreachable.
template <typename Step>
std::optional<std::vector<PointIndex>> shortest_path(PointIndex x, PointIndex y, Step step) {
  std::vector<PointIndex> parent(kMaxPoints, kMaxPoints);
  parent[x] = x;
  std::deque<PointIndex> queue{x};
  while (!queue.empty()) {
    PointIndex p = queue.front();
    queue.pop_front();
    if (p == y) break;
    for (PointIndex q : step(p) - PointSet::singleton(p))
      if (parent[q] == kMaxPoints) {
        parent[q] = p;
        queue.push_back(q);
      }
  }
  if (parent[y] == kMaxPoints) return std::nullopt;
  std::vector<PointIndex> path{y};
  while (path.back() != x) path.push_back(parent[path.back()]);
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace

AlternatingChain alternating_witness(const Stream& s, PointSet u, PointSet v, PointIndex x, PointIndex y) {
  Preorder pu = s.on_open(u);
  Preorder pv = s.on_open(v);
  PointSet both = u | v;
  if (x >= s.size() || y >= s.size()) throw Error(ErrorCode::UnknownPoint, "witness endpoint outside the space");
  if (!both.contains(x) || !both.contains(y)) throw Error(ErrorCode::NotRelated, "endpoint outside the union of the opens");
  auto path = shortest_path(x, y, [&](PointIndex p) { return pu.up(p) | pv.up(p); });
  if (!path) throw Error(ErrorCode::NotRelated, s.space().name(x) + " is not below " + s.space().name(y) + " on the union");
  AlternatingChain chain;
  chain.points = *path;
  // In a minimal chain of length >= 2 every step lies in exactly one of the
  // two preorders, otherwise two neighbouring steps would merge.
  for (std::size_t i = 0; i + 1 < chain.points.size(); ++i) {
    bool in_u = pu.related(chain.points[i], chain.points[i + 1]);
    bool in_v = pv.related(chain.points[i], chain.points[i + 1]);
    int label = in_u ? 0 : 1;
    if (in_u && in_v && i > 0) label = 1 - chain.labels.back();
    chain.labels.push_back(label);
  }
  return chain;
}

bool validate_alternating_witness(const Stream& s, PointSet u, PointSet v, const AlternatingChain& chain) {
  if (chain.points.empty() || chain.points.size() != chain.labels.size() + 1) return false;
  Preorder pu = s.on_open(u);
  Preorder pv = s.on_open(v);
  for (std::size_t i = 0; i < chain.labels.size(); ++i) {
    const Preorder& p = chain.labels[i] == 0 ? pu : pv;
    if (chain.labels[i] != 0 && chain.labels[i] != 1) return false;
    if (!p.related(chain.points[i], chain.points[i + 1])) return false;
    if (i > 0 && chain.labels[i] == chain.labels[i - 1]) return false;
  }
  return true;
}

StarChain star_chain_witness(const Stream& s, PointSet u, PointIndex x, PointIndex y) {
  const FiniteSpace& space = s.space();
  space.require_open(u);
  if (x >= s.size() || y >= s.size()) throw Error(ErrorCode::UnknownPoint, "witness endpoint outside the space");
  if (!u.contains(x) || !u.contains(y)) throw Error(ErrorCode::NotRelated, "endpoint outside the open set");
  const Circulation& c = s.circulation();
  auto step = [&](PointIndex p) {
    PointSet out;
    for (PointIndex z : u)
      if (space.min_open(z).contains(p)) out |= c.on_min_open(z).up(p);
    return out;
  };
  auto path = shortest_path(x, y, step);
  if (!path) throw Error(ErrorCode::NotRelated, space.name(x) + " is not below " + space.name(y) + " on the open set");
  StarChain chain;
  chain.points = *path;
  for (std::size_t i = 0; i + 1 < chain.points.size(); ++i)
    for (PointIndex z : u)
      if (space.min_open(z).contains(chain.points[i]) && c.on_min_open(z).related(chain.points[i], chain.points[i + 1])) {
        chain.step_star.push_back(z);
        break;
      }
  return chain;
}

// ---------------------------------------------------------------------------
// Lemma checks

IntervalCheck check_connected_intervals(const Precirculation& pc) {
  const FiniteSpace& space = pc.space();
  Preorder whole = pc.assign(space.points());
  IntervalCheck out;
  for (PointIndex x = 0; x < space.size(); ++x)
    for (PointIndex y = 0; y < space.size(); ++y) {
      PointSet interval = bounded_interval(whole, x, y);
      if (!interval.empty() && !is_connected(space, space.closure(interval))) {
        out.holds = false;
        out.x = x;
        out.y = y;
        out.interval = interval;
        return out;
      }
    }
  return out;
}

IntervalCheck check_connected_intervals(const Stream& s) {
  return check_connected_intervals(Precirculation::of(s.circulation()));
}

ConvexRestrictionCheck check_convex_restriction(const Stream& s, PointSet a) {
  Preorder whole = s.underlying();
  if (!is_convex(whole, a)) throw Error(ErrorCode::NotConvex, "set is not convex in the underlying preorder");
  const PointSet cl = s.space().closure(a);
  const Preorder expected = restrict(whole, a);
  ConvexRestrictionCheck out;
  for (PointSet u : s.space().opens())
    if (cl.subset_of(u) && !(restrict(s.on_open(u), a) == expected)) {
      out.holds = false;
      out.failing_open = u;
      return out;
    }
  return out;
}

AntisymmetryCheck check_antisymmetry(const Stream& s) {
  Preorder whole = s.underlying();
  AntisymmetryCheck out;
  out.t0 = s.space().is_t0();
  out.convex_neighborhoods = true;
  for (PointIndex x = 0; x < s.size(); ++x)
    if (!is_convex(whole, s.space().min_open(x))) out.convex_neighborhoods = false;
  out.antisymmetric = whole.is_antisymmetric();
  return out;
}

ConvexGenerationCheck check_convex_generation(const Stream& s, PointSet u) {
  const FiniteSpace& space = s.space();
  space.require_open(u);
  if (u.size() > 20) throw Error(ErrorCode::CapacityExceeded, "convex generation check over more than 20 points");
  Preorder whole = s.underlying();
  std::vector<PointSet> family;
  // Enumerate non-empty submasks of u.
  for (std::uint64_t m = u.bits(); m != 0; m = (m - 1) & u.bits()) {
    PointSet a(m);
    if (is_convex(whole, a) && space.closure(a).subset_of(u)) family.push_back(a);
  }
  ConvexGenerationCheck out;
  out.applicable = true;
  for (PointIndex x : u) {
    bool covered = std::any_of(family.begin(), family.end(), [&](PointSet a) { return space.min_open(x).subset_of(a); });
    if (!covered) out.applicable = false;
  }
  if (!out.applicable) return out;
  std::vector<Preorder> parts;
  for (PointSet a : family) parts.push_back(restrict(whole, a));
  out.holds = s.on_open(u) == join_on(space.universe(), u, parts);
  return out;
}

}  // namespace lps
