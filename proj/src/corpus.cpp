#include "lps/corpus.hpp"

#include "lps/error.hpp"

namespace lps {

UniversePtr numbered_universe(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("p" + std::to_string(i));
  return Universe::make(std::move(names));
}

Relation random_relation(Rng& rng, const UniversePtr& u, PointSet carrier, double density) {
  std::bernoulli_distribution coin(density);
  Relation r(u, carrier);
  for (PointIndex x : carrier)
    for (PointIndex y : carrier)
      if (x != y && coin(rng)) r.add(x, y);
  return r;
}

FiniteSpace random_space(Rng& rng, std::size_t n, double density) {
  auto u = numbered_universe(n);
  Preorder p = transitive_reflexive_closure(random_relation(rng, u, u->all(), density));
  std::vector<PointSet> table(n);
  for (PointIndex x = 0; x < n; ++x) table[x] = p.up(x);
  return FiniteSpace::from_min_opens(u, std::move(table));
}

Circulation random_circulation(Rng& rng, const FiniteSpace& space, double density) {
  std::vector<Preorder> gen;
  for (PointIndex x = 0; x < space.size(); ++x)
    gen.push_back(transitive_reflexive_closure(random_relation(rng, space.universe(), space.min_open(x), density)));
  return Circulation::from_generators(space, std::move(gen));
}

Stream random_stream(Rng& rng, std::size_t n) {
  std::uniform_real_distribution<double> d(0.1, 0.7);
  FiniteSpace space = random_space(rng, n, d(rng));
  return Stream(random_circulation(rng, space, d(rng)));
}

PointMap random_continuous_map(Rng& rng, const FiniteSpace& source, const FiniteSpace& target) {
  if (target.size() == 0) {
    if (source.size() == 0) return {};
    throw Error(ErrorCode::InvalidArgument, "no map into the empty space");
  }
  std::uniform_int_distribution<PointIndex> pick(0, target.size() - 1);
  for (int attempt = 0; attempt < 256; ++attempt) {
    PointMap f(source.size());
    for (auto& y : f) y = pick(rng);
    if (is_continuous(f, source, target)) return f;
  }
  return PointMap(source.size(), pick(rng));
}

std::vector<PointSet> random_partition(Rng& rng, std::size_t n) {
  std::vector<PointSet> classes;
  for (PointIndex i = 0; i < n; ++i) {
    std::uniform_int_distribution<std::size_t> pick(0, classes.size());
    std::size_t k = pick(rng);
    if (k == classes.size()) classes.push_back(PointSet());
    classes[k].insert(i);
  }
  return classes;
}

PointSet random_subset(Rng& rng, std::size_t n) {
  std::uniform_int_distribution<std::uint64_t> bits;
  return PointSet(bits(rng)) & PointSet::first_n(n);
}

std::vector<Preorder> all_preorders(const UniversePtr& u, PointSet carrier) {
  if (carrier.size() > 5) throw Error(ErrorCode::CapacityExceeded, "preorder enumeration beyond 5 points");
  std::vector<std::pair<PointIndex, PointIndex>> off_diagonal;
  for (PointIndex x : carrier)
    for (PointIndex y : carrier)
      if (x != y) off_diagonal.emplace_back(x, y);
  std::vector<Preorder> out;
  const std::uint64_t limit = std::uint64_t{1} << off_diagonal.size();
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    Relation r = Relation::identity(u, carrier);
    for (PointIndex i : PointSet(mask)) r.add(off_diagonal[i].first, off_diagonal[i].second);
    if (r.is_transitive()) out.push_back(Preorder::checked(std::move(r)));
  }
  return out;
}

std::vector<FiniteSpace> all_spaces(std::size_t n) {
  if (n > 4) throw Error(ErrorCode::CapacityExceeded, "space enumeration beyond 4 points");
  auto u = numbered_universe(n);
  std::vector<FiniteSpace> out;
  for (const Preorder& p : all_preorders(u, u->all())) {
    std::vector<PointSet> table(n);
    for (PointIndex x = 0; x < n; ++x) table[x] = p.up(x);
    out.push_back(FiniteSpace::from_min_opens(u, std::move(table)));
  }
  return out;
}

void for_each_point_map(std::size_t n_source, std::size_t n_target, const std::function<bool(const PointMap&)>& visit) {
  if (n_source > 0 && n_target == 0) return;
  PointMap f(n_source, 0);
  for (;;) {
    if (!visit(f)) return;
    std::size_t i = 0;
    while (i < n_source && ++f[i] == n_target) f[i++] = 0;
    if (i == n_source) return;
  }
}

}  // namespace lps
