#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "lps/circulation.hpp"

namespace lps {

/// Generators for randomized and exhaustive corpora of small spaces and streams.
using Rng = std::mt19937_64;

/// Points named p0, p1, ...
UniversePtr numbered_universe(std::size_t n);

Relation random_relation(Rng& rng, const UniversePtr& u, PointSet carrier, double density);
/// Alexandrov space of the closure of a random relation.
FiniteSpace random_space(Rng& rng, std::size_t n, double density = 0.3);
/// Saturation of random generators on each minimal open.
Circulation random_circulation(Rng& rng, const FiniteSpace& space, double density = 0.4);
Stream random_stream(Rng& rng, std::size_t n);
/// Random continuous map found by rejection; falls back to a constant map.
PointMap random_continuous_map(Rng& rng, const FiniteSpace& source, const FiniteSpace& target);
/// Random partition, as point classes.
std::vector<PointSet> random_partition(Rng& rng, std::size_t n);
PointSet random_subset(Rng& rng, std::size_t n);

/// Every preorder on the carrier (at most 5 points).
std::vector<Preorder> all_preorders(const UniversePtr& u, PointSet carrier);
/// Every topology on n labeled points p0..p{n-1} (n <= 4).
std::vector<FiniteSpace> all_spaces(std::size_t n);
/// Calls visit on every map from n_source points to n_target points; stops
/// early if visit returns false.
void for_each_point_map(std::size_t n_source, std::size_t n_target, const std::function<bool(const PointMap&)>& visit);

}  // namespace lps
