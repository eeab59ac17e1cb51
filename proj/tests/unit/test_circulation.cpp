#include <doctest.h>

#include <thread>

#include "lps/corpus.hpp"
#include "lps/error.hpp"
#include "lps/models.hpp"
#include "lps/stream_cat.hpp"
#include "../support/helpers.hpp"
#include "../support/oracles.hpp"
#include "../support/test_corpus.hpp"

using namespace lps;

namespace {

FiniteSpace sierpinski_space() { return FiniteSpace::from_named({"a", "b"}, {{"a", {"a", "b"}}, {"b", {"b"}}}); }

/// Value of a circulation on an open, recomputed from generators with the oracle closure.
oracle::Rel oracle_value(const Circulation& c, PointSet u) {
  oracle::Rel r = oracle::empty_rel(c.space().size(), u.bits());
  for (PointIndex x : u) r = oracle::unite(r, oracle::from_library(c.on_min_open(x)));
  return oracle::closure(r);
}

Stream one_star_circle(int which) {
  Stream full = directed_circle(2);
  const FiniteSpace& space = full.space();
  std::vector<Preorder> gen;
  PointIndex star = space.universe()->index_of(which == 0 ? "v0" : "v1");
  for (PointIndex x = 0; x < space.size(); ++x)
    gen.push_back(x == star ? full.circulation().on_min_open(x) : Preorder::identity(space.universe(), space.min_open(x)));
  return Stream(Circulation::from_generators(space, gen));
}

}  // namespace

TEST_CASE("generators: trivial, interval and circle are saturated") {
  FiniteSpace s = sierpinski_space();
  CHECK(trivial_circulation(s).on_open(s.points()) == Preorder::identity(s.universe(), s.points()));

  Stream i = directed_interval(1);
  auto u = i.space().universe();
  std::vector<Preorder> input;
  for (PointIndex x = 0; x < 3; ++x) {
    const std::string& n = u->name(x);
    if (n == "v0") input.push_back(th::pre(u, {"v0", "e1"}, {{"v0", "e1"}}));
    else if (n == "v1") input.push_back(th::pre(u, {"e1", "v1"}, {{"e1", "v1"}}));
    else input.push_back(Preorder::identity(u, i.space().min_open(x)));
  }
  Circulation c = Circulation::from_generators(i.space(), input);
  CHECK(c.generators() == input);
  CHECK(c == i.circulation());

  Stream circle = directed_circle(2);
  Circulation again = Circulation::from_generators(circle.space(), circle.circulation().generators());
  CHECK(again == circle.circulation());
  CHECK(circle.underlying().pair_count() == 16);

  std::vector<Preorder> wrong{Preorder::identity(u, u->all()), input[1], input[2]};
  CHECK_THROWS_AS(Circulation::from_generators(i.space(), wrong), Error);
}

TEST_CASE("values on opens") {
  Stream circle = directed_circle(2);
  const FiniteSpace& space = circle.space();
  auto u = space.universe();
  CHECK(circle.on_open(PointSet()).carrier().empty());
  Preorder star = circle.on_open(space.min_open(u->index_of("v0")));
  CHECK(star == th::pre(u, {"e1", "e2", "v0"}, {{"e2", "v0"}, {"v0", "e1"}}));
  CHECK(star.is_antisymmetric());
  CHECK(circle.on_open(space.points()) == Preorder::chaotic(u, space.points()));
  CHECK_THROWS_AS(circle.on_open(th::set(u, {"v0"})), Error);
}

TEST_CASE("values agree with the oracle closure and every cover on corpus streams") {
  for (const auto& s : testcorpus::streams(3, 4, 40)) {
    for (PointSet w : s.space().opens()) CHECK(oracle::from_library(s.on_open(w)) == oracle_value(s.circulation(), w));
  }
}

TEST_CASE("circulations are monotone") {
  for (const auto& s : testcorpus::streams(3, 4, 40)) {
    auto opens = s.space().opens();
    for (auto a : opens)
      for (auto b : opens)
        if (a.subset_of(b)) CHECK(s.on_open(a).relation().graph_subset_of(s.on_open(b).relation()));
  }
}

TEST_CASE("cosheaf predicate on trivial and specialization circulations") {
  for (std::size_t n = 0; n <= 4; ++n)
    for (const auto& space : oracle::all_spaces(n)) {
      CHECK(is_circulation(Precirculation::of(trivial_circulation(space))).holds);
      Circulation spec = specialization_circulation(space);
      CHECK(is_circulation(Precirculation::of(spec), Mode::Fast).holds);
      Preorder global = specialization_preorder(space);
      for (PointSet w : space.opens()) CHECK(spec.on_open(w) == restrict(global, w));
    }
  FiniteSpace s = sierpinski_space();
  Circulation spec = specialization_circulation(s);
  CHECK(spec.on_open(s.points()) == th::pre(s.universe(), {"a", "b"}, {{"a", "b"}}));
  CHECK(spec.on_open(th::set(s.universe(), {"b"})) == Preorder::identity(s.universe(), th::set(s.universe(), {"b"})));
  FiniteSpace d = FiniteSpace::discrete(numbered_universe(3));
  CHECK(specialization_circulation(d) == trivial_circulation(d));
}

TEST_CASE("every circulation on a discrete space is trivial") {
  for (std::size_t n = 1; n <= 3; ++n) {
    FiniteSpace d = FiniteSpace::discrete(numbered_universe(n));
    CHECK(oracle::all_circulations(oracle::from_library(d)).size() == 1);
  }
  CHECK(connected_hausdorff_circulation(sierpinski_space()) == trivial_circulation(sierpinski_space()));
}

TEST_CASE("non-cosheaf precirculation is rejected with a witness") {
  PathologyFixture fx = pathology_fixture();
  CosheafCheck fast = is_circulation(fx.pullback, Mode::Fast);
  CosheafCheck full = is_circulation(fx.pullback, Mode::Exhaustive);
  CHECK_FALSE(fast.holds);
  CHECK_FALSE(full.holds);
  CHECK(fast.pair_in_union);
  CHECK(full.pair_in_union);
  CHECK(fast.x != fast.y);
  // The witness is reproducible.
  CosheafCheck again = is_circulation(fx.pullback, Mode::Fast);
  CHECK(again.collection == fast.collection);
  CHECK(again.x == fast.x);
  CHECK(again.y == fast.y);
}

TEST_CASE("join of circulations") {
  Rng rng(3);
  for (int i = 0; i < 50; ++i) {
    Stream s = random_stream(rng, 1 + rng() % 4);
    std::vector<Circulation> with_trivial{s.circulation(), trivial_circulation(s.space())};
    CHECK(join_circulations(with_trivial) == s.circulation());
    std::vector<Circulation> twice{s.circulation(), s.circulation()};
    CHECK(join_circulations(twice) == s.circulation());
    Circulation other = random_circulation(rng, s.space());
    std::vector<Circulation> pair{s.circulation(), other};
    Circulation j = join_circulations(pair);
    CHECK(is_circulation(Precirculation::of(j)).holds);
    for (PointSet w : s.space().opens()) {
      oracle::Rel expected = oracle::closure(oracle::unite(oracle::from_library(s.on_open(w)), oracle::from_library(other.on_open(w))));
      CHECK(oracle::from_library(j.on_open(w)) == expected);
    }
  }
  std::vector<Circulation> halves{one_star_circle(0).circulation(), one_star_circle(1).circulation()};
  CHECK(join_circulations(halves) == directed_circle(2).circulation());
  std::vector<Circulation> mismatch{trivial_circulation(sierpinski_space()),
                                    trivial_circulation(FiniteSpace::discrete(numbered_universe(2)))};
  CHECK_THROWS_AS(join_circulations(mismatch), Error);
}

TEST_CASE("cosheafification") {
  for (const auto& s : testcorpus::streams(3, 4, 40)) CHECK(cosheafify(Precirculation::of(s.circulation())) == s.circulation());
  FiniteSpace sp = sierpinski_space();
  Precirculation triv(sp, [&](PointSet u) { return Preorder::identity(sp.universe(), u); });
  CHECK(cosheafify(triv) == trivial_circulation(sp));

  Rng rng(12);
  for (std::size_t n = 1; n <= 3; ++n)
    for (const auto& space : oracle::all_spaces(n))
      for (int k = 0; k < 2; ++k) {
        Precirculation pc = testcorpus::random_precirculation(rng, space, 0.35);
        Circulation c = cosheafify(pc);
        oracle::Values expected = oracle::cosheafify(pc);
        for (PointSet w : space.opens()) {
          CHECK(oracle::from_library(c.on_open(w)) == expected[w.bits()]);
          CHECK(c.on_open(w).relation().graph_subset_of(pc.assign(w).relation()));
        }
        CHECK(cosheafify(Precirculation::of(c)) == c);
        // Monotone in its input.
        Precirculation bigger(space, [pc, space](PointSet w) {
          Relation r = pc.assign(w).relation();
          if (w.size() >= 2) r.add(w.front(), (w - PointSet::singleton(w.front())).front());
          return transitive_reflexive_closure(r);
        });
        Circulation cb = cosheafify(bigger);
        for (PointSet w : space.opens()) CHECK(c.on_open(w).graph_subset_of(cb.on_open(w)));
      }
}

TEST_CASE("half of the cosheaf condition holds for every precirculation") {
  Rng rng(5);
  for (std::size_t n = 1; n <= 3; ++n)
    for (const auto& space : oracle::all_spaces(n)) {
      Precirculation pc = testcorpus::random_precirculation(rng, space);
      CHECK(is_precirculation(pc));
      auto opens = space.opens();
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << opens.size()); ++mask) {
        PointSet w;
        oracle::Rel joined = oracle::empty_rel(n, 0);
        for (PointIndex i : PointSet(mask)) {
          w |= opens[i];
          joined = oracle::unite(joined, oracle::from_library(pc.assign(opens[i])));
        }
        joined.carrier = w.bits();
        CHECK(oracle::subset(oracle::closure(joined), oracle::from_library(pc.assign(w))));
      }
    }
}

TEST_CASE("pushforward") {
  Rng rng(6);
  for (int i = 0; i < 60; ++i) {
    Stream s = random_stream(rng, 1 + rng() % 4);
    CHECK(pushforward(s, identity_point_map(s.size()), s.space()) == s.circulation());
    FiniteSpace y = random_space(rng, 1 + rng() % 3);
    PointMap f = random_continuous_map(rng, s.space(), y);
    CHECK(pushforward(Stream(trivial_circulation(s.space())), f, y) == trivial_circulation(y));
    Precirculation pf = pushforward_precirculation(Precirculation::of(s.circulation()), f, y);
    CHECK(is_circulation(pf, Mode::Exhaustive).holds);
    Circulation c = pushforward(s, f, y);
    for (PointSet w : y.opens()) {
      oracle::Rel img = oracle::empty_rel(y.size(), w.bits());
      Preorder src = s.on_open(preimage(f, w));
      for (auto [a, b] : src.pairs()) img.rows[f[a]] |= oracle::Bits{1} << f[b];
      CHECK(oracle::from_library(c.on_open(w)) == oracle::closure(img));
    }
    // Functoriality: (g f)_* = g_* f_*.
    FiniteSpace z = random_space(rng, 1 + rng() % 3);
    PointMap g = random_continuous_map(rng, y, z);
    Stream fs(c);
    CHECK(pushforward(s, lps::compose(g, f), z) == pushforward(fs, g, z));
  }
  Stream i2 = directed_interval(2);
  auto u = i2.space().universe();
  std::vector<PointSet> classes{th::set(u, {"v0", "v2"}), th::set(u, {"v1"}), th::set(u, {"e1"}), th::set(u, {"e2"})};
  QuotientSpace q = quotient_space(i2.space(), classes);
  CHECK(pushforward(i2, q.projection, q.space) == directed_circle(2).circulation());
  FiniteSpace sp = sierpinski_space();
  CHECK_THROWS_AS(pushforward(Stream(trivial_circulation(sp)), PointMap{1, 0}, sp), Error);
}

TEST_CASE("pullback") {
  Rng rng(7);
  for (int i = 0; i < 60; ++i) {
    Stream s = random_stream(rng, 1 + rng() % 4);
    Precirculation pc = Precirculation::of(s.circulation());
    Precirculation same = pullback(pc, identity_point_map(s.size()), s.space());
    for (PointSet w : s.space().opens()) CHECK(same.assign(w) == s.on_open(w));

    FiniteSpace x = random_space(rng, 1 + rng() % 4);
    PointMap f = random_continuous_map(rng, x, s.space());
    Precirculation pb = pullback(Precirculation::of(trivial_circulation(s.space())), f, x);
    bool injective = true;
    for (PointIndex a = 0; a < f.size(); ++a)
      for (PointIndex b = a + 1; b < f.size(); ++b)
        if (f[a] == f[b]) injective = false;
    bool trivial = true;
    for (PointSet w : x.opens())
      if (!(pb.assign(w) == Preorder::identity(x.universe(), w))) trivial = false;
    CHECK(trivial == injective);
    CHECK(is_precirculation(pullback(pc, f, x)));
  }
  // Pullback along an open inclusion preserves circulations.
  for (const auto& s : testcorpus::streams(3, 4, 40))
    for (PointSet w : s.space().opens()) {
      Subspace sub = subspace(s.space(), w);
      Precirculation pb = pullback(Precirculation::of(s.circulation()), sub.inclusion, sub.space);
      CHECK(is_circulation(pb).holds);
    }
  FiniteSpace sp = sierpinski_space();
  CHECK_THROWS_AS(pullback(Precirculation::of(trivial_circulation(sp)), PointMap{1, 0}, sp), Error);
}

TEST_CASE("underlying preorders") {
  FiniteSpace sp = sierpinski_space();
  CHECK(underlying_preorder(Stream(trivial_circulation(sp))) == Preorder::identity(sp.universe(), sp.points()));
  Stream i = directed_interval(1);
  auto u = i.space().universe();
  CHECK(i.underlying() == th::pre(u, {"v0", "e1", "v1"}, {{"v0", "e1"}, {"e1", "v1"}}));
  CHECK(i.underlying().is_total());
  CHECK(directed_circle(3).underlying() == Preorder::chaotic(directed_circle(3).space().universe(), directed_circle(3).space().points()));
}

TEST_CASE("alternating witnesses") {
  Stream circle = directed_circle(2);
  const FiniteSpace& space = circle.space();
  auto u = space.universe();
  PointSet su = space.min_open(u->index_of("v0"));
  PointSet sv = space.min_open(u->index_of("v1"));
  PointIndex e1 = u->index_of("e1");
  PointIndex e2 = u->index_of("e2");
  PointIndex v0 = u->index_of("v0");
  AlternatingChain empty = alternating_witness(circle, su, sv, e1, e1);
  CHECK(empty.length() == 0);
  CHECK(validate_alternating_witness(circle, su, sv, empty));
  AlternatingChain loop = alternating_witness(circle, su, sv, e1, v0);
  CHECK(loop.length() == 2);
  CHECK(loop.points == std::vector<PointIndex>{e1, e2, v0});
  CHECK(loop.labels == std::vector<int>{1, 0});
  CHECK(validate_alternating_witness(circle, su, sv, loop));
  AlternatingChain broken = loop;
  broken.labels = {0, 0};
  CHECK_FALSE(validate_alternating_witness(circle, su, sv, broken));
  Stream i = directed_interval(1);
  auto ui = i.space().universe();
  CHECK_THROWS_AS(alternating_witness(i, i.space().points(), PointSet(), ui->index_of("v1"), ui->index_of("v0")), Error);

  StarChain chain = star_chain_witness(circle, space.points(), e1, v0);
  CHECK(chain.points.size() == 3);
  CHECK(chain.step_star.size() == 2);
  for (std::size_t k = 0; k < chain.step_star.size(); ++k)
    CHECK(circle.circulation().on_min_open(chain.step_star[k]).related(chain.points[k], chain.points[k + 1]));
}

TEST_CASE("alternating witnesses on corpus streams") {
  for (const auto& s : testcorpus::streams(3, 4, 30)) {
    auto opens = s.space().opens();
    for (auto a : opens)
      for (auto b : opens) {
        Preorder whole = s.on_open(a | b);
        for (auto [x, y] : whole.pairs()) {
          AlternatingChain c = alternating_witness(s, a, b, x, y);
          CHECK(validate_alternating_witness(s, a, b, c));
          CHECK(c.points.front() == x);
          CHECK(c.points.back() == y);
        }
      }
  }
}

TEST_CASE("connected intervals") {
  CHECK(check_connected_intervals(Stream(trivial_circulation(FiniteSpace::discrete(numbered_universe(3))))).holds);
  for (int n = 1; n <= 5; ++n) CHECK(check_connected_intervals(directed_interval(n)).holds);
  for (const auto& s : testcorpus::streams()) {
    IntervalCheck c = check_connected_intervals(s);
    CHECK(c.holds);
    auto o = oracle::from_library(s.space());
    oracle::Rel whole = oracle::from_library(s.underlying());
    for (PointIndex x = 0; x < s.size(); ++x)
      for (PointIndex y = 0; y < s.size(); ++y) {
        oracle::Bits interval = 0;
        for (PointIndex z = 0; z < s.size(); ++z)
          if (whole.related(x, z) && whole.related(z, y)) interval |= oracle::Bits{1} << z;
        CHECK(oracle::is_connected(o, oracle::closure_set(o, interval)));
      }
  }
  IntervalCheck bad = check_connected_intervals(pathology_fixture().pullback);
  CHECK_FALSE(bad.holds);
  CHECK(bad.interval.size() == 2);
}

TEST_CASE("convex restriction") {
  Stream i = directed_interval(1);
  auto u = i.space().universe();
  CHECK(check_convex_restriction(i, th::set(u, {"e1"})).holds);
  CHECK(i.space().closure(th::set(u, {"e1"})) == i.space().points());
  CHECK(check_convex_restriction(i, th::set(u, {"v0"})).holds);
  Stream i2 = directed_interval(2);
  CHECK_THROWS_AS(check_convex_restriction(i2, th::set(i2.space().universe(), {"v0", "v2"})), Error);
  for (const auto& s : testcorpus::streams()) {
    Preorder whole = s.underlying();
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << s.size()); ++m)
      if (is_convex(whole, PointSet(m))) CHECK(check_convex_restriction(s, PointSet(m)).holds);
  }
}

TEST_CASE("antisymmetry and convex generation on the corpus") {
  std::size_t applicable = 0;
  for (const auto& s : testcorpus::streams()) {
    CHECK(check_antisymmetry(s).holds());
    for (PointSet w : s.space().opens()) {
      ConvexGenerationCheck c = check_convex_generation(s, w);
      if (c.applicable) {
        ++applicable;
        CHECK(c.holds);
      }
    }
  }
  CHECK(applicable > 0);
  AntisymmetryCheck i = check_antisymmetry(directed_interval(3));
  CHECK(i.t0);
  CHECK(i.antisymmetric);
}

TEST_CASE("precirculation memo is safe under concurrent reads") {
  Stream s = directed_square(2, 2);
  Precirculation pc = Precirculation::of(s.circulation());
  std::vector<PointSet> opens;
  for (PointIndex x = 0; x < s.size(); ++x) opens.push_back(s.space().min_open(x));
  std::vector<std::thread> threads;
  std::vector<int> ok(8, 1);
  for (int t = 0; t < 8; ++t)
    threads.emplace_back([&, t] {
      for (int rep = 0; rep < 50; ++rep)
        for (PointSet w : opens)
          if (!(pc.assign(w) == s.on_open(w))) ok[t] = 0;
    });
  for (auto& th : threads) th.join();
  for (int v : ok) CHECK(v == 1);
}

TEST_CASE("precirculation table with partial family") {
  FiniteSpace sp = sierpinski_space();
  auto u = sp.universe();
  std::vector<std::pair<PointSet, Preorder>> table{{sp.points(), th::pre(u, {"a", "b"}, {{"a", "b"}})}};
  Precirculation pc = Precirculation::from_table(sp, table);
  CHECK_FALSE(pc.exact());
  CHECK(pc.assign(th::set(u, {"b"})) == Preorder::identity(u, th::set(u, {"b"})));
  table.push_back({th::set(u, {"b"}), Preorder::identity(u, th::set(u, {"b"}))});
  CHECK(Precirculation::from_table(sp, table).exact());
  CHECK_THROWS_AS(pc.assign(th::set(u, {"a"})), Error);
}
