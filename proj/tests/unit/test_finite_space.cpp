#include <doctest.h>

#include "lps/corpus.hpp"
#include "lps/error.hpp"
#include "lps/finite_space.hpp"
#include "lps/models.hpp"
#include "../support/helpers.hpp"
#include "../support/oracles.hpp"

using namespace lps;

namespace {

FiniteSpace sierpinski() { return FiniteSpace::from_named({"a", "b"}, {{"a", {"a", "b"}}, {"b", {"b"}}}); }

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("space construction and validation") {
  CHECK_NOTHROW(sierpinski());
  CHECK_NOTHROW(FiniteSpace::from_named({"x", "y", "z"}, {{"x", {"x"}}, {"y", {"y"}}, {"z", {"z"}}}));
  CHECK(code_of([] { FiniteSpace::from_named({"a", "b", "c"}, {{"a", {"a", "b"}}, {"b", {"b", "c"}}, {"c", {"c"}}}); }) ==
        ErrorCode::NotMinimal);
  CHECK(code_of([] { FiniteSpace::from_named({"a", "b"}, {{"a", {"a"}}}); }) == ErrorCode::MissingPoint);
  CHECK(code_of([] { FiniteSpace::from_named({"a", "b"}, {{"a", {"b"}}, {"b", {"b"}}}); }) == ErrorCode::MissingPoint);
  try {
    FiniteSpace::from_named({"a", "b", "c"}, {{"a", {"a", "b"}}, {"b", {"b", "c"}}, {"c", {"c"}}});
  } catch (const Error& e) {
    std::string msg = e.what();
    CHECK(msg.find("'a'") != std::string::npos);
    CHECK(msg.find("'b'") != std::string::npos);
  }
}

TEST_CASE("open, interior, closure") {
  FiniteSpace s = sierpinski();
  auto u = s.universe();
  CHECK(s.is_open(th::set(u, {"b"})));
  CHECK_FALSE(s.is_open(th::set(u, {"a"})));
  CHECK(s.closure(th::set(u, {"a"})) == th::set(u, {"a"}));
  CHECK(s.closure(th::set(u, {"b"})) == s.points());
  CHECK(s.interior(s.points()) == s.points());
  CHECK(s.closure(PointSet()).empty());
  CHECK_THROWS_AS(s.require_open(th::set(u, {"a"})), Error);
}

TEST_CASE("opens, closures and connectedness match brute force on every small space") {
  for (std::size_t n = 0; n <= 4; ++n)
    for (const auto& s : oracle::all_spaces(n)) {
      oracle::Space o = oracle::from_library(s);
      std::vector<PointSet> mine = s.opens();
      std::vector<oracle::Bits> theirs = oracle::opens(o);
      REQUIRE(mine.size() == theirs.size());
      for (std::size_t i = 0; i < mine.size(); ++i) CHECK(mine[i].bits() == theirs[i]);
      // Alexandrov: intersections of opens are open.
      for (auto a : mine)
        for (auto b : mine) CHECK(s.is_open(a & b));
      for (oracle::Bits a = 0; a < (oracle::Bits{1} << n); ++a) {
        CHECK(s.closure(PointSet(a)).bits() == oracle::closure_set(o, a));
        CHECK(is_connected(s, PointSet(a)) == oracle::is_connected(o, a));
        PointSet in = s.interior(PointSet(a));
        CHECK(s.is_open(in));
        CHECK(in.subset_of(PointSet(a)));
        CHECK(s.open_hull(PointSet(a)) == [&] {
          PointSet h;
          for (auto w : mine)
            if (PointSet(a).subset_of(w)) { h = w; break; }
          for (auto w : mine)
            if (PointSet(a).subset_of(w) && w.subset_of(h)) h = w;
          return h;
        }());
      }
    }
}

TEST_CASE("number of labeled topologies") {
  std::size_t expected[] = {1, 1, 4, 29, 355};
  for (std::size_t n = 0; n <= 4; ++n) {
    CHECK(oracle::all_spaces(n).size() == expected[n]);
    CHECK(all_spaces(n).size() == expected[n]);
  }
}

TEST_CASE("specialization preorder") {
  FiniteSpace s = sierpinski();
  Preorder p = specialization_preorder(s);
  CHECK(p.related(0, 1));
  CHECK_FALSE(p.related(1, 0));
  FiniteSpace d = FiniteSpace::discrete(numbered_universe(3));
  CHECK(specialization_preorder(d) == Preorder::identity(d.universe(), d.points()));
  Stream i = directed_interval(1);
  auto u = i.space().universe();
  Preorder q = specialization_preorder(i.space());
  CHECK(th::related(q, "v0", "e1"));
  CHECK(th::related(q, "v1", "e1"));
  CHECK_FALSE(th::related(q, "v0", "v1"));
  CHECK_FALSE(th::related(q, "e1", "v0"));
}

TEST_CASE("continuity") {
  FiniteSpace s = sierpinski();
  CHECK(is_continuous(identity_point_map(2), s, s));
  CHECK(is_continuous(PointMap{1, 1}, s, s));
  CHECK(is_continuous(PointMap{0, 0}, s, s));
  CHECK_FALSE(is_continuous(PointMap{1, 0}, s, s));
  CHECK_THROWS_AS(require_continuous(PointMap{1, 0}, s, s), Error);
  CHECK_THROWS_AS(require_point_map(PointMap{0}, s, s), Error);
  CHECK_THROWS_AS(require_point_map(PointMap{0, 5}, s, s), Error);
}

TEST_CASE("continuity criteria agree on every map between small spaces") {
  auto s3 = oracle::all_spaces(3);
  auto s2 = oracle::all_spaces(2);
  for (const auto& a : s3)
    for (const auto& b : s2)
    {
      for (const auto& f : oracle::all_maps(3, 2))
        CHECK(is_continuous_by_opens(f, a, b) == is_continuous_by_specialization(f, a, b));
      for (const auto& f : oracle::all_maps(2, 3))
        CHECK(is_continuous_by_opens(f, b, a) == is_continuous_by_specialization(f, b, a));
    }
  Rng rng(1);
  for (int i = 0; i < 200; ++i) {
    FiniteSpace a = random_space(rng, 5);
    FiniteSpace b = random_space(rng, 4);
    PointMap f(5);
    for (auto& v : f) v = rng() % 4;
    CHECK(is_continuous_by_opens(f, a, b) == is_continuous_by_specialization(f, a, b));
  }
}

TEST_CASE("connectedness examples") {
  CHECK(is_connected(sierpinski(), sierpinski().points()));
  FiniteSpace d = FiniteSpace::discrete(numbered_universe(2));
  CHECK_FALSE(is_connected(d, d.points()));
  Stream c = directed_circle(2);
  auto u = c.space().universe();
  CHECK(is_connected(c.space(), c.space().points() - th::set(u, {"e1"})));
  CHECK(is_connected(c.space(), PointSet()));
}

TEST_CASE("product, subspace, quotient, coproduct spaces") {
  FiniteSpace s = sierpinski();
  ProductSpace p = product_space(s, s);
  CHECK(p.space.size() == 4);
  PointIndex aa = p.universe.at(0, 0);
  CHECK(p.space.min_open(aa) == p.space.points());
  CHECK(p.space.name(aa) == "(a,a)");

  Stream i = directed_interval(1);
  auto u = i.space().universe();
  Subspace sub = subspace(i.space(), th::set(u, {"v0", "v1"}));
  CHECK(sub.space.size() == 2);
  CHECK(sub.space == FiniteSpace::discrete(sub.space.universe()));
  CHECK_THROWS_AS(subspace(i.space(), PointSet(1ULL << 10)), Error);

  Stream i2 = directed_interval(2);
  auto u2 = i2.space().universe();
  std::vector<PointSet> classes{th::set(u2, {"v0", "v2"}), th::set(u2, {"v1"}), th::set(u2, {"e1"}),
                                th::set(u2, {"e2"})};
  QuotientSpace q = quotient_space(i2.space(), classes);
  CHECK(q.space == directed_circle(2).space());
  std::vector<PointSet> bad{th::set(u2, {"v0", "v2"}), th::set(u2, {"v1", "v2"})};
  CHECK_THROWS_AS(quotient_space(i2.space(), bad), Error);

  std::vector<FiniteSpace> fam{s, s};
  CoproductSpace cs = coproduct_space(fam);
  CHECK(cs.space.size() == 4);
  CHECK(cs.space.universe()->find("0:a").has_value());
  CHECK(cs.space.universe()->find("1:b").has_value());
}

TEST_CASE("space-level universal properties on small instances") {
  Rng rng(8);
  auto spaces2 = oracle::all_spaces(2);
  for (int trial = 0; trial < 6; ++trial) {
    FiniteSpace x = random_space(rng, 2);
    FiniteSpace y = random_space(rng, 2);
    ProductSpace p = product_space(x, y);
    for (const auto& z : spaces2) {
      std::size_t pairs = 0;
      for (const auto& f : oracle::all_maps(2, 2))
        for (const auto& g : oracle::all_maps(2, 2))
          if (is_continuous(f, z, x) && is_continuous(g, z, y)) {
            ++pairs;
            PointMap h(2);
            for (PointIndex k = 0; k < 2; ++k) h[k] = p.universe.at(f[k], g[k]);
            CHECK(is_continuous(h, z, p.space));
          }
      std::size_t lifts = 0;
      for (const auto& h : oracle::all_maps(2, p.space.size()))
        if (is_continuous(h, z, p.space)) ++lifts;
      CHECK(lifts == pairs);
    }
  }
  // Quotient: continuous maps out of the quotient are the class-constant continuous maps.
  for (int trial = 0; trial < 20; ++trial) {
    FiniteSpace x = random_space(rng, 4);
    auto classes = random_partition(rng, 4);
    QuotientSpace q = quotient_space(x, classes);
    for (const auto& z : oracle::all_spaces(2)) {
      std::size_t constant = 0;
      for (const auto& g : oracle::all_maps(4, 2)) {
        bool ok = is_continuous(g, x, z);
        for (PointIndex a = 0; a < 4 && ok; ++a)
          for (PointIndex b = 0; b < 4; ++b)
            if (q.projection[a] == q.projection[b] && g[a] != g[b]) ok = false;
        if (ok) ++constant;
      }
      std::size_t out = 0;
      for (const auto& h : oracle::all_maps(q.space.size(), 2))
        if (is_continuous(h, q.space, z)) ++out;
      CHECK(out == constant);
    }
  }
}
