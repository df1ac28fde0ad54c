#include <doctest.h>

#include <random>
#include <set>

#include "support.hpp"
#include "zzl/poset.hpp"

using namespace zzl;
using namespace zzl::poset;

namespace {

MonotoneFn fn(const Poset& s, const Poset& t, std::vector<std::size_t> m) {
  return MonotoneFn(s, t, std::move(m));
}

PosetFunctor chain2(const Poset& a, const Poset& b, std::vector<std::size_t> m) {
  PosetFunctor::Arrows arrows;
  arrows.emplace(std::pair{std::size_t{0}, std::size_t{1}}, fn(a, b, std::move(m)));
  return PosetFunctor(Poset::chain(2), {a, b}, std::move(arrows));
}

bool is_chain(const Poset& p) {
  for (std::size_t a = 0; a < p.size(); ++a) {
    for (std::size_t b = 0; b < p.size(); ++b) {
      if (!p.comparable(a, b)) return false;
    }
  }
  return true;
}

// invariants checked from scratch, independent of check_injectification
void expect_injectification(const PosetFunctor& p, const Injectification& inj) {
  const Poset& J = p.index();
  REQUIRE(inj.hat.index() == J);
  for (std::size_t i = 0; i < J.size(); ++i) {
    const Poset& h = inj.hat.object(i);
    CHECK(h.check().empty());
    CHECK(inj.epsilon[i].source() == h);
    CHECK(inj.epsilon[i].target() == p.object(i));
    CHECK(inj.epsilon[i].surjective());
    // carrier: copies of P(j) for every j <= i
    std::multiset<std::pair<std::size_t, std::size_t>> labels, expect;
    for (const Element& e : inj.origin[i]) labels.insert({e.index, e.element});
    for (std::size_t j = 0; j < J.size(); ++j) {
      if (!J.leq(j, i)) continue;
      for (std::size_t x = 0; x < p.object(j).size(); ++x) expect.insert({j, x});
    }
    CHECK(labels == expect);
    for (std::size_t e = 0; e < h.size(); ++e) {
      const Element l = inj.origin[i][e];
      // epsilon sends a copy of x in P(j) to the image of x under P(j <= i)
      CHECK(inj.epsilon[i](e) == p.composite(l.index, i)[l.element]);
    }
    // same-origin pairs keep their order; for chain fibers they gain none
    for (std::size_t u = 0; u < h.size(); ++u) {
      for (std::size_t v = 0; v < h.size(); ++v) {
        const Element a = inj.origin[i][u], b = inj.origin[i][v];
        if (a.index != b.index) continue;
        const Poset& origin = p.object(a.index);
        if (origin.leq(a.element, b.element)) CHECK(h.leq(u, v));
        if (is_chain(origin)) CHECK(h.leq(u, v) == origin.leq(a.element, b.element));
      }
    }
  }
  for (const auto& [pair, f] : inj.hat.arrows()) {
    const auto [a, b] = pair;
    CHECK(f.injective());
    for (std::size_t x = 0; x < f.source().size(); ++x) {
      // labels are preserved and the naturality square commutes
      CHECK(inj.origin[b][f(x)] == inj.origin[a][x]);
      CHECK(inj.epsilon[b](f(x)) == p.arrow(a, b)(inj.epsilon[a](x)));
    }
  }
}

}  // namespace

TEST_SUITE("poset") {

TEST_CASE("construction and closure") {
  const Poset p = Poset::from_relation(3, {{0, 1}, {1, 2}});
  CHECK(p.leq(0, 2));
  CHECK_FALSE(p.leq(2, 0));
  CHECK(p.covers() == Relation{{0, 1}, {1, 2}});
  CHECK(p.strict_pairs() == Relation{{0, 1}, {0, 2}, {1, 2}});
  CHECK(p.check().empty());
  CHECK_THROWS_AS(Poset::from_relation(2, {{0, 1}, {1, 0}}), ArgumentError);
  CHECK_FALSE(Poset::from_matrix(2, {1, 1, 1, 1}).check().empty());
  const Poset v = Poset::from_relation(3, {{2, 0}});
  CHECK(v.linear_extension() == std::vector<std::size_t>{1, 2, 0});
  CHECK(v.minimal_elements() == std::vector<std::size_t>{1, 2});
}

TEST_CASE("monotone functions") {
  const Poset c = Poset::chain(2);
  CHECK_THROWS_AS(fn(c, c, {1, 0}), ArgumentError);
  CHECK_THROWS_AS(fn(c, c, {0, 2}), ArgumentError);
  CHECK(fn(c, Poset::chain(1), {0, 0}).surjective());
  CHECK_FALSE(fn(c, Poset::chain(1), {0, 0}).injective());
  CHECK(compose(fn(c, c, {0, 1}), fn(c, Poset::chain(1), {0, 0})) ==
        fn(c, Poset::chain(1), {0, 0}));
}

TEST_CASE("poset reflection") {
  const Reflection id = poset_reflection(3, {{0, 0}, {1, 1}, {2, 2}, {0, 1}});
  CHECK_FALSE(id.collapsed);
  CHECK(id.poset.size() == 3);
  const Reflection cyc = poset_reflection(2, {{0, 0}, {1, 1}, {0, 1}, {1, 0}});
  CHECK(cyc.collapsed);
  CHECK(cyc.poset.size() == 1);
  const Reflection tr = poset_reflection(3, {{0, 1}, {1, 2}});
  CHECK(tr.poset.leq(tr.quotient[0], tr.quotient[2]));
}

TEST_CASE("colimits") {
  const Poset one = Poset::chain(1);
  SUBCASE("single object") {
    const PosetFunctor f(Poset::chain(1), {Poset::chain(3)}, {});
    const Colimit c = colimit(f, {0});
    CHECK(c.poset == Poset::chain(3));
    CHECK(c.leg(0) == std::vector<std::size_t>{0, 1, 2});
    CHECK(c.injective());
  }
  SUBCASE("pushout of a span") {
    // b <- a -> c as the poset 0 < 1, 0 < 2
    const Poset shape = Poset::from_relation(3, {{0, 1}, {0, 2}});
    PosetFunctor::Arrows arrows;
    arrows.emplace(std::pair{std::size_t{0}, std::size_t{1}}, fn(one, Poset::chain(2), {0}));
    arrows.emplace(std::pair{std::size_t{0}, std::size_t{2}}, fn(one, Poset::chain(3), {2}));
    const PosetFunctor f(shape, {one, Poset::chain(2), Poset::chain(3)}, std::move(arrows));
    const Colimit c = colimit(f, {0, 1, 2});
    CHECK(c.poset.size() == 2 + 3 - 1);
    CHECK(c.injective());
    CHECK(c.leg(1)[0] == c.leg(2)[2]);
    // competing cocone into a point
    const auto m = mediate(c, one, {{0}, {0, 0}, {0, 0, 0}});
    REQUIRE(m.has_value());
    CHECK(m->target() == one);
  }
  SUBCASE("coproduct") {
    const PosetFunctor f(Poset::discrete(2), {Poset::chain(2), Poset::chain(1)}, {});
    const Colimit c = colimit(f, {0, 1});
    CHECK(c.poset.size() == 3);
    CHECK_FALSE(c.poset.comparable(c.leg(0)[0], c.leg(1)[0]));
  }
}

TEST_CASE("mono-epi factorization") {
  SUBCASE("identity on a 2-chain") {
    const Poset c = Poset::chain(2);
    const Factorization f = factorize_mono_epi(MonotoneFn::identity(c));
    CHECK(f.middle.size() == 4);
    CHECK(f.middle.less(0, 3));  // c0 < x1
    CHECK(f.middle.less(2, 1));  // x0 < c1
    CHECK_FALSE(f.middle.comparable(0, 2));
    CHECK(f.right.surjective());
    CHECK(f.left.injective());
    CHECK(compose(f.left, f.right) == MonotoneFn::identity(c));
  }
  SUBCASE("constant from a 2-chain") {
    const Factorization f = factorize_mono_epi(fn(Poset::chain(2), Poset::chain(1), {0, 0}));
    CHECK(f.middle.size() == 3);
    CHECK(f.middle.less(0, 1));
    CHECK_FALSE(f.middle.comparable(0, 2));
    CHECK_FALSE(f.middle.comparable(1, 2));
  }
  SUBCASE("empty domain") {
    const Factorization f = factorize_mono_epi(fn(Poset::chain(0), Poset::chain(2), {}));
    CHECK(f.middle == Poset::chain(2));
    CHECK(f.right.mapping().size() == 2);
  }
  SUBCASE("random maps") {
    std::mt19937 rng(11);
    for (int t = 0; t < 200; ++t) {
      const Poset s = test::random_poset(rng, rng() % 7, 0.4);
      const Poset x = test::random_poset(rng, 1 + rng() % 6, 0.4);
      const auto maps = test::monotone_maps(s, x);
      if (maps.empty()) continue;
      const MonotoneFn p(s, x, maps[rng() % maps.size()]);
      const Factorization f = factorize_mono_epi(p);
      REQUIRE(f.middle.check().empty());
      CHECK(f.left.injective());
      CHECK(f.right.surjective());
      CHECK(compose(f.left, f.right) == p);
    }
  }
}

TEST_CASE("injectification examples") {
  SUBCASE("single index") {
    const PosetFunctor p(Poset::chain(1), {Poset::chain(3)}, {});
    const Injectification inj = injectify(p);
    CHECK(inj.hat.object(0) == Poset::chain(3));
    CHECK(inj.epsilon[0] == MonotoneFn::identity(Poset::chain(3)));
  }
  SUBCASE("constant arrow") {
    const PosetFunctor p = chain2(Poset::chain(2), Poset::chain(1), {0, 0});
    const Injectification inj = injectify(p);
    const Poset& h = inj.hat.object(1);
    REQUIRE(h.size() == 3);
    const auto c0 = inj.find(1, {0, 0}), c1 = inj.find(1, {0, 1}), star = inj.find(1, {1, 0});
    REQUIRE((c0 && c1 && star));
    CHECK(h.less(*c0, *c1));
    CHECK_FALSE(h.comparable(*c0, *star));
    CHECK_FALSE(h.comparable(*c1, *star));
    for (std::size_t e = 0; e < 3; ++e) CHECK(inj.epsilon[1](e) == 0);
    expect_injectification(p, inj);
  }
  SUBCASE("injective arrow") {
    const PosetFunctor p = chain2(Poset::chain(2), Poset::chain(3), {0, 2});
    const Injectification inj = injectify(p);
    CHECK(inj.hat.object(1).size() == 5);
    expect_injectification(p, inj);
    CHECK(check_injectification(p, inj).empty());
  }
}

TEST_CASE("cross relations can order incomparable elements of one origin") {
  // a, b incomparable below, sent to the ends of a 3-chain: a < 1 < b above
  const PosetFunctor p = chain2(Poset::discrete(2), Poset::chain(3), {0, 2});
  const Injectification inj = injectify(p);
  const auto a = inj.find(1, {0, 0}), b = inj.find(1, {0, 1}), mid = inj.find(1, {1, 1});
  REQUIRE((a && b && mid));
  CHECK(inj.hat.object(1).less(*a, *mid));
  CHECK(inj.hat.object(1).less(*mid, *b));
  CHECK(inj.hat.object(1).less(*a, *b));
  expect_injectification(p, inj);
}

TEST_CASE("a collapsing colimit is reported") {
  const PosetFunctor p = test::collapsing_functor();
  try {
    injectify(p);
    FAIL("expected an injectification error");
  } catch (const InjectificationError& e) {
    CHECK(e.index() == 3);
    CHECK_FALSE(e.offending().empty());
  }
}

TEST_CASE("randomized injectification with chain fibers") {
  std::mt19937 rng(31);
  for (int t = 0; t < 200; ++t) {
    const PosetFunctor p = test::random_functor(rng, 5, 4, true);
    const Injectification inj = injectify(p);
    expect_injectification(p, inj);
  }
}

TEST_CASE("randomized injectification") {
  std::mt19937 rng(20240);
  int built = 0, rejected = 0;
  for (int t = 0; t < 200; ++t) {
    const PosetFunctor p = test::random_functor(rng, 5, 4);
    try {
      const Injectification inj = injectify(p);
      expect_injectification(p, inj);
      CHECK(check_injectification(p, inj).empty());
      CHECK(test::injectification_violation(p, inj).empty());
      ++built;
    } catch (const InjectificationError& e) {
      // must name the offending shape indices
      CHECK_FALSE(e.offending().empty());
      ++rejected;
    }
  }
  CHECK(built + rejected == 200);
  MESSAGE("built " << built << ", rejected " << rejected);
}

TEST_CASE("lift along the identity") {
  std::mt19937 rng(5);
  for (int t = 0; t < 30; ++t) {
    const PosetFunctor p = test::random_functor(rng, 4, 3);
    Injectification inj;
    try {
      inj = injectify(p);
    } catch (const InjectificationError&) {
      continue;
    }
    std::vector<MonotoneFn> alpha;
    for (const auto& o : p.objects()) alpha.push_back(MonotoneFn::identity(o));
    const auto lifted = lift(p, inj, p, inj, alpha);
    REQUIRE(lifted.size() == p.index().size());
    for (std::size_t i = 0; i < lifted.size(); ++i) {
      CHECK(lifted[i] == MonotoneFn::identity(inj.hat.object(i)));
    }
  }
}

}
