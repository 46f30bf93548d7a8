#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>
#include <utility>

#include "adiabat/errors.hpp"
#include "adiabat/models/rubbing.hpp"
#include "adiabat/rng.hpp"

using namespace adiabat;

namespace {
bool closed(const TwoBodyState& a, const TwoBodyState& b) {
  return rubbing_precedes(a, b) == Decision::Precedes;
}
}  // namespace

TEST_CASE("two-body closed form on the worked pairs") {
  // pure rubbing: raise either energy
  CHECK(closed({1.0, 4.0}, {2.0, 4.0}));
  CHECK(closed({1.0, 4.0}, {1.0, 7.0}));
  CHECK_FALSE(closed({2.0, 4.0}, {1.0, 4.0}));

  // equilibrate then rub: min of target at least the mean
  CHECK(closed({1.0, 5.0}, {3.0, 3.0}));
  CHECK(closed({1.0, 5.0}, {3.0, 17.0}));
  CHECK_FALSE(closed({1.0, 5.0}, {0.5, 100.0}));

  // literal coordinates, no sorting
  CHECK_FALSE(closed({5.0, 1.0}, {1.0, 5.0}));
  CHECK(closed({5.0, 1.0}, {3.0, 3.0}));

  // reflexive
  CHECK(closed({2.5, 0.5}, {2.5, 0.5}));
}

TEST_CASE("incomparable pattern pairs stay incomparable") {
  // U1' < U1 < U2 < U2' with a strictly larger total
  CHECK_FALSE(closed({2.0, 3.0}, {1.0, 4.5}));
  CHECK_FALSE(closed({1.0, 4.5}, {2.0, 3.0}));

  Rng rng(7);
  for (int i = 0; i < 200; ++i) {
    TwoBodyState a{rng.uniform(1.0, 2.0), rng.uniform(3.0, 4.0)};
    TwoBodyState b{a.U1 - rng.uniform(0.1, 0.9),
                   a.U2 + rng.uniform(1.0, 3.0)};
    REQUIRE(b.U1 < a.U1);
    REQUIRE(b.U2 > a.U2);
    REQUIRE(b.U1 + b.U2 > a.U1 + a.U2);
    CHECK_FALSE(closed(a, b));
    CHECK_FALSE(closed(b, a));
  }
}

TEST_CASE("grid reachability matches the closed form cell by cell") {
  auto cells = rubbing_reachable_grid({1.0, 5.0}, 1.0, {0.0, 8.0});
  std::set<std::pair<double, double>> got;
  for (const auto& c : cells) got.insert({c.U1, c.U2});
  CHECK(got.size() == cells.size());  // no duplicates

  std::set<std::pair<double, double>> want;
  for (int i = 0; i <= 8; ++i) {
    for (int j = 0; j <= 8; ++j) {
      if (closed({1.0, 5.0}, {double(i), double(j)}))
        want.insert({double(i), double(j)});
    }
  }
  CHECK(got == want);

  // spot cells: the equilibrated mean is in, cooling is not
  CHECK(got.count({3.0, 3.0}) == 1);
  CHECK(got.count({1.0, 5.0}) == 1);
  CHECK(got.count({2.0, 8.0}) == 1);
  CHECK(got.count({0.0, 0.0}) == 0);
  CHECK(got.count({2.0, 0.0}) == 0);
}

TEST_CASE("grid rejects unaligned or degenerate input") {
  CHECK_THROWS_AS(rubbing_reachable_grid({0.5, 1.0}, 1.0, {0.0, 4.0}), Error);
  CHECK_THROWS_AS(rubbing_reachable_grid({1.0, 1.0}, -1.0, {0.0, 4.0}), Error);
  CHECK_THROWS_AS(rubbing_reachable_grid({5.0, 1.0}, 1.0, {0.0, 4.0}), Error);
}

TEST_CASE("heat-content dominance extends the closed form on two bodies") {
  Rng rng(11);
  RubbingOracle oracle;
  int dominance_only = 0;
  for (int i = 0; i < 800; ++i) {
    TwoBodyState a{rng.uniform(0.0, 6.0), rng.uniform(0.0, 6.0)};
    TwoBodyState b{rng.uniform(0.0, 6.0), rng.uniform(0.0, 6.0)};
    bool dom = oracle.decide(make_two_body(a), make_two_body(b)) ==
               Decision::Precedes;
    // dominance is the coarser relation: the closed form implies it
    if (closed(a, b)) CHECK(dom);
    if (dom && !closed(a, b)) ++dominance_only;
  }
  CHECK(dominance_only > 0);
}

TEST_CASE("dominance-only pair and a genuinely incomparable pair") {
  RubbingOracle oracle;
  auto dom = [&](TwoBodyState a, TwoBodyState b) {
    return oracle.decide(make_two_body(a), make_two_body(b)) ==
           Decision::Precedes;
  };
  // (1,4) -> (2,3.5): every clipped heat content rises once bodies may also
  // be cut, yet neither two-body move sequence reaches the target
  CHECK_FALSE(closed({1.0, 4.0}, {2.0, 3.5}));
  CHECK(dom({1.0, 4.0}, {2.0, 3.5}));
  CHECK_FALSE(dom({2.0, 3.5}, {1.0, 4.0}));

  // the pattern pair is incomparable for dominance too
  CHECK_FALSE(dom({2.0, 3.0}, {1.0, 4.5}));
  CHECK_FALSE(dom({1.0, 4.5}, {2.0, 3.0}));
}

TEST_CASE("dominance handles many bodies and mixed capacities") {
  RubbingOracle oracle;
  auto one = [](double c, double u) { return CompoundState::of(make_body(c, u)); };
  // four unit bodies pooled toward the common mean
  auto x = compose(compose(one(1, 0), one(1, 2)), compose(one(1, 4), one(1, 6)));
  auto y = compose(compose(one(1, 3), one(1, 3)), compose(one(1, 3), one(1, 3)));
  CHECK(oracle.decide(x, y) == Decision::Precedes);
  CHECK(oracle.decide(y, x) == Decision::NotPrecedes);

  // capacities 2 and 1, same total energy: temperatures (1, 4) can reach the
  // fully equilibrated (2, 2) but not come back
  auto a = compose(one(2.0, 2.0), one(1.0, 4.0));
  auto b = compose(one(2.0, 4.0), one(1.0, 2.0));
  CHECK(oracle.decide(a, b) == Decision::Precedes);
  CHECK(oracle.decide(b, a) == Decision::NotPrecedes);

  // capacity mismatch is a different comparability class
  CHECK_THROWS_AS(oracle.decide(a, one(1.5, 1.0)), Error);
}

TEST_CASE("oracle rejects malformed bodies and keys classes by capacity") {
  RubbingOracle oracle;
  auto good = make_two_body({1.0, 2.0});
  CHECK(oracle.class_of(good) == "rubbing:C=2");
  CHECK_THROWS_AS(oracle.decide(good, CompoundState::of(make_body(1.0, -0.5))),
                  Error);
  CHECK_THROWS_AS(oracle.class_of(CompoundState::of(make_body(-1.0, 0.5))),
                  Error);

  TwoBodySampler sampler(0.0, 6.0);
  Rng rng(3);
  auto s = sampler.sample(rng);
  CHECK(s.parts.size() == 2);
  CHECK(oracle.decide(s, s) == Decision::Precedes);
}
