#include <doctest.h>

#include "pruning/geometry.hpp"
#include "pruning/generate.hpp"
#include "test_support.hpp"

using namespace pruning;
using testsupport::alt;

TEST_CASE("dominance basics") {
  CHECK(dominates(alt({1, 1}), alt({0, 1})));
  CHECK_FALSE(dominates(alt({0, 1}), alt({1, 1})));
  CHECK_FALSE(dominates(alt({1, 0}), alt({0, 1})));
  CHECK_FALSE(dominates(alt({0, 1}), alt({1, 0})));
  CHECK_FALSE(dominates(alt({2, 3}), alt({2, 3})));  // no strict coordinate
  CHECK(weakly_dominates(alt({2, 3}), alt({2, 3})));
  CHECK_THROWS_AS(dominates(alt({1}), alt({1, 2})), InputError);
}

TEST_CASE("pareto filter examples") {
  const std::vector<Alternative> in{alt({1, 0}), alt({0, 1}), alt({0, 0})};
  const auto out = pareto_filter(in);
  REQUIRE(out.size() == 2);
  CHECK(out[0] == alt({1, 0}));
  CHECK(out[1] == alt({0, 1}));

  const std::vector<Alternative> single{alt({5})};
  CHECK(pareto_filter(single) == single);
}

TEST_CASE("pareto filter matches the pairwise oracle on random sets") {
  Rng rng(2024);
  for (int round = 0; round < 20; ++round) {
    std::vector<Alternative> points;
    const int d = 2 + static_cast<int>(rng.below(3));
    for (int i = 0; i < 50; ++i) {
      Alternative a;
      for (int c = 0; c < d; ++c) a.coords.push_back(rng.range(-8, 8));
      points.push_back(std::move(a));
    }
    const auto got = pareto_filter(points);
    const auto expected = testsupport::oracle_pareto(points);
    CHECK(got == expected);

    // Idempotence and mutual non-domination of the output.
    CHECK(pareto_filter(got) == got);
    for (std::size_t i = 0; i < got.size(); ++i) {
      for (std::size_t j = 0; j < got.size(); ++j) {
        if (i != j) CHECK_FALSE(dominates(got[j], got[i]));
      }
    }
  }
}

TEST_CASE("manhattan examples") {
  CHECK(manhattan(alt({2, 0, 0}), alt({0, -2, 1})) == 5);
  CHECK(manhattan(alt({7, -3}), alt({7, -3})) == 0);
  // (1, 0) vs (0, 0.1) in tenths: 1.1
  const Instance tenths = testsupport::ints({{10, 0}, {0, 1}}, 10);
  CHECK(manhattan(tenths.alt(0), tenths.alt(1)) == 11);
  CHECK(Rational(manhattan(tenths.alt(0), tenths.alt(1)), tenths.scale) == Rational(11, 10));
}

TEST_CASE("directed distance examples") {
  // (1, 0) vs (0, 0.1) in tenths: 1 one way, 0.1 back.
  CHECK(directed(alt({10, 0}), alt({0, 1})) == 10);
  CHECK(directed(alt({0, 1}), alt({10, 0})) == 1);
  CHECK(directed(alt({4, 4}), alt({4, 4})) == 0);
  // dominated by: all differences non-positive
  CHECK(directed(alt({0, 1}), alt({1, 1})) == 0);
}

TEST_CASE("norm duality and metric axioms on random pairs") {
  Rng rng(77);
  for (int round = 0; round < 500; ++round) {
    const int d = 1 + static_cast<int>(rng.below(5));
    Alternative x, y, z;
    for (int c = 0; c < d; ++c) {
      x.coords.push_back(rng.range(-100, 100));
      y.coords.push_back(rng.range(-100, 100));
      z.coords.push_back(rng.range(-100, 100));
    }
    CHECK(directed(x, y) + directed(y, x) == manhattan(x, y));
    CHECK(manhattan(x, y) == manhattan(y, x));
    CHECK((manhattan(x, y) == 0) == (x == y));
    CHECK(manhattan(x, z) <= manhattan(x, y) + manhattan(y, z));
    if (weakly_dominates(y, x)) CHECK(directed(x, y) == 0);
  }
}
