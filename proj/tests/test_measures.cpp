#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "pruning/generate.hpp"
#include "pruning/measures.hpp"
#include "test_support.hpp"

using namespace pruning;
using testsupport::alt;
using testsupport::ints;

namespace {

Slate slate_of(std::vector<std::int32_t> members) { return Slate{std::move(members)}; }

}  // namespace

TEST_CASE("uniformity examples") {
  const Instance inst = ints({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 20}});
  // canonical order sorts lexicographically; the first three unit-style
  // points are indices 1..3, the outlier ends up at index 0.
  const int outlier = [&] {
    for (int i = 0; i < inst.n(); ++i) {
      if (inst.alt(i).coords[3] == 20) return i;
    }
    return -1;
  }();
  std::vector<std::int32_t> first_three;
  for (int i = 0; i < 4; ++i) {
    if (i != outlier) first_three.push_back(i);
  }
  CHECK(uniformity(inst, slate_of(first_three)) == 2);

  CHECK_THROWS_AS(uniformity(inst, slate_of({0})), ContractError);

  // Duplicate coordinates cannot pass ingestion; exercise the measure on a
  // hand-built struct to pin the degenerate value.
  Instance with_dup;
  with_dup.name = "dup";
  with_dup.alternatives = {alt({0, 1}), alt({0, 1}), alt({5, 0})};
  with_dup.kinds = {ObjectiveKind::cardinal, ObjectiveKind::cardinal};
  CHECK(uniformity(with_dup, slate_of({0, 1})) == 0);
}

TEST_CASE("uniformity matches the pairwise-min oracle on random slates") {
  Rng rng(11);
  for (int round = 0; round < 50; ++round) {
    const Instance inst = random_pareto_2d(rng, 8, 40);
    Slate slate;
    for (int i = 0; i < inst.n(); ++i) {
      if (rng.below(2) == 0) slate.members.push_back(i);
    }
    if (slate.k() < 2) continue;
    CHECK(uniformity(inst, slate) == testsupport::oracle_uniformity(inst, slate));
  }
}

TEST_CASE("coverage examples") {
  const Instance inst = ints({{3, -10, 0}, {1, 3, 0}, {2, 2, 1}, {0, 0, 3}});
  const int a = find_point(inst, alt({3, -10, 0}), 1);
  const int c = find_point(inst, alt({2, 2, 1}), 1);
  REQUIRE(a >= 0);
  REQUIRE(c >= 0);
  std::vector<std::int32_t> members{static_cast<std::int32_t>(a), static_cast<std::int32_t>(c)};
  std::sort(members.begin(), members.end());
  CHECK(coverage(inst, slate_of(members)) == 6);

  const Instance modified = ints({{3, 1, 0}, {2, 2, 1}, {1, 3, 0}, {0, 0, 3}});
  const int c2 = find_point(modified, alt({2, 2, 1}), 1);
  const int d2 = find_point(modified, alt({0, 0, 3}), 1);
  std::vector<std::int32_t> members2{static_cast<std::int32_t>(c2), static_cast<std::int32_t>(d2)};
  std::sort(members2.begin(), members2.end());
  CHECK(coverage(modified, slate_of(members2)) == 3);

  CHECK(coverage(inst, slate_of({0, 1, 2, 3})) == 0);
  CHECK_THROWS_AS(coverage(inst, slate_of({})), ContractError);
}

TEST_CASE("directed coverage examples") {
  const Instance inst = ints({{0, 1}, {2, 0}});
  const int right = find_point(inst, alt({2, 0}), 1);
  CHECK(directed_coverage(inst, slate_of({static_cast<std::int32_t>(right)})) == 1);
  CHECK(directed_coverage(inst, slate_of({0, 1})) == 0);
}

TEST_CASE("cover measures match nested-loop oracles on random slates") {
  Rng rng(12);
  for (int round = 0; round < 50; ++round) {
    const Instance inst = random_lift_4d(rng, 7, 30);
    Slate slate;
    for (int i = 0; i < inst.n(); ++i) {
      if (rng.below(2) == 0) slate.members.push_back(i);
    }
    if (slate.k() < 1) slate.members.push_back(0);
    CHECK(coverage(inst, slate) ==
          testsupport::oracle_cover(inst, slate, testsupport::oracle_manhattan));
    CHECK(directed_coverage(inst, slate) ==
          testsupport::oracle_cover(inst, slate, testsupport::oracle_directed));
  }
}

TEST_CASE("slate growth never worsens the three measures") {
  Rng rng(13);
  for (int round = 0; round < 30; ++round) {
    const Instance inst = random_pareto_2d(rng, 9, 50);
    Slate small;
    Slate big;
    for (int i = 0; i < inst.n(); ++i) {
      const auto draw = rng.below(3);
      if (draw == 0) small.members.push_back(i);
      if (draw != 2) big.members.push_back(i);
    }
    // ensure small subset of big and sizes >= 2
    Slate merged;
    for (std::int32_t m : small.members) {
      if (!big.contains(m)) big.members.push_back(m);
    }
    std::sort(big.members.begin(), big.members.end());
    while (small.k() < 2) {
      for (std::int32_t m : big.members) {
        if (!small.contains(m)) {
          small.members.push_back(m);
          std::sort(small.members.begin(), small.members.end());
          break;
        }
      }
      if (big.k() < 2) big.members.push_back((small.members.back() + 1) % inst.n());
      std::sort(big.members.begin(), big.members.end());
      big.members.erase(std::unique(big.members.begin(), big.members.end()), big.members.end());
    }
    CHECK(coverage(inst, big) <= coverage(inst, small));
    CHECK(directed_coverage(inst, big) <= directed_coverage(inst, small));
    if (big.k() > small.k()) CHECK(uniformity(inst, big) <= uniformity(inst, small));
  }
}

TEST_CASE("hypervolume examples") {
  const Instance one = ints({{1, 1}});
  CHECK(hypervolume(one, slate_of({0}), alt({0, 0})) == 1);

  const Instance two = ints({{1, 2}, {2, 1}});
  CHECK(hypervolume(two, slate_of({0, 1}), alt({0, 0})) == 3);

  CHECK_THROWS_AS(hypervolume(two, slate_of({0}), alt({1, 0})), InputError);
}

TEST_CASE("hypervolume equals inclusion-exclusion on random slates") {
  Rng rng(14);
  for (int round = 0; round < 60; ++round) {
    const bool lifted = rng.below(2) == 1;
    const Instance inst =
        lifted ? random_lift_4d(rng, 6, 20) : random_pareto_2d(rng, 7, 30);
    Slate slate;
    for (int i = 0; i < inst.n(); ++i) {
      if (rng.below(2) == 0) slate.members.push_back(i);
    }
    if (slate.k() == 0) slate.members.push_back(0);
    const Alternative ref = default_reference_point(inst);
    CHECK(hypervolume(inst, slate, ref) == testsupport::oracle_hypervolume_ie(inst, slate, ref));
  }
}

TEST_CASE("hypervolume within three sigma of a Monte Carlo estimate") {
  Rng rng(15);
  for (int round = 0; round < 4; ++round) {
    const Instance inst = round % 2 == 0 ? random_pareto_2d(rng, 8, 25)
                                         : random_plane_3d(rng, 8, 20);
    Slate slate;
    for (int i = 0; i < inst.n(); ++i) slate.members.push_back(i);
    const Alternative ref = default_reference_point(inst);
    const BigInt exact = hypervolume(inst, slate, ref);

    // Sampling box spans ref .. componentwise max.
    Alternative top = inst.alt(0);
    for (int i = 1; i < inst.n(); ++i) {
      for (int c = 0; c < inst.d(); ++c) {
        top.coords[c] = std::max(top.coords[c], inst.alt(i).coords[c]);
      }
    }
    BigInt box = 1;
    for (int c = 0; c < inst.d(); ++c) box *= BigInt(top.coords[c] - ref.coords[c]);

    const int samples = 1'000'000;
    int hits = 0;
    for (int s = 0; s < samples; ++s) {
      Alternative p;
      for (int c = 0; c < inst.d(); ++c) {
        p.coords.push_back(ref.coords[c] +
                           static_cast<Coord>(rng.below(top.coords[c] - ref.coords[c])));
      }
      // p counts when it lies strictly inside some member's box; sampling
      // on the integer lattice of a scaled grid is uniform over the box.
      for (int i = 0; i < inst.n(); ++i) {
        bool inside = true;
        for (int c = 0; c < inst.d(); ++c) {
          inside = inside && p.coords[c] >= ref.coords[c] && p.coords[c] < inst.alt(i).coords[c];
        }
        if (inside) {
          ++hits;
          break;
        }
      }
    }
    const double p_exact = Rational(exact, box).convert_to<double>();
    const double p_hat = static_cast<double>(hits) / samples;
    const double sigma = std::sqrt(p_exact * (1 - p_exact) / samples);
    CHECK(std::abs(p_hat - p_exact) <= 3 * sigma + 1e-9);
  }
}

TEST_CASE("hypervolume is monotone and permutation invariant") {
  Rng rng(16);
  const Instance inst = random_pareto_2d(rng, 8, 30);
  const Alternative ref = default_reference_point(inst);
  Slate grow;
  BigInt last = 0;
  for (int i = 0; i < inst.n(); ++i) {
    grow.members.push_back(i);
    const BigInt hv = hypervolume(inst, grow, ref);
    CHECK(hv >= last);
    last = hv;
  }
  // Member order cannot matter: slates are canonical sorted index sets, so
  // compare against evaluating a permuted instance subset.
  const BigInt all = hypervolume(inst, grow, ref);
  Slate reversed;
  for (int i = inst.n() - 1; i >= 0; --i) reversed.members.push_back(i);
  std::sort(reversed.members.begin(), reversed.members.end());
  CHECK(hypervolume(inst, reversed, ref) == all);
}

TEST_CASE("avg sum objective") {
  // The (1,2)/(3,4) pair is comparable, so build the holder directly.
  Instance inst;
  inst.name = "avg";
  inst.alternatives = {alt({1, 2}), alt({3, 4})};
  inst.kinds = {ObjectiveKind::cardinal, ObjectiveKind::cardinal};
  CHECK(avg_sum_objective(inst, slate_of({0, 1})) == Rational(5));

  const Instance zero = ints({{0, 0}});
  CHECK(avg_sum_objective(zero, slate_of({0})) == Rational(0));

  // Linearity: scaling all coordinates by c scales the result by c.
  Instance scaled = inst;
  for (Alternative& a : scaled.alternatives) {
    for (Coord& c : a.coords) c *= 3;
  }
  CHECK(avg_sum_objective(scaled, slate_of({0, 1})) ==
        3 * avg_sum_objective(inst, slate_of({0, 1})));
}
