#include <doctest.h>

#include <cmath>

#include "ascenter/random.hpp"
#include "ascenter/seq_metric.hpp"
#include "test_util.hpp"

using namespace ascenter;
using namespace ascenter::test;

TEST_CASE("tail sets") {
  const RVec a = rv({"7"}), b = rv({"1"}), c = rv({"2"});
  const auto s = sup({a}, {b, c});
  CHECK(tail_set(s, 1).points == FinitePointSet{b, c, a});
  CHECK(tail_set(s, 2).points == FinitePointSet{b, c});
  for (std::size_t n = 2; n < 10; ++n) CHECK(tail_set(s, n).points == FinitePointSet{b, c});
  CHECK(tail_set(sup({}, {a}), 4).points == FinitePointSet{a});
  CHECK_THROWS(tail_set(s, 0));
}

TEST_CASE("tail sets shrink") {
  Rng rng(8);
  for (int t = 0; t < 200; ++t) {
    const auto s = random_finite(rng, SpaceKind::sup_finite, GenOptions{});
    for (std::size_t n = 1; n < s.joint_start() + 2; ++n) {
      const auto big = tail_set(s, n).points, small = tail_set(s, n + 1).points;
      for (const auto& p : small) CHECK(std::find(big.begin(), big.end(), p) != big.end());
    }
  }
}

TEST_CASE("Hausdorff distance") {
  const FinitePointSet a{rv({"0", "0"})}, b{rv({"3", "4"})};
  CHECK(hausdorff_distance(a, b, Norm::sup()).exact() == 4);
  CHECK(hausdorff_distance(a, b, Norm::one()).exact() == 7);
  CHECK(hausdorff_distance(a, b, Norm::euclid()).value() == doctest::Approx(5.0).epsilon(1e-15));
  const FinitePointSet c{rv({"0", "0"}), rv({"1", "0"})};
  CHECK(hausdorff_distance(a, c, Norm::sup()).exact() == 1);
  CHECK_THROWS(hausdorff_distance(a, FinitePointSet{}, Norm::sup()));
}

TEST_CASE("pseudometric examples") {
  const auto d = pseudometric_d(pair_x(), pair_y(), Norm::euclid());
  CHECK(std::abs(d.value() - std::sqrt(2.0)) <= 1e-12);
  const auto s = sup({rv({"4", "4"})}, {rv({"0", "1"}), rv({"2", "-1"}), rv({"1", "1"})});
  CHECK(pseudometric_d(s, s.forward(), Norm::sup()).exact() == 0);
  CHECK(pseudometric_d(s, s.forward().forward(), Norm::sup()).exact() == 0);
  const auto u = sup({}, {rv({"1", "2"})}), v = sup({rv({"0", "0"})}, {rv({"-1", "5"})});
  CHECK(pseudometric_d(u, v, Norm::sup()).exact() == 3);
  CHECK(pseudometric_d(u, v, Norm::one()).exact() == 5);
  CHECK_THROWS_AS(pseudometric_d(u, spiked({rv({"0", "0"})}, {1}), Norm::sup()), KindMismatch);
  CHECK_THROWS_AS(pseudometric_d(spiked({rv({"0"})}, {1}), spiked({rv({"0"})}, {1}), Norm::sup()), KindMismatch);
  CHECK_THROWS(pseudometric_d(u, sup({}, {rv({"1"})}), Norm::sup()));
}

TEST_CASE("truncated pseudometric") {
  const auto b = pseudometric_d_truncated(pair_x(), pair_y(), 20, 1, Norm::euclid());
  CHECK(b.stabilized);
  CHECK(std::abs(b.lo.value() - std::sqrt(2.0)) <= 1e-12);
  CHECK(std::abs(b.hi.value() - std::sqrt(2.0)) <= 1e-12);
  const auto x = sup({rv({"3"})}, {rv({"0"}), rv({"1"})});
  const auto same = pseudometric_d_truncated(x, x, 20, 1, Norm::sup());
  CHECK(same.lo.exact() == 0);
  CHECK(same.hi.exact() == 0);
  CHECK_THROWS(pseudometric_d_truncated(x, x, 2, 1, Norm::sup()));
  const auto coarse = pseudometric_d_truncated(pair_x(), pair_y(), 20, 1, Norm::euclid(), 0.25);
  CHECK(coarse.lo.value() <= std::sqrt(2.0));
  CHECK(coarse.hi.value() >= std::sqrt(2.0));
}

TEST_CASE("truncated bounds contain the exact value") {
  Rng rng(31);
  const GenOptions g;
  for (int t = 0; t < 300; ++t) {
    const auto x = random_finite(rng, SpaceKind::sup_finite, g);
    const auto y = random_finite(rng, SpaceKind::sup_finite, g, x.dim());
    const auto d = pseudometric_d(x, y, Norm::sup());
    const std::size_t h = std::max(x.joint_start(), y.joint_start()) + 2 * std::max(x.joint_period(), y.joint_period());
    const auto b = pseudometric_d_truncated(x, y, h, 1, Norm::sup());
    CHECK(b.stabilized);
    CHECK(b.lo.exact() <= d.exact());
    CHECK(b.hi.exact() == d.exact());
  }
}

TEST_CASE("truncated bounds on spike and tail sequences") {
  const auto e = spiked({rv({"0"})}, {1});
  const auto zero = spiked({rv({"0"})}, {0});
  // distinct spikes at distinct indices are sup-distance 1 apart
  const auto b = pseudometric_d_truncated(e, zero, 12, 1, Norm::sup());
  CHECK(b.hi.exact() == 1);
  const auto self = pseudometric_d_truncated(e, e, 12, 1, Norm::sup());
  CHECK(self.hi.exact() == 0);
  CHECK_THROWS_AS(pseudometric_d_truncated(e, zero, 12, 1, Norm::euclid()), KindMismatch);
  const auto t1 = tailed(SpaceKind::c_tail, {rv({"0"})}, {1, -1});
  const auto t2 = tailed(SpaceKind::c_tail, {rv({"0"})}, {-1, 1});
  CHECK(pseudometric_d_truncated(t1, t2, 12, 1, Norm::sup()).hi.exact() == 0);
}
