#include <doctest.h>

#include <cmath>

#include "ascenter/c0_lim.hpp"
#include "ascenter/envelope.hpp"
#include "ascenter/hilbert.hpp"
#include "ascenter/oracles.hpp"
#include "ascenter/polyhedral.hpp"
#include "ascenter/random.hpp"
#include "test_util.hpp"

using namespace ascenter;
using namespace ascenter::oracles;
using namespace ascenter::test;

TEST_CASE("sup-norm oracle examples") {
  const auto s = sup({}, {rv({"0", "0"}), rv({"2", "4"})});
  const auto r = radius_oracle_supnorm(s);
  CHECK(r.value == 2);
  CHECK(r.argmin[1] == 2);
  CHECK(r.argmin[0] >= 0);
  CHECK(r.argmin[0] <= 2);
  CHECK(r.resolution == 0);
  const auto e = radius_oracle_supnorm(spiked({rv({"0"})}, {1}));
  CHECK(e.value == 1);
  CHECK(e.argmin == rv({"0"}));
  CHECK(radius_oracle_supnorm(sup({rv({"5"})}, {rv({"-3/7"})})).value == 0);
  CHECK_THROWS_AS(radius_oracle_supnorm(pair_x()), KindMismatch);
}

TEST_CASE("grid oracle brackets the exact radius") {
  const auto s = sup({}, {rv({"0", "0"}), rv({"2", "4"})});
  const auto g = radius_oracle_grid(s, ratio(1, 3));
  CHECK(g.value >= 2);
  CHECK(g.value - 2 <= g.resolution);
  CHECK(radius_oracle_grid(spiked({rv({"0"})}, {1}), ratio(1, 2)).value == 1);
  Rng rng(4);
  const GenOptions opt{1, 2, 2, 3, 6, 3};
  for (int t = 0; t < 100; ++t) {
    const auto x = random_finite(rng, SpaceKind::sup_finite, opt);
    const Rational exact = center_box(envelopes_finiteK(x)).radius;
    const auto grid = radius_oracle_grid(x, ratio(1, 4));
    CHECK(grid.value >= exact);
    CHECK(grid.value - exact <= grid.resolution);
  }
}

TEST_CASE("euclidean oracles") {
  const std::vector<DVec> seg{{-1, 0}, {1, 0}};
  CHECK(std::abs(radius_oracle_euclid(seg).value - 1) <= 1e-6);
  CHECK(radius_oracle_euclid({{2, 2}}).value <= 1e-12);
  CHECK(std::abs(radius_subgradient(seg).value - 1) <= 1e-3);
  Rng rng(6);
  for (int t = 0; t < 200; ++t) {
    const auto pts = random_point_set(rng, random_size(rng, 2, 4), 10, GenOptions{});
    std::vector<DVec> d;
    for (const auto& p : pts) d.push_back(to_double(p));
    const auto ball = smallest_enclosing_ball(d);
    const auto fw = radius_oracle_euclid(d, 1e-14);
    CHECK(std::abs(fw.value - ball.radius) <= 1e-6);
    CHECK(euclid_distance(DVec(fw.argmin.begin(), fw.argmin.end()), ball.center) <= 1e-6);
    if (t % 20 == 0) CHECK(radius_subgradient(d, 5000).value >= ball.radius - 1e-6);
  }
}

TEST_CASE("truncation oracle examples") {
  const auto e = spiked({rv({"0"})}, {1});
  CHECK(truncation_oracle(e, Quantity::alpha, 50).value == 1);
  const auto zero = spiked({rv({"0", "0"})}, {0});
  for (auto q : {Quantity::alpha, Quantity::beta, Quantity::gamma, Quantity::delta})
    CHECK(truncation_oracle(zero, q, 20).value == 0);
  const auto alt = tailed(SpaceKind::c_tail, {rv({"0"})}, {1, -1});
  CHECK(truncation_oracle(alt, Quantity::gamma, 20).value == 2);
  CHECK_THROWS(truncation_oracle(e, Quantity::alpha, 1));
  CHECK_THROWS_AS(truncation_oracle(pair_x(), Quantity::alpha, 10), KindMismatch);
}

TEST_CASE("truncation agrees with closed forms on random instances") {
  Rng rng(17);
  const GenOptions g{1, 3, 3, 4, 8, 4};
  for (int t = 0; t < 300; ++t) {
    const auto s = t % 3 == 0   ? random_c0_spike(rng, g)
                   : t % 3 == 1 ? random_tail(rng, SpaceKind::c_tail, g)
                                : random_tail(rng, SpaceKind::linf_tail, g);
    const std::size_t h = default_horizon(s);
    CHECK(truncation_lim_quantities(s, h) == lim_quantities(s));
    CHECK(truncation_lim_quantities(s, h + 7) == lim_quantities(s));
  }
}

TEST_CASE("polyhedral centers") {
  const FinitePointSet pts{rv({"-1", "0"}), rv({"1", "0"})};
  const auto c = polyhedral_chebyshev_center(pts, Norm::sup());
  CHECK(c.radius == 1);
  CHECK(c.vertices == std::vector<RVec>{rv({"0", "-1"}), rv({"0", "1"})});
  const auto one = polyhedral_chebyshev_center(pts, Norm::one());
  CHECK(one.radius == 1);
  CHECK(one.vertices == std::vector<RVec>{rv({"0", "0"})});
  // sup-norm centers agree with the envelope box
  Rng rng(2);
  for (int t = 0; t < 100; ++t) {
    const auto x = random_finite(rng, SpaceKind::sup_finite, GenOptions{1, 3, 0, 4, 6, 2});
    const auto box = center_box(envelopes_finiteK(x));
    const auto p = polyhedral_chebyshev_center(cluster_set(x), Norm::sup());
    CHECK(p.radius == box.radius);
    for (const auto& v : p.vertices) CHECK(box.contains(v));
    for (std::size_t k = 0; k < box.intervals.size(); ++k) {
      Rational lo = p.vertices.front()[k], hi = lo;
      for (const auto& v : p.vertices) {
        lo = min(lo, v[k]);
        hi = max(hi, v[k]);
      }
      CHECK(box.intervals[k] == Interval{lo, hi});
    }
  }
  CHECK_THROWS(polyhedral_chebyshev_center(FinitePointSet{rv({"1", "1", "1", "1"})}, Norm::sup()));
}
