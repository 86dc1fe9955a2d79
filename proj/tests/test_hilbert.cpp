#include <doctest.h>

#include <cmath>

#include "ascenter/hilbert.hpp"
#include "ascenter/oracles.hpp"
#include "ascenter/random.hpp"
#include "test_util.hpp"

using namespace ascenter;
using namespace ascenter::test;

namespace {

std::vector<DVec> triangle() {
  const double s = std::sqrt(3.0) / 2;
  return {{1, 0}, {-0.5, s}, {-0.5, -s}};
}

}  // namespace

TEST_CASE("smallest enclosing ball examples") {
  const auto seg = smallest_enclosing_ball(std::vector<DVec>{{-1, 0}, {1, 0}});
  CHECK(euclid_distance(seg.center, DVec{0, 0}) <= 1e-12);
  CHECK(std::abs(seg.radius - 1) <= 1e-12);
  const auto one = smallest_enclosing_ball(std::vector<DVec>{{3, -2, 1}});
  CHECK(one.center == DVec{3, -2, 1});
  CHECK(one.radius == 0);
  const auto tri = smallest_enclosing_ball(triangle());
  CHECK(euclid_distance(tri.center, DVec{0, 0}) <= 1e-9);
  CHECK(std::abs(tri.radius - 1) <= 1e-9);
  const auto sg = oracles::radius_subgradient(triangle());
  CHECK(sg.value >= tri.radius - 1e-6);
  CHECK_THROWS(smallest_enclosing_ball(std::vector<DVec>{}));
}

TEST_CASE("ball covers, is certified and does not depend on the seed") {
  Rng rng(13);
  for (int t = 0; t < 300; ++t) {
    const std::size_t dim = random_size(rng, 1, 5);
    const auto pts = random_point_set(rng, dim, random_size(rng, 1, 10), GenOptions{});
    std::vector<DVec> d;
    for (const auto& p : pts) d.push_back(to_double(p));
    const auto a = smallest_enclosing_ball(d, 1), b = smallest_enclosing_ball(d, 99);
    for (const auto& p : d) CHECK(euclid_distance(p, a.center) <= a.radius + kGeometryTol);
    CHECK(hull_distance(a.support, a.center) <= kSlackTol);
    CHECK(euclid_distance(a.center, b.center) <= kGeometryTol);
    CHECK(std::abs(a.radius - b.radius) <= kGeometryTol);
  }
}

TEST_CASE("hull distance") {
  CHECK(hull_distance({{-1, 0}, {1, 0}}, {0, 0}) <= 1e-12);
  CHECK(std::abs(hull_distance({{-1, 0}, {1, 0}}, {0, 2}) - 2) <= 1e-12);
  CHECK(std::abs(hull_distance({{1, 1}}, {0, 1}) - 1) <= 1e-12);
  CHECK(hull_distance(triangle(), {0, 0}) <= 1e-12);
  CHECK(std::abs(hull_distance({{0, 0}, {1, 0}, {0, 1}}, {1, 1}) - std::sqrt(0.5)) <= 1e-12);
}

TEST_CASE("euclidean asymptotic center is the ball of the cluster set") {
  const auto b = euclid_center(pair_x());
  CHECK(euclid_distance(b.center, DVec{0, 0}) <= 1e-12);
  CHECK(std::abs(b.radius - 1) <= 1e-12);
  const auto s = euclid({rv({"50", "50"})}, {rv({"1", "0"}), rv({"-1", "0"}), rv({"0", "1/2"})});
  const auto c = euclid_center(s);
  CHECK(std::abs(c.radius - 1) <= 1e-12);
  CHECK(std::abs(asymptotic_distance(s, c.center, Norm::euclid()) - c.radius) <= kGeometryTol);
}

TEST_CASE("far subsequence") {
  const auto alt = euclid({}, {rv({"-1"}), rv({"1"})});
  CHECK(cluster_set(far_subsequence(alt, 0.5)) == cluster_set(alt));
  const auto s = euclid({}, {rv({"1", "0"}), rv({"-1", "0"}), rv({"0", "0"})});
  const auto f = far_subsequence(s, 0.5);
  CHECK(cluster_set(f) == FinitePointSet{rv({"-1", "0"}), rv({"1", "0"})});
  const auto b = euclid_center(f);
  CHECK(euclid_distance(b.center, DVec{0, 0}) <= 1e-9);
  CHECK(std::abs(b.radius - 1) <= 1e-9);
  const auto k = euclid({}, {rv({"2", "3"})});
  CHECK(cluster_set(far_subsequence(k, 0.1)) == cluster_set(k));
  CHECK(euclid_center(far_subsequence(k, 0.1)).radius == 0);
  CHECK_THROWS(far_subsequence(k, 0));
}

TEST_CASE("center lies in the hull of far cluster points") {
  CHECK(hull_membership_check(euclid({}, {rv({"-1", "0"}), rv({"1", "0"}), rv({"0", "1/2"})}), 0.1) <= 1e-12);
  CHECK(hull_membership_check(euclid({}, {rv({"4", "4"})}), 0.1) == 0);
  const auto simplex = euclid({}, {rv({"1", "0", "0"}), rv({"0", "1", "0"}), rv({"0", "0", "1"})});
  CHECK(hull_membership_check(simplex, 0.01) <= 1e-9);
  const auto c = euclid_center(simplex).center;
  for (double v : c) CHECK(std::abs(v - 1.0 / 3) <= 1e-9);
}

TEST_CASE("Hoelder bound examples") {
  const auto x = pair_x();
  CHECK(std::abs(holder_bound_check(x, x).slack) <= 1e-12);
  const auto b = holder_bound_check(x, pair_y());
  CHECK(std::abs(b.slack - (2 + 2 * std::sqrt(2.0))) <= 1e-9);
  CHECK(std::abs(b.d - std::sqrt(2.0)) <= 1e-12);
  CHECK(b.center_gap_sq <= 1e-18);
  CHECK_THROWS(holder_bound_check(x, euclid({}, {rv({"1"})})));
}

TEST_CASE("set bound examples") {
  const FinitePointSet a{rv({"-1", "0"}), rv({"1", "0"})}, b{rv({"0", "-1"}), rv({"0", "1"})};
  CHECK(std::abs(baronti_papini_sets_check(a, a).slack) <= 1e-12);
  const auto r = baronti_papini_sets_check(a, b);
  CHECK(std::abs(r.slack - (2 + 2 * std::sqrt(2.0))) <= 1e-9);
  CHECK(std::abs(r.r1 - 1) <= 1e-12);
  CHECK(std::abs(r.r2 - 1) <= 1e-12);
  CHECK_THROWS(baronti_papini_sets_check(a, FinitePointSet{}));
}
