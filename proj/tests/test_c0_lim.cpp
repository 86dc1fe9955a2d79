#include <doctest.h>

#include "ascenter/c0_lim.hpp"
#include "ascenter/oracles.hpp"
#include "ascenter/random.hpp"
#include "test_util.hpp"

using namespace ascenter;
using namespace ascenter::test;

namespace {

RepresentableSeq unit_vectors() { return spiked({rv({"0"})}, {1}); }
RepresentableSeq zero_c0() { return spiked({rv({"0", "0"})}, {0}); }

}  // namespace

TEST_CASE("c0 envelopes") {
  const auto e = envelopes_c0(unit_vectors());
  CHECK(e.lower == rv({"0"}));
  CHECK(e.upper == rv({"0"}));
  REQUIRE(e.infinity);
  CHECK(e.infinity->upper == 1);
  CHECK(e.infinity->lower == 0);
  const auto z = envelopes_c0(zero_c0());
  CHECK(z.upper == rv({"0", "0"}));
  CHECK(z.infinity->upper == 0);
  CHECK(z.infinity->lower == 0);
  const auto mixed = envelopes_c0(spiked({rv({"0"})}, {-2, 1}));
  CHECK(mixed.infinity->upper == 1);
  CHECK(mixed.infinity->lower == -2);
  const auto oracle = oracles::truncation_envelope(spiked({rv({"0"})}, {-2, 1}), 30);
  CHECK(oracle.infinity->upper == 1);
  CHECK(oracle.infinity->lower == -2);
  CHECK_THROWS_AS(envelopes_c0(sup({}, {rv({"0"})})), KindMismatch);
}

TEST_CASE("c0 radius") {
  CHECK(radius_c0(envelopes_c0(unit_vectors())) == 1);
  CHECK(radius_c0(envelopes_c0(zero_c0())) == 0);
  CHECK(radius_c0(envelopes_c0(spiked({rv({"0"}), rv({"4"})}, {0}))) == 2);
  CHECK_THROWS(radius_c0(make_envelope(rv({"0"}), rv({"1"}))));
}

TEST_CASE("c0 center selector") {
  CHECK(center_selector_c0(envelopes_c0(unit_vectors())) == rv({"0"}));
  const auto env = envelopes_c0(spiked({rv({"0"}), rv({"4"})}, {0}));
  CHECK(center_box_c0(env).intervals.front() == Interval{2, 2});
  CHECK(center_selector_c0(env) == rv({"2"}));
  CHECK(center_selector_c0(envelopes_c0(zero_c0())) == rv({"0", "0"}));
  const auto box = center_box_c0(envelopes_c0(unit_vectors()));
  CHECK(box.intervals.front() == Interval{-1, 1});
}

TEST_CASE("Lim quantities of the examples") {
  CHECK(lim_quantities(unit_vectors()) == LimQuantities{1, 0, 1, 1});
  CHECK(lim_quantities(zero_c0()) == LimQuantities{0, 0, 0, 0});
  const auto alt = tailed(SpaceKind::c_tail, {rv({"0"})}, {1, -1});
  const auto q = lim_quantities(alt);
  CHECK(q.alpha == 2);
  CHECK(q.gamma == 2);
  CHECK(q.delta == 1);
  CHECK(q == oracles::truncation_lim_quantities(alt, 50));
  CHECK(lim_quantities(unit_vectors()) == oracles::truncation_lim_quantities(unit_vectors(), 50));
  CHECK_NOTHROW(check_lim_identities(q));
  CHECK_THROWS_AS(check_lim_identities(LimQuantities{0, 1, 0, 0}), InvariantViolation);
}

TEST_CASE("Lim radius formulas") {
  CHECK(radius_lim(unit_vectors(), LimSpace::c0) == 1);
  const auto alt = tailed(SpaceKind::c_tail, {rv({"0"})}, {1, -1});
  CHECK(radius_lim(alt, LimSpace::c) == 1);
  CHECK(radius_lim(alt, LimSpace::linf) == 1);
  CHECK(radius_lim(zero_c0(), LimSpace::c0) == 0);
  CHECK(radius_lim(tailed(SpaceKind::linf_tail, {rv({"0"})}, {0}), LimSpace::linf) == 0);
  CHECK(radius_lim(tailed(SpaceKind::c_tail, {rv({"0"})}, {0}), LimSpace::c) == 0);
  CHECK_THROWS_AS(radius_lim(unit_vectors(), LimSpace::c), KindMismatch);
  CHECK_THROWS_AS(radius_lim(alt, LimSpace::c0), KindMismatch);
  CHECK_THROWS_AS(radius_lim(tailed(SpaceKind::linf_tail, {rv({"0"})}, {1}), LimSpace::c), KindMismatch);
}

TEST_CASE("c0 formula agrees with the envelope radius and the oracle") {
  Rng rng(21);
  const GenOptions g{1, 4, 3, 4, 8, 4};
  for (int t = 0; t < 400; ++t) {
    const auto s = random_c0_spike(rng, g);
    const Rational r = radius_c0(envelopes_c0(s));
    CHECK(radius_lim(s, LimSpace::c0) == r);
    CHECK(oracles::radius_oracle_supnorm(s).value == r);
    CHECK(asymptotic_distance_sup(s, center_selector_c0(envelopes_c0(s))) == r);
    const auto q = lim_quantities(s);
    CHECK(q.beta <= q.alpha);
    CHECK(max(q.beta, q.gamma) == max(q.alpha, q.gamma));
    CHECK(max(q.beta, 2 * q.delta) == max(q.alpha, 2 * q.delta));
  }
}

TEST_CASE("c and l-infinity formulas agree on tail sequences") {
  Rng rng(22);
  const GenOptions g{1, 4, 3, 4, 8, 4};
  for (int t = 0; t < 400; ++t) {
    const auto s = random_tail(rng, SpaceKind::c_tail, g);
    const Rational r = radius_lim(s, LimSpace::c);
    CHECK(radius_lim(s, LimSpace::linf) == r);
    CHECK(oracles::radius_oracle_supnorm(s).value == r);
  }
}
