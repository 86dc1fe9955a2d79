#include <doctest.h>

#include "ascenter/envelope.hpp"
#include "ascenter/oracles.hpp"
#include "ascenter/random.hpp"
#include "test_util.hpp"

using namespace ascenter;
using namespace ascenter::test;

TEST_CASE("finite envelopes") {
  const auto c = envelopes_finiteK(sup({}, {rv({"1", "2"})}));
  CHECK(c.lower == rv({"1", "2"}));
  CHECK(c.upper == rv({"1", "2"}));
  const auto s = sup({}, {rv({"0", "0"}), rv({"2", "4"})});
  const auto e = envelopes_finiteK(s);
  CHECK(e.lower == rv({"0", "0"}));
  CHECK(e.upper == rv({"2", "4"}));
  const auto t = oracles::truncation_envelope(s, 20);
  CHECK(t.lower == e.lower);
  CHECK(t.upper == e.upper);
  const auto p = envelopes_finiteK(sup({rv({"100", "100"})}, {rv({"0", "0"}), rv({"2", "4"})}));
  CHECK(p.lower == e.lower);
  CHECK(p.upper == e.upper);
  CHECK_THROWS_AS(envelopes_finiteK(spiked({rv({"0"})}, {1})), KindMismatch);
}

TEST_CASE("make_envelope validates order") {
  CHECK_THROWS(make_envelope(rv({"1"}), rv({"0"})));
  CHECK_NOTHROW(make_envelope(rv({"0"}), rv({"0"})));
}

TEST_CASE("center box") {
  const auto box = center_box(make_envelope(rv({"0", "0"}), rv({"2", "4"})));
  CHECK(box.radius == 2);
  CHECK(box.intervals == std::vector<Interval>{{0, 2}, {2, 2}});
  const auto point = center_box(make_envelope(rv({"1/3", "5"}), rv({"1/3", "5"})));
  CHECK(point.radius == 0);
  CHECK(point.intervals == std::vector<Interval>{{ratio(1, 3), ratio(1, 3)}, {5, 5}});
  const auto sym = center_box(make_envelope(rv({"-1"}), rv({"1"})));
  CHECK(sym.radius == 1);
  CHECK(sym.intervals == std::vector<Interval>{{0, 0}});
  CHECK(sym.contains(rv({"0"})));
  CHECK_FALSE(sym.contains(rv({"1/2"})));
  CHECK(sym.distance(rv({"1/2"})) == ratio(1, 2));
}

TEST_CASE("center box membership matches the deviation") {
  Rng rng(3);
  const GenOptions g;
  for (int t = 0; t < 500; ++t) {
    const auto env = random_envelope(rng, random_size(rng, 1, 5), g);
    const auto box = center_box(env);
    for (const auto& iv : box.intervals) CHECK_FALSE(iv.empty());
    const auto h = random_vector(rng, env.size(), g);
    CHECK(box.contains(h) == (envelope_deviation(env, h) <= box.radius));
  }
}

TEST_CASE("midpoint selector") {
  const auto env = make_envelope(rv({"0", "0"}), rv({"2", "4"}));
  const auto g = ndist_midpoint(env);
  CHECK(g == rv({"1", "2"}));
  CHECK(sup_norm(env.upper - g) == 2);
  CHECK(sup_norm(g - env.lower) == 2);
  CHECK(ndist_midpoint(make_envelope(rv({"3", "-1"}), rv({"3", "-1"}))) == rv({"3", "-1"}));
  CHECK(ndist_midpoint(make_envelope(rv({"-1"}), rv({"1"}))) == rv({"0"}));
}

TEST_CASE("pinned selector") {
  const auto env = make_envelope(rv({"0", "0"}), rv({"2", "4"}));
  const auto g = ndist_pinned(env, 0, 0);
  CHECK(g == rv({"0", "2"}));
  CHECK(envelope_deviation(env, g) == 2);
  CHECK(ndist_pinned(env, 1, 2) == ndist_midpoint(env));
  const auto flat = make_envelope(rv({"1", "7"}), rv({"1", "7"}));
  CHECK(ndist_pinned(flat, 1, 7) == rv({"1", "7"}));
  CHECK_THROWS(ndist_pinned(env, 0, 3));
  CHECK_THROWS(ndist_pinned(env, 2, 0));
}

TEST_CASE("canonical selector") {
  CHECK(std::get<RVec>(canonical_selector(sup({}, {rv({"0", "0"}), rv({"2", "4"})}))) == rv({"1", "2"}));
  const auto conv = sup({rv({"5", "5"}), rv({"-5", "0"})}, {rv({"1/2", "3"})});
  CHECK(std::get<RVec>(canonical_selector(conv)) == rv({"1/2", "3"}));
  const auto s = sup({rv({"9", "1"})}, {rv({"0", "0"}), rv({"2", "4"}), rv({"1", "-1"})});
  CHECK(canonical_selector(s.forward()) == canonical_selector(s));
  CHECK(std::get<RVec>(canonical_selector(spiked({rv({"0"})}, {1}))) == rv({"0"}));
}

TEST_CASE("clamp recentering") {
  const auto env = make_envelope(rv({"-1"}), rv({"1"}));
  const RVec g = rv({"0"});
  CHECK(cac_clamp_recenter(env, g, g, 1) == g);
  CHECK(cac_clamp_recenter(env, g, rv({"1"}), 1) == rv({"0"}));
  CHECK_THROWS_AS(cac_clamp_recenter(env, g, rv({"3/2"}), 1), InvalidInput);
  CHECK_THROWS_AS(cac_clamp_recenter(env, rv({"1/2"}), g, 1), InvalidInput);
  CHECK_THROWS_AS(cac_clamp_recenter(env, g, g, 2), InvalidInput);
}

TEST_CASE("inclusion check") {
  const auto constant = sup({}, {rv({"2", "-3"})});
  CHECK(cac_inclusion_check(constant, ratio(1, 2), 1, 50).max_distance == ratio(1, 2));
  CHECK(cac_inclusion_check(constant, 1, 1, 50).max_distance == 1);
  const auto s = sup({}, {rv({"0", "0"}), rv({"2", "4"})});
  const auto rep = cac_inclusion_check(s, 1, 9, 500);
  CHECK(rep.trials == 500);
  CHECK(rep.max_distance <= 1);
  CHECK(rep.max_recenter_shift <= 1);
  CHECK(cac_inclusion_check(s, 0, 9, 100).max_distance == 0);
}
