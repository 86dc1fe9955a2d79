#include <doctest.h>

#include <set>

#include "ascenter/random.hpp"
#include "ascenter/verify.hpp"

using namespace ascenter;
using namespace ascenter::verify;

namespace {

VerifyOptions opts(std::size_t trials, std::uint64_t seed) {
  VerifyOptions o;
  o.trials = trials;
  o.seed = seed;
  return o;
}

void expect_clean(const VerifyReport& r) {
  INFO(r.kind << ": " << r.failure << " " << r.witness.dump());
  CHECK(r.ok());
  CHECK(r.trials > 0);
}

}  // namespace

TEST_CASE("property suites hold on fresh seeds") {
  for (std::uint64_t seed : {101u, 202u}) {
    expect_clean(verify_holder(opts(500, seed)));
    expect_clean(verify_bp_sets(opts(500, seed)));
    expect_clean(verify_cac(opts(200, seed)));
    expect_clean(verify_lim_identities(opts(500, seed)));
    expect_clean(verify_axioms(opts(200, seed)));
    expect_clean(verify_ndist(opts(500, seed)));
    expect_clean(verify_selectors(opts(200, seed)));
    expect_clean(verify_hilbert_lemmas(opts(100, seed)));
    expect_clean(verify_lim_parity(opts(300, seed)));
  }
}

TEST_CASE("crosschecks hold in every space") {
  for (const char* space : {"sup", "c0", "c", "linf", "euclid"}) expect_clean(crosscheck(space, opts(300, 55)));
}

TEST_CASE("fixed dimensions and delta are honored") {
  auto o = opts(100, 3);
  o.dim = 2;
  o.delta = ratio(1, 3);
  const auto r = verify_cac(o);
  expect_clean(r);
  CHECK(parse_rational(r.details["max_distance"].get<std::string>()) == ratio(1, 3));
  o.delta = 0;
  CHECK(parse_rational(verify_cac(o).details["max_distance"].get<std::string>()) == 0);
}

TEST_CASE("per-trial seeds make reports independent of trial count") {
  // trial i sees the same instance whatever the total, so a prefix run is a
  // sub-campaign of a longer run
  const auto a = verify_holder(opts(50, 9)), b = verify_holder(opts(100, 9));
  CHECK(*b.min_slack <= *a.min_slack);
  CHECK(verify_axioms(opts(30, 4)).to_json() == verify_axioms(opts(30, 4)).to_json());
}

TEST_CASE("trial seeds are distinct") {
  std::set<std::uint64_t> seen;
  for (std::uint64_t i = 0; i < 1000; ++i) seen.insert(trial_seed(7, i));
  CHECK(seen.size() == 1000);
}

TEST_CASE("unknown suites are rejected") {
  CHECK_THROWS_AS(run_suite("nope", opts(1, 0)), InvalidInput);
  CHECK_THROWS_AS(crosscheck("l2", opts(1, 0)), InvalidInput);
  CHECK_THROWS_AS(verify_holder(opts(0, 0)), InvalidInput);
}
