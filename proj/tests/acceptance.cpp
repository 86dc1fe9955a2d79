// One PASS/FAIL line per acceptance criterion. Exit status is the number of
// failed criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>

#include "ascenter/hilbert.hpp"
#include "ascenter/seq_metric.hpp"
#include "ascenter/verify.hpp"

using namespace ascenter;
using namespace ascenter::verify;

namespace {

constexpr double kDistanceTol = 1e-12;
constexpr double kCenterTol = 1e-9;
constexpr double kRadiusTol = 1e-12;
constexpr double kExampleSeconds = 1.0;
constexpr double kParitySeconds = 60.0;
constexpr double kSlackFloor = -1e-7;
constexpr std::uint64_t kSeed = 20240601;

struct Outcome {
  bool pass;
  std::string detail;
};

int failures = 0;

void criterion(int id, const char* name, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (!o.pass) ++failures;
  std::printf("[%s] %2d %s: %s (%.2f s)\n", o.pass ? "PASS" : "FAIL", id, name, o.detail.c_str(), secs);
  std::fflush(stdout);
}

VerifyOptions opts(std::size_t trials, std::uint64_t salt) {
  VerifyOptions o;
  o.trials = trials;
  o.seed = kSeed + salt;
  return o;
}

std::string summary(const VerifyReport& r) {
  char buf[256];
  std::snprintf(buf, sizeof buf, "%s trials=%zu violations=%zu", r.kind.c_str(), r.trials, r.violations);
  std::string s = buf;
  if (r.min_slack) {
    std::snprintf(buf, sizeof buf, " min_slack=%.3g", *r.min_slack);
    s += buf;
  }
  if (!r.ok()) s += " first failure: " + r.failure;
  return s;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main() {
  criterion(1, "two-point plane example", [] {
    const auto t0 = std::chrono::steady_clock::now();
    const RVec m1{-1, 0}, p1{1, 0}, m2{0, -1}, p2{0, 1};
    const RepresentableSeq x(SpaceKind::euclidean, 2, {}, {m1, p1}), y(SpaceKind::euclidean, 2, {}, {m2, p2});
    const double d = pseudometric_d(x, y, Norm::euclid()).value();
    const auto bx = euclid_center(x), by = euclid_center(y);
    const double cx = euclid_distance(bx.center, DVec{0, 0}), cy = euclid_distance(by.center, DVec{0, 0});
    const double secs = seconds_since(t0);
    const bool ok = std::abs(d - std::sqrt(2.0)) <= kDistanceTol && cx <= kCenterTol && cy <= kCenterTol &&
                    std::abs(bx.radius - 1) <= kRadiusTol && std::abs(by.radius - 1) <= kRadiusTol &&
                    secs < kExampleSeconds;
    char buf[256];
    std::snprintf(buf, sizeof buf, "d=%.15g centers off by %.2g/%.2g radii %.15g/%.15g", d, cx, cy, bx.radius, by.radius);
    return Outcome{ok, buf};
  });

  criterion(2, "Lim formula parity", [] {
    const auto t0 = std::chrono::steady_clock::now();
    const auto r = verify_lim_parity(opts(20000, 2));  // alternates c0 and c instances
    const double secs = seconds_since(t0);
    return Outcome{r.ok() && secs < kParitySeconds, summary(r) + " (10^4 c0 + 10^4 c)"};
  });

  criterion(3, "proof identities", [] {
    const auto r = verify_lim_identities(opts(10000, 3));
    return Outcome{r.ok(), summary(r)};
  });

  criterion(4, "midpoint and pinned selectors", [] {
    const auto r = verify_ndist(opts(10000, 4));
    return Outcome{r.ok(), summary(r)};
  });

  criterion(5, "oracle equivalence", [] {
    bool ok = true;
    std::string detail;
    for (const char* space : {"sup", "c0", "c", "linf", "euclid"}) {
      const auto r = crosscheck(space, opts(10000, 5));
      ok = ok && r.ok();
      detail += std::string(detail.empty() ? "" : "; ") + summary(r);
    }
    return Outcome{ok, detail};
  });

  criterion(6, "CAC inclusion with delta 1", [] {
    auto o = opts(1000, 6);
    o.delta = 1;
    const auto r = verify_cac(o);
    const Rational worst = parse_rational(r.details["max_distance"].get<std::string>());
    return Outcome{r.ok() && worst <= 1, summary(r) + " samples=" + r.details["samples"].dump() +
                                             " max_distance=" + to_string(worst)};
  });

  criterion(7, "Hoelder and set bounds", [] {
    const auto h = verify_holder(opts(10000, 7));
    const auto b = verify_bp_sets(opts(10000, 7));
    const bool ok = h.ok() && b.ok() && h.min_slack && *h.min_slack >= kSlackFloor && b.min_slack &&
                    *b.min_slack >= kSlackFloor;
    return Outcome{ok, summary(h) + "; " + summary(b)};
  });

  criterion(8, "far subsequence and hull membership", [] {
    const auto r = verify_hilbert_lemmas(opts(1000, 8));
    return Outcome{r.ok(), summary(r) + " " + r.details.dump()};
  });

  criterion(9, "selector invariances", [] {
    const auto r = verify_selectors(opts(1000, 9));
    return Outcome{r.ok(), summary(r)};
  });

  criterion(10, "pseudometric axioms and zero distance", [] {
    const auto r = verify_axioms(opts(1000, 10));
    return Outcome{r.ok(), summary(r) + " zero-distance pairs=" + r.details["zero_distance_pairs"].dump()};
  });

  std::printf("%d criteria failed\n", failures);
  return failures;
}
