#include "ascenter/envelope.hpp"

#include "ascenter/c0_lim.hpp"
#include "ascenter/hilbert.hpp"
#include "ascenter/random.hpp"

namespace ascenter {

Rational Envelope::max_gap() const {
  Rational gap = 0;
  for (std::size_t k = 0; k < size(); ++k) gap = max(gap, upper[k] - lower[k]);
  if (infinity) gap = max(gap, infinity->upper - infinity->lower);
  return gap;
}

Envelope make_envelope(RVec lower, RVec upper, std::optional<Bounds> infinity) {
  require(lower.size() == upper.size(), "envelope bounds differ in length");
  for (std::size_t k = 0; k < lower.size(); ++k) require(lower[k] <= upper[k], "envelope has lower > upper");
  if (infinity) require(infinity->lower <= infinity->upper, "envelope has lower > upper at infinity");
  return Envelope{std::move(lower), std::move(upper), std::move(infinity)};
}

Rational Interval::distance(const Rational& x) const {
  if (x < lo) return lo - x;
  if (hi < x) return x - hi;
  return 0;
}

bool CenterBox::contains(const RVec& g) const {
  require(g.size() == intervals.size(), "point dimension does not match the center box");
  for (std::size_t k = 0; k < g.size(); ++k)
    if (!intervals[k].contains(g[k])) return false;
  return true;
}

Rational CenterBox::distance(const RVec& h) const {
  require(h.size() == intervals.size(), "point dimension does not match the center box");
  Rational d = 0;
  for (std::size_t k = 0; k < h.size(); ++k) d = max(d, intervals[k].distance(h[k]));
  return d;
}

namespace {

Envelope cycle_envelope(const RepresentableSeq& seq) {
  const auto& cycle = seq.cycle();
  RVec lower = cycle.front(), upper = cycle.front();
  for (const auto& v : cycle)
    for (std::size_t k = 0; k < seq.dim(); ++k) {
      if (v[k] < lower[k]) lower[k] = v[k];
      if (upper[k] < v[k]) upper[k] = v[k];
    }
  return Envelope{std::move(lower), std::move(upper), std::nullopt};
}

void check_no_infinity(const Envelope& env) {
  if (env.infinity) throw KindMismatch("envelope has a point at infinity; use the c0 operations");
}

}  // namespace

Envelope envelopes_finiteK(const RepresentableSeq& seq) {
  if (seq.kind() != SpaceKind::sup_finite) throw KindMismatch("envelopes_finiteK needs a sup_finite sequence");
  return cycle_envelope(seq);
}

Envelope envelopes_tail(const RepresentableSeq& seq) {
  if (!seq.has_tail()) throw KindMismatch("envelopes_tail needs a c_tail or linf_tail sequence");
  auto env = cycle_envelope(seq);
  const auto& tc = seq.tail()->cycle;
  env.lower.push_back(*std::min_element(tc.begin(), tc.end()));
  env.upper.push_back(*std::max_element(tc.begin(), tc.end()));
  return env;
}

Rational envelope_deviation(const Envelope& env, const RVec& g) {
  require(g.size() == env.size(), "point dimension does not match the envelope");
  Rational dev = 0;
  for (std::size_t k = 0; k < g.size(); ++k) dev = max(dev, max(env.upper[k] - g[k], g[k] - env.lower[k]));
  if (env.infinity) dev = max(dev, max(env.infinity->upper, -env.infinity->lower));
  return dev;
}

CenterBox center_box(const Envelope& env) {
  check_no_infinity(env);
  CenterBox box;
  box.radius = env.max_gap() / 2;
  box.intervals.reserve(env.size());
  for (std::size_t k = 0; k < env.size(); ++k) {
    box.intervals.push_back({env.upper[k] - box.radius, env.lower[k] + box.radius});
    ensure(!box.intervals.back().empty(), "center box interval is empty");
  }
  return box;
}

RVec ndist_midpoint(const Envelope& env) {
  check_no_infinity(env);
  RVec g(env.size());
  for (std::size_t k = 0; k < g.size(); ++k) g[k] = (env.lower[k] + env.upper[k]) / 2;
  const Rational half = env.max_gap() / 2;
  ensure(sup_norm(env.upper - g) == half, "midpoint: ||b - g|| != ||b - a|| / 2");
  ensure(sup_norm(g - env.lower) == half, "midpoint: ||g - a|| != ||b - a|| / 2");
  return g;
}

RVec ndist_pinned(const Envelope& env, std::size_t coord, const Rational& s) {
  check_no_infinity(env);
  require(coord < env.size(), "pinned coordinate out of range");
  require(env.lower[coord] <= s && s <= env.upper[coord], "pinned value outside [a(t0), b(t0)]");
  const Rational reach = max(max(env.upper[coord] - s, s - env.lower[coord]), env.max_gap() / 2);
  RVec g(env.size());
  for (std::size_t k = 0; k < g.size(); ++k) {
    if (k == coord) {
      g[k] = s;
      continue;
    }
    const Interval feasible{env.upper[k] - reach, env.lower[k] + reach};
    g[k] = feasible.clamp((env.lower[k] + env.upper[k]) / 2);
  }
  ensure(envelope_deviation(env, g) == reach, "pinned selector violates the max-equality");
  return g;
}

Selector canonical_selector(const RepresentableSeq& seq, std::uint64_t seed) {
  switch (seq.kind()) {
    case SpaceKind::sup_finite:
      return ndist_midpoint(envelopes_finiteK(seq));
    case SpaceKind::c0_spike:
      return center_selector_c0(envelopes_c0(seq));
    case SpaceKind::c_tail:
    case SpaceKind::linf_tail:
      return ndist_midpoint(envelopes_tail(seq));
    case SpaceKind::euclidean:
      return euclid_center(seq, seed).center;
  }
  throw KindMismatch("unsupported kind");
}

RVec cac_clamp_recenter(const Envelope& env, const RVec& g, const RVec& h, const Rational& delta) {
  check_no_infinity(env);
  require(delta >= 0 && delta <= 1, "delta must lie in [0, 1]");
  const auto box = center_box(env);
  require(box.contains(g), "g is not an asymptotic center");
  require(envelope_deviation(env, h) <= box.radius + delta, "h is not in the delta-enlargement of the center");
  RVec z(h.size());
  for (std::size_t k = 0; k < z.size(); ++k) z[k] = h[k] + clamp(g[k] - h[k], Rational(-1), Rational(1));
  ensure(sup_norm(z - h) <= 1, "recentered point moved more than 1");
  ensure(box.contains(z), "recentered point is outside the center box");
  return z;
}

namespace {

// Uniform on a grid of 1025 points across [lo, hi].
Rational sample_interval(Rng& rng, const Interval& iv) {
  constexpr long kSteps = 1024;
  const long k = std::uniform_int_distribution<long>(0, kSteps)(rng);
  return iv.lo + (iv.hi - iv.lo) * ratio(k, kSteps);
}

}  // namespace

CacReport cac_inclusion_check(const RepresentableSeq& seq, const Rational& delta, std::uint64_t seed,
                              std::size_t trials) {
  require(delta >= 0 && delta <= 1, "delta must lie in [0, 1]");
  const auto env = envelopes_finiteK(seq);
  const auto box = center_box(env);
  const auto g = ndist_midpoint(env);
  std::vector<Interval> enlarged;
  for (const auto& iv : box.intervals) enlarged.push_back({iv.lo - delta, iv.hi + delta});

  CacReport report;
  Rng rng(seed);
  for (std::size_t t = 0; t < trials; ++t) {
    RVec h(enlarged.size());
    for (std::size_t k = 0; k < h.size(); ++k) h[k] = t == 0 ? enlarged[k].lo : sample_interval(rng, enlarged[k]);
    const Rational dist = box.distance(h);
    if (t == 0 || report.max_distance < dist) {
      report.max_distance = dist;
      report.witness = h;
    }
    const auto z = cac_clamp_recenter(env, g, h, delta);
    report.max_recenter_shift = max(report.max_recenter_shift, sup_norm(z - h));
    ++report.trials;
  }
  return report;
}

}  // namespace ascenter
