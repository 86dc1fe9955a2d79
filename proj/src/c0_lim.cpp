#include "ascenter/c0_lim.hpp"

#include <algorithm>

namespace ascenter {

namespace {

void check_infinity(const Envelope& env) {
  if (!env.infinity) throw KindMismatch("the c0 operations need an envelope with a point at infinity");
}

// Max and min of a scalar eventually periodic sequence over n >= m.
Bounds scalar_range_from(const ScalarSeq& s, std::size_t m) {
  const std::size_t stop = std::max(m, s.preperiod.size() + 1) + s.cycle.size();
  Bounds b{s.at(m), s.at(m)};
  for (std::size_t n = m; n < stop; ++n) {
    b.lower = min(b.lower, s.at(n));
    b.upper = max(b.upper, s.at(n));
  }
  return b;
}

// sup_{n>=m} x_n(k) - inf_{n>=m} x_n(k), maximized over k <= dim.
Rational core_oscillation_from(const RepresentableSeq& seq, std::size_t m) {
  const auto& core = seq.core();
  const std::size_t stop = std::max(m, core.preperiod.size() + 1) + core.cycle.size();
  RVec lo = core.at(m), hi = core.at(m);
  for (std::size_t n = m; n < stop; ++n) {
    const auto& v = core.at(n);
    for (std::size_t k = 0; k < seq.dim(); ++k) {
      if (v[k] < lo[k]) lo[k] = v[k];
      if (hi[k] < v[k]) hi[k] = v[k];
    }
  }
  Rational best = 0;
  for (std::size_t k = 0; k < seq.dim(); ++k) best = max(best, hi[k] - lo[k]);
  return best;
}

// sup_{j>=m} |spike(j)|: the spike of term j is the only nonzero value at
// coordinate dim + j, so this is the oscillation beyond dim over n >= m.
Rational spike_abs_from(const ScalarSeq& spike, std::size_t m) {
  const auto b = scalar_range_from(spike, m);
  return max(abs(b.lower), abs(b.upper));
}

void check_lim_kind(const RepresentableSeq& seq) {
  if (seq.is_finite_dimensional()) throw KindMismatch("Lim quantities need a c0_spike, c_tail or linf_tail sequence");
}

// Value at m = joint start, checked against one joint period later.
template <class F>
Rational stabilized(const RepresentableSeq& seq, F&& at, const char* what) {
  const std::size_t m = seq.joint_start();
  Rational v = at(m);
  ensure(v == at(m + seq.joint_period()), std::string(what) + " did not stabilize");
  return v;
}

}  // namespace

Envelope envelopes_c0(const RepresentableSeq& seq) {
  if (seq.kind() != SpaceKind::c0_spike) throw KindMismatch("envelopes_c0 needs a c0_spike sequence");
  Envelope env;
  const auto& cycle = seq.cycle();
  env.lower = env.upper = cycle.front();
  for (const auto& v : cycle)
    for (std::size_t k = 0; k < seq.dim(); ++k) {
      env.lower[k] = min(env.lower[k], v[k]);
      env.upper[k] = max(env.upper[k], v[k]);
    }
  const auto& sc = seq.spike()->cycle;
  env.infinity = Bounds{min(Rational(0), *std::min_element(sc.begin(), sc.end())),
                        max(Rational(0), *std::max_element(sc.begin(), sc.end()))};
  return env;
}

Rational radius_c0(const Envelope& env) {
  check_infinity(env);
  return max(max(env.infinity->upper, -env.infinity->lower), env.max_gap() / 2);
}

CenterBox center_box_c0(const Envelope& env) {
  const Rational r = radius_c0(env);
  CenterBox box{r, {}};
  for (std::size_t k = 0; k < env.size(); ++k) {
    box.intervals.push_back({env.upper[k] - r, env.lower[k] + r});
    ensure(!box.intervals.back().empty(), "c0 center box interval is empty");
  }
  return box;
}

RVec center_selector_c0(const Envelope& env) {
  const auto box = center_box_c0(env);
  RVec g(env.size());
  for (std::size_t k = 0; k < g.size(); ++k) g[k] = box.intervals[k].clamp(0);
  ensure(box.contains(g), "zero-clamp selector left the center box");
  // Coordinates beyond dim and infinity: g = 0 must sit within [b - R, a + R].
  ensure(env.infinity->upper <= box.radius && -env.infinity->lower <= box.radius,
         "zero-clamp selector violates the constraint at infinity");
  ensure(envelope_deviation(env, g) == box.radius, "zero-clamp selector is not a center");
  return g;
}

Rational alpha_at(const RepresentableSeq& seq, std::size_t m) {
  check_lim_kind(seq);
  require(m >= 1, "m is 1-based");
  Rational a = core_oscillation_from(seq, m);
  if (seq.spike()) a = max(a, spike_abs_from(*seq.spike(), m));
  if (seq.tail()) {
    const auto b = scalar_range_from(*seq.tail(), m);
    a = max(a, b.upper - b.lower);
  }
  return a;
}

namespace {

// limsup_k sup_{n>=m} x_n(k) and liminf_k inf_{n>=m} x_n(k).
Bounds far_coordinate_bounds(const RepresentableSeq& seq, std::size_t m) {
  if (seq.spike()) {
    // coordinate dim + j with j >= m sees spike(j) once and zeros otherwise
    const auto b = scalar_range_from(*seq.spike(), m);
    return {min(Rational(0), b.lower), max(Rational(0), b.upper)};
  }
  return scalar_range_from(*seq.tail(), m);
}

}  // namespace

LimQuantities lim_quantities(const RepresentableSeq& seq) {
  check_lim_kind(seq);
  LimQuantities q;
  q.alpha = stabilized(seq, [&](std::size_t m) { return alpha_at(seq, m); }, "alpha_m");

  const std::size_t start = seq.joint_start();
  q.beta = core_oscillation_from(seq, start);
  if (seq.tail()) {
    const auto b = scalar_range_from(*seq.tail(), start);
    q.beta = max(q.beta, b.upper - b.lower);
  }
  // Coordinates beyond dim in c0_spike converge to 0 and add nothing to beta.

  q.gamma = stabilized(
      seq,
      [&](std::size_t m) {
        const auto b = far_coordinate_bounds(seq, m);
        return Rational(b.upper - b.lower);
      },
      "gamma");
  q.delta = stabilized(
      seq,
      [&](std::size_t m) {
        const auto b = far_coordinate_bounds(seq, m);
        return max(abs(b.lower), abs(b.upper));
      },
      "delta");
  return q;
}

void check_lim_identities(const LimQuantities& q) {
  ensure(q.beta <= q.alpha, "beta > alpha");
  ensure(max(q.beta, q.gamma) == max(q.alpha, q.gamma), "max(beta, gamma) != max(alpha, gamma)");
  const Rational two_delta = 2 * q.delta;
  ensure(max(q.beta, two_delta) == max(q.alpha, two_delta), "max(beta, 2 delta) != max(alpha, 2 delta)");
}

Rational radius_lim(const RepresentableSeq& seq, LimSpace space) {
  check_lim_kind(seq);
  switch (space) {
    case LimSpace::c0: {
      if (seq.kind() != SpaceKind::c0_spike) throw KindMismatch("the c0 formula needs a c0_spike sequence");
      const Rational alpha = stabilized(seq, [&](std::size_t m) { return alpha_at(seq, m); }, "alpha_m");
      const Rational far_abs = stabilized(
          seq,
          [&](std::size_t m) {
            const auto b = far_coordinate_bounds(seq, m);
            return max(abs(b.lower), abs(b.upper));
          },
          "limsup_k sup_n |x_n(k)|");
      return max(Rational(alpha / 2), far_abs);
    }
    case LimSpace::c: {
      if (seq.kind() != SpaceKind::c_tail) throw KindMismatch("the c formula needs a c_tail sequence");
      const Rational alpha = stabilized(seq, [&](std::size_t m) { return alpha_at(seq, m); }, "alpha_m");
      const Rational far_osc = stabilized(
          seq,
          [&](std::size_t m) {
            const auto b = far_coordinate_bounds(seq, m);
            return Rational(b.upper - b.lower);
          },
          "limsup_k sup - liminf_k inf");
      return max(alpha, far_osc) / 2;
    }
    case LimSpace::linf: {
      if (!seq.has_tail()) throw KindMismatch("the l-infinity formula needs a c_tail or linf_tail sequence");
      return stabilized(seq, [&](std::size_t m) { return alpha_at(seq, m); }, "alpha_m") / 2;
    }
  }
  throw KindMismatch("unknown space");
}

}  // namespace ascenter
