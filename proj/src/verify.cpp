#include "ascenter/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include "ascenter/c0_lim.hpp"
#include "ascenter/envelope.hpp"
#include "ascenter/hilbert.hpp"
#include "ascenter/io.hpp"
#include "ascenter/oracles.hpp"
#include "ascenter/polyhedral.hpp"
#include "ascenter/random.hpp"
#include "ascenter/seq_metric.hpp"

namespace ascenter::verify {

json VerifyReport::to_json() const {
  json j{{"kind", kind},
         {"trials", trials},
         {"seed", seed},
         {"violations", violations},
         {"max_violation", io::real_json(max_violation)},
         {"worst_instance", witness},
         {"details", details}};
  j["min_slack"] = min_slack ? io::real_json(*min_slack) : json(nullptr);
  if (!failure.empty()) j["failure"] = failure;
  return j;
}

namespace {

using oracles::default_horizon;

VerifyReport start(const std::string& kind, const VerifyOptions& opt) {
  require(opt.trials >= 1, "trials must be at least 1");
  VerifyReport r;
  r.kind = kind;
  r.trials = opt.trials;
  r.seed = opt.seed;
  return r;
}

// Keeps the worst violation as the witness.
void record(VerifyReport& r, double amount, json witness, const std::string& msg) {
  const bool first = r.violations == 0;
  ++r.violations;
  if (first || amount > r.max_violation) {
    r.max_violation = std::max(r.max_violation, amount);
    r.witness = std::move(witness);
    r.failure = msg;
  }
}

void slack(VerifyReport& r, double s) { r.min_slack = r.min_slack ? std::min(*r.min_slack, s) : s; }

json seqs_json(std::initializer_list<const RepresentableSeq*> seqs) {
  std::vector<RepresentableSeq> v;
  for (const auto* s : seqs) v.push_back(*s);
  return io::instance_json(v);
}

json points_json(const FinitePointSet& pts) {
  json arr = json::array();
  for (const auto& p : pts) arr.push_back(io::to_json(p));
  return arr;
}

// Runs one trial; any exception thrown by an internal assertion counts as a
// violation carrying the trial's instance.
template <class F>
void guarded(VerifyReport& r, const std::function<json()>& instance, F&& body) {
  try {
    body();
  } catch (const std::exception& e) {
    record(r, std::numeric_limits<double>::infinity(), instance(), e.what());
  }
}

std::size_t pick_dim(Rng& rng, const VerifyOptions& opt, std::size_t lo, std::size_t hi) {
  return opt.dim ? opt.dim : random_size(rng, lo, hi);
}

GenOptions with_dim(GenOptions g, std::size_t dim) {
  if (dim) g.min_dim = g.max_dim = dim;
  return g;
}

template <class T>
std::vector<T> shuffled(std::vector<T> v, Rng& rng) {
  std::shuffle(v.begin(), v.end(), rng);
  return v;
}

RepresentableSeq permute_cycles(const RepresentableSeq& seq, Rng& rng) {
  auto perm = [&](const std::optional<ScalarSeq>& s) -> std::optional<ScalarSeq> {
    if (!s) return s;
    return ScalarSeq{s->preperiod, shuffled(s->cycle, rng)};
  };
  return RepresentableSeq(seq.kind(), seq.dim(), seq.preperiod(), shuffled(seq.cycle(), rng), perm(seq.spike()),
                          perm(seq.tail()));
}

RepresentableSeq random_of_kind(Rng& rng, SpaceKind kind, const GenOptions& g) {
  switch (kind) {
    case SpaceKind::sup_finite:
    case SpaceKind::euclidean:
      return random_finite(rng, kind, g);
    case SpaceKind::c0_spike:
      return random_c0_spike(rng, g);
    case SpaceKind::c_tail:
    case SpaceKind::linf_tail:
      return random_tail(rng, kind, g);
  }
  throw KindMismatch("unsupported kind");
}

// A sequence that converges to a random limit after a random prefix.
RepresentableSeq convergent_of_kind(Rng& rng, SpaceKind kind, std::size_t dim, const GenOptions& g, Selector& limit) {
  const RVec p = random_vector(rng, dim, g);
  std::vector<RVec> pre;
  for (std::size_t i = random_size(rng, 0, g.max_preperiod); i > 0; --i) pre.push_back(random_vector(rng, dim, g));
  auto scalar_pre = [&] {
    RVec v;
    for (std::size_t i = random_size(rng, 0, g.max_preperiod); i > 0; --i) v.push_back(random_rational(rng, g));
    return v;
  };
  switch (kind) {
    case SpaceKind::sup_finite:
      limit = p;
      return RepresentableSeq(kind, dim, pre, {p});
    case SpaceKind::euclidean:
      limit = to_double(p);
      return RepresentableSeq(kind, dim, pre, {p});
    case SpaceKind::c0_spike:
      limit = p;
      return RepresentableSeq(kind, dim, pre, {p}, ScalarSeq{scalar_pre(), {Rational(0)}});
    case SpaceKind::c_tail:
    case SpaceKind::linf_tail: {
      const Rational t = random_rational(rng, g);
      RVec lim = p;
      lim.push_back(t);
      limit = lim;
      return RepresentableSeq(kind, dim, pre, {p}, std::nullopt, ScalarSeq{scalar_pre(), {t}});
    }
  }
  throw KindMismatch("unsupported kind");
}

bool same_envelope(const Envelope& a, const Envelope& b) {
  if (a.lower != b.lower || a.upper != b.upper || a.infinity.has_value() != b.infinity.has_value()) return false;
  return !a.infinity || (a.infinity->lower == b.infinity->lower && a.infinity->upper == b.infinity->upper);
}

double rdiff(const Rational& a, const Rational& b) { return to_double(Rational(abs(a - b))); }

constexpr SpaceKind kLimKinds[] = {SpaceKind::c0_spike, SpaceKind::c_tail, SpaceKind::linf_tail};
constexpr SpaceKind kAllKinds[] = {SpaceKind::sup_finite, SpaceKind::euclidean, SpaceKind::c0_spike,
                                   SpaceKind::c_tail, SpaceKind::linf_tail};

}  // namespace

VerifyReport verify_holder(const VerifyOptions& opt) {
  auto r = start("holder", opt);
  for (std::size_t t = 0; t < opt.trials; ++t) {
    Rng rng(trial_seed(opt.seed, t));
    const std::size_t dim = pick_dim(rng, opt, 2, 5);
    const GenOptions g;
    const auto x = random_finite(rng, SpaceKind::euclidean, g, dim);
    // half the pairs share part of their cluster structure
    const auto y = t % 2 ? random_d_equivalent(rng, permute_cycles(x, rng), g) : random_finite(rng, SpaceKind::euclidean, g, dim);
    const auto y2 = t % 4 == 1 ? RepresentableSeq(SpaceKind::euclidean, dim, {}, [&] {
      auto c = y.cycle();
      c.push_back(random_vector(rng, dim, g));
      return c;
    }()) : y;
    guarded(r, [&] { return seqs_json({&x, &y2}); }, [&] { slack(r, holder_bound_check(x, y2, t).slack); });
  }
  return r;
}

VerifyReport verify_bp_sets(const VerifyOptions& opt) {
  auto r = start("bp-sets", opt);
  for (std::size_t t = 0; t < opt.trials; ++t) {
    Rng rng(trial_seed(opt.seed, t));
    const std::size_t dim = pick_dim(rng, opt, 2, 5);
    const GenOptions g;
    const auto a = random_point_set(rng, dim, random_size(rng, 1, 7), g);
    const auto b = random_point_set(rng, dim, random_size(rng, 1, 7), g);
    guarded(r, [&] { return json{{"A", points_json(a)}, {"B", points_json(b)}}; },
            [&] { slack(r, baronti_papini_sets_check(a, b, t).slack); });
  }
  return r;
}

VerifyReport verify_cac(const VerifyOptions& opt) {
  auto r = start("cac", opt);
  require(opt.delta >= 0 && opt.delta <= 1, "delta must lie in [0, 1]");
  constexpr std::size_t kSamples = 4;
  Rational worst = 0;
  for (std::size_t t = 0; t < opt.trials; ++t) {
    Rng rng(trial_seed(opt.seed, t));
    const auto seq = random_finite(rng, SpaceKind::sup_finite, with_dim(GenOptions{}, opt.dim));
    guarded(r, [&] { return seqs_json({&seq}); }, [&] {
      const auto rep = cac_inclusion_check(seq, opt.delta, trial_seed(opt.seed ^ 0x5eedULL, t), kSamples);
      worst = max(worst, rep.max_distance);
      if (rep.max_distance > opt.delta)
        record(r, rdiff(rep.max_distance, opt.delta), json{{"instance", seqs_json({&seq})}, {"sample", io::to_json(rep.witness)}},
               "sample farther than delta from the center box");
      if (rep.max_recenter_shift > 1)
        record(r, rdiff(rep.max_recenter_shift, 1), seqs_json({&seq}), "recentering moved a point more than 1");
    });
  }
  r.details = {{"delta", io::to_json(opt.delta)}, {"samples", opt.trials * kSamples}, {"max_distance", io::to_json(worst)}};
  return r;
}

VerifyReport verify_lim_identities(const VerifyOptions& opt) {
  auto r = start("lim-identities", opt);
  for (std::size_t t = 0; t < opt.trials; ++t) {
    Rng rng(trial_seed(opt.seed, t));
    const auto seq = random_of_kind(rng, kLimKinds[t % 3], with_dim(GenOptions{}, opt.dim));
    guarded(r, [&] { return seqs_json({&seq}); }, [&] {
      const auto q = lim_quantities(seq);
      if (q.beta > q.alpha) record(r, rdiff(q.beta, q.alpha), seqs_json({&seq}), "beta > alpha");
      if (max(q.beta, q.gamma) != max(q.alpha, q.gamma))
        record(r, rdiff(max(q.beta, q.gamma), max(q.alpha, q.gamma)), seqs_json({&seq}), "max{beta,gamma} != max{alpha,gamma}");
      const Rational two_delta = 2 * q.delta;
      if (max(q.beta, two_delta) != max(q.alpha, two_delta))
        record(r, rdiff(max(q.beta, two_delta), max(q.alpha, two_delta)), seqs_json({&seq}),
               "max{beta,2 delta} != max{alpha,2 delta}");
    });
  }
  return r;
}

VerifyReport verify_axioms(const VerifyOptions& opt) {
  auto r = start("axioms", opt);
  std::size_t zero_pairs = 0;
  for (std::size_t t = 0; t < opt.trials; ++t) {
    Rng rng(trial_seed(opt.seed, t));
    const SpaceKind kind = t % 2 ? SpaceKind::euclidean : SpaceKind::sup_finite;
    const GenOptions g{1, 3, 3, 4, 6, 2};
    const std::size_t dim = pick_dim(rng, opt, 1, 3);
    const auto x = random_finite(rng, kind, g, dim);
    const auto y = t % 3 == 0 ? random_d_equivalent(rng, x, g) : random_finite(rng, kind, g, dim);
    const auto z = t % 5 == 0 ? random_d_equivalent(rng, y, g) : random_finite(rng, kind, g, dim);
    const Norm native = native_norm(kind);
    const bool exact = kind == SpaceKind::sup_finite;
    auto instance = [&] { return seqs_json({&x, &y, &z}); };
    guarded(r, instance, [&] {
      const auto dxx = pseudometric_d(x, x, native), dxy = pseudometric_d(x, y, native),
                 dyx = pseudometric_d(y, x, native), dyz = pseudometric_d(y, z, native),
                 dxz = pseudometric_d(x, z, native);
      if (dxx.value() != 0) record(r, dxx.value(), instance(), "d(x,x) != 0");
      if (exact) {
        if (dxy.exact() != dyx.exact()) record(r, rdiff(dxy.exact(), dyx.exact()), instance(), "d not symmetric");
        if (dxz.exact() > dxy.exact() + dyz.exact())
          record(r, rdiff(dxz.exact(), dxy.exact() + dyz.exact()), instance(), "triangle inequality fails");
      } else {
        if (std::abs(dxy.value() - dyx.value()) > kGeometryTol)
          record(r, std::abs(dxy.value() - dyx.value()), instance(), "d not symmetric");
        if (dxz.value() > dxy.value() + dyz.value() + kGeometryTol)
          record(r, dxz.value() - dxy.value() - dyz.value(), instance(), "triangle inequality fails");
      }

      // zero distance: equal radii, centers and asymptotic distances
      if (dxy.value() == 0) {
        ++zero_pairs;
        if (exact) {
          if (center_box(envelopes_finiteK(x)) != center_box(envelopes_finiteK(y)))
            record(r, 1, instance(), "d = 0 but center boxes differ");
        } else {
          const auto bx = euclid_center(x, t), by = euclid_center(y, t);
          const double gap = std::max(std::abs(bx.radius - by.radius), euclid_distance(bx.center, by.center));
          if (gap > kGeometryTol) record(r, gap, instance(), "d = 0 but ball centers differ");
        }
        for (int s = 0; s < 3; ++s) {
          const auto w = random_vector(rng, dim, g);
          const auto ax = asymptotic_distance(x, w, native), ay = asymptotic_distance(y, w, native);
          if (std::abs(ax.value() - ay.value()) > (exact ? 0.0 : kGeometryTol) ||
              (exact && ax.exact() != ay.exact()))
            record(r, std::abs(ax.value() - ay.value()), instance(), "d = 0 but limsup |x_n - z| != limsup |y_n - z|");
        }
      }

      // zero-ness of d does not depend on the norm
      std::vector<Norm> family{Norm::sup(), Norm::one(), Norm::euclid()};
      for (std::size_t k = 0; k < opt.norm_family_size; ++k)
        family.push_back(random_polyhedral_norm(rng, dim, random_size(rng, 0, 2), g));
      const bool zero = pseudometric_d(x, y, family.front()).value() == 0;
      for (const auto& n : family)
        if ((pseudometric_d(x, y, n).value() == 0) != zero)
          record(r, 1, instance(), "d = 0 under one norm but not under " + n.name());
    });
  }
  r.details = {{"zero_distance_pairs", zero_pairs}};
  return r;
}

VerifyReport verify_ndist(const VerifyOptions& opt) {
  auto r = start("ndist", opt);
  for (std::size_t t = 0; t < opt.trials; ++t) {
    Rng rng(trial_seed(opt.seed, t));
    const GenOptions g;
    const auto env = random_envelope(rng, pick_dim(rng, opt, 1, 6), g);
    const std::size_t coord = random_size(rng, 0, env.size() - 1);
    const Rational s = env.lower[coord] + (env.upper[coord] - env.lower[coord]) * ratio(static_cast<long>(random_size(rng, 0, 16)), 16);
    auto instance = [&] { return json{{"envelope", io::to_json(env)}, {"coord", coord}, {"s", io::to_json(s)}}; };
    guarded(r, instance, [&] {
      const auto g0 = ndist_midpoint(env);
      const Rational half = env.max_gap() / 2;
      if (sup_norm(env.upper - g0) != half || sup_norm(g0 - env.lower) != half)
        record(r, 1, instance(), "midpoint equalities fail");
      const auto g1 = ndist_pinned(env, coord, s);
      const Rational reach = max(max(env.upper[coord] - s, s - env.lower[coord]), half);
      if (g1[coord] != s || envelope_deviation(env, g1) != reach)
        record(r, rdiff(envelope_deviation(env, g1), reach), instance(), "pinned max-equality fails");
    });
  }
  return r;
}

VerifyReport verify_selectors(const VerifyOptions& opt) {
  auto r = start("selectors", opt);
  for (std::size_t t = 0; t < opt.trials; ++t) {
    Rng rng(trial_seed(opt.seed, t));
    const SpaceKind kind = kAllKinds[t % 5];
    const GenOptions g = with_dim(GenOptions{}, opt.dim);
    const auto seq = random_of_kind(rng, kind, g);
    auto instance = [&] { return seqs_json({&seq}); };
    guarded(r, instance, [&] {
      const auto base = canonical_selector(seq, t);
      if (canonical_selector(seq.forward(), t) != base) record(r, 1, instance(), "selector changed under prefix removal");
      const auto perm = permute_cycles(seq, rng);
      if (canonical_selector(perm, t) != base)
        record(r, 1, seqs_json({&seq, &perm}), "selector changed under cycle permutation");
      if (seq.is_finite_dimensional()) {
        const auto eq = random_d_equivalent(rng, seq, g);
        if (canonical_selector(eq, t) != base)
          record(r, 1, seqs_json({&seq, &eq}), "selector changed under d-equivalence");
      }
      Selector limit;
      const auto conv = convergent_of_kind(rng, kind, seq.dim(), g, limit);
      if (canonical_selector(conv, t) != limit) record(r, 1, seqs_json({&conv}), "selector misses the limit");
    });
  }
  return r;
}

VerifyReport verify_hilbert_lemmas(const VerifyOptions& opt) {
  auto r = start("hilbert-lemmas", opt);
  double worst_shift = 0, worst_hull = 0;
  for (std::size_t t = 0; t < opt.trials; ++t) {
    Rng rng(trial_seed(opt.seed, t));
    const auto seq = random_finite(rng, SpaceKind::euclidean, GenOptions{}, pick_dim(rng, opt, 2, 5));
    auto instance = [&] { return seqs_json({&seq}); };
    guarded(r, instance, [&] {
      const auto ball = euclid_center(seq, t);
      std::vector<double> eps{0.1, 0.5};
      if (ball.radius > 0) eps.push_back(ball.radius / 2);
      for (double e : eps) {
        const auto far = far_subsequence(seq, e, t);
        const auto after = euclid_center(far, t);
        const double shift = std::max(euclid_distance(after.center, ball.center), std::abs(after.radius - ball.radius));
        worst_shift = std::max(worst_shift, shift);
        if (shift > kGeometryTol) record(r, shift, instance(), "far subsequence moved the center");
        const double hull = hull_membership_check(seq, e, t);
        worst_hull = std::max(worst_hull, hull);
        if (hull > kSlackTol) record(r, hull, instance(), "center is far from the hull of far cluster points");
      }
    });
  }
  r.details = {{"max_center_shift", io::real_json(worst_shift)}, {"max_hull_distance", io::real_json(worst_hull)}};
  return r;
}

VerifyReport verify_lim_parity(const VerifyOptions& opt) {
  auto r = start("lim-parity", opt);
  const GenOptions g = with_dim(GenOptions{1, 6, 3, 8, 8, 4}, opt.dim);
  for (std::size_t t = 0; t < opt.trials; ++t) {
    Rng rng(trial_seed(opt.seed, t));
    if (t % 2 == 0) {
      const auto seq = random_c0_spike(rng, g);
      guarded(r, [&] { return seqs_json({&seq}); }, [&] {
        const Rational lim = radius_lim(seq, LimSpace::c0);
        const Rational env = radius_c0(envelopes_c0(seq));
        if (lim != env) record(r, rdiff(lim, env), seqs_json({&seq}), "c0: Lim formula differs from envelope radius");
      });
    } else {
      const auto seq = random_tail(rng, SpaceKind::c_tail, g);
      guarded(r, [&] { return seqs_json({&seq}); }, [&] {
        const Rational in_c = radius_lim(seq, LimSpace::c);
        const Rational in_linf = radius_lim(seq, LimSpace::linf);
        const Rational oracle = oracles::radius_oracle_supnorm(seq).value;
        if (in_c != in_linf || in_c != oracle)
          record(r, std::max(rdiff(in_c, in_linf), rdiff(in_c, oracle)), seqs_json({&seq}),
                 "c: radius formulas and oracle disagree");
      });
    }
  }
  return r;
}

namespace {

void crosscheck_sup(VerifyReport& r, Rng& rng, std::size_t t, const VerifyOptions& opt) {
  const GenOptions g = with_dim(GenOptions{1, 4, 3, 4, 8, 4}, opt.dim);
  const auto seq = random_finite(rng, SpaceKind::sup_finite, g);
  const auto other = t % 3 == 0 ? random_d_equivalent(rng, seq, g) : random_finite(rng, SpaceKind::sup_finite, g, seq.dim());
  auto instance = [&] { return seqs_json({&seq, &other}); };
  guarded(r, instance, [&] {
    const std::size_t h = default_horizon(seq);
    const auto env = envelopes_finiteK(seq);
    if (!same_envelope(env, oracles::truncation_envelope(seq, h))) record(r, 1, instance(), "envelope != truncation");
    const auto box = center_box(env);
    const auto oracle = oracles::radius_oracle_supnorm(seq);
    if (box.radius != oracle.value) record(r, rdiff(box.radius, oracle.value), instance(), "radius != oracle");
    const auto mid = ndist_midpoint(env);
    if (asymptotic_distance_sup(seq, mid) != box.radius || oracles::truncated_asymptotic_distance(seq, mid, h) != box.radius)
      record(r, 1, instance(), "asymptotic distance at the center != radius");
    if (seq.dim() <= 2) {
      const auto grid = oracles::radius_oracle_grid(seq, ratio(1, 4));
      if (grid.value < box.radius || grid.value - box.radius > grid.resolution)
        record(r, rdiff(grid.value, box.radius), instance(), "grid oracle outside resolution");
    }
    const auto d = pseudometric_d(seq, other, Norm::sup());
    const std::size_t horizon =
        std::max(seq.joint_start(), other.joint_start()) + 2 * std::max(seq.joint_period(), other.joint_period());
    const auto b = pseudometric_d_truncated(seq, other, horizon, 1, Norm::sup());
    if (!b.stabilized || b.hi.exact() != d.exact() || b.lo.exact() > d.exact())
      record(r, rdiff(b.hi.exact(), d.exact()), instance(), "pseudometric != truncation bounds");
  });
}

void crosscheck_lim(VerifyReport& r, Rng& rng, SpaceKind kind, const VerifyOptions& opt) {
  const GenOptions g = with_dim(GenOptions{1, 4, 3, 4, 8, 4}, opt.dim);
  const auto seq = random_of_kind(rng, kind, g);
  auto instance = [&] { return seqs_json({&seq}); };
  guarded(r, instance, [&] {
    const std::size_t h = default_horizon(seq);
    const auto env = kind == SpaceKind::c0_spike ? envelopes_c0(seq) : envelopes_tail(seq);
    if (!same_envelope(env, oracles::truncation_envelope(seq, h))) record(r, 1, instance(), "envelope != truncation");
    if (lim_quantities(seq) != oracles::truncation_lim_quantities(seq, h))
      record(r, 1, instance(), "Lim quantities != truncation");
    const Rational oracle = oracles::radius_oracle_supnorm(seq).value;
    Rational closed;
    if (kind == SpaceKind::c0_spike) {
      closed = radius_c0(env);
      if (radius_lim(seq, LimSpace::c0) != closed) record(r, 1, instance(), "Lim c0 formula != envelope radius");
    } else {
      closed = radius_lim(seq, LimSpace::linf);
      if (kind == SpaceKind::c_tail && radius_lim(seq, LimSpace::c) != closed)
        record(r, 1, instance(), "c formula != l-infinity formula");
    }
    if (closed != oracle) record(r, rdiff(closed, oracle), instance(), "radius != oracle");
    const auto sel = std::get<RVec>(canonical_selector(seq));
    if (asymptotic_distance_sup(seq, sel) != closed) record(r, 1, instance(), "selector does not attain the radius");
    if (seq.dim() + (seq.has_tail() ? 1 : 0) <= 2) {
      const auto grid = oracles::radius_oracle_grid(seq, ratio(1, 4));
      if (grid.value < closed || grid.value - closed > grid.resolution)
        record(r, rdiff(grid.value, closed), instance(), "grid oracle outside resolution");
    }
  });
}

void crosscheck_euclid(VerifyReport& r, Rng& rng, std::size_t t, const VerifyOptions& opt) {
  const GenOptions g = with_dim(GenOptions{2, 5, 3, 5, 8, 4}, opt.dim);
  const auto seq = random_finite(rng, SpaceKind::euclidean, g);
  const auto other = random_finite(rng, SpaceKind::euclidean, g, seq.dim());
  auto instance = [&] { return seqs_json({&seq, &other}); };
  guarded(r, instance, [&] {
    const auto ball = euclid_center(seq, t);
    std::vector<DVec> pts;
    for (const auto& p : cluster_set(seq)) pts.push_back(to_double(p));
    const auto fw = oracles::radius_oracle_euclid(pts, 1e-14);
    const DVec fw_center(fw.argmin.begin(), fw.argmin.end());
    const double gap = std::max(std::abs(fw.value - ball.radius), euclid_distance(fw_center, ball.center));
    if (gap > 1e-6) record(r, gap, instance(), "ball differs from the dual oracle");
    const double at_center = asymptotic_distance(seq, ball.center, Norm::euclid());
    if (std::abs(at_center - ball.radius) > kGeometryTol)
      record(r, std::abs(at_center - ball.radius), instance(), "asymptotic distance at the center != radius");
    if (t % 10 == 0) {
      const auto sg = oracles::radius_subgradient(pts, 5000);
      if (sg.value < ball.radius - 1e-6) record(r, ball.radius - sg.value, instance(), "subgradient beat the ball");
    }
    const double d = pseudometric_d(seq, other, Norm::euclid()).value();
    const std::size_t horizon =
        std::max(seq.joint_start(), other.joint_start()) + 2 * std::max(seq.joint_period(), other.joint_period());
    const auto b = pseudometric_d_truncated(seq, other, horizon, 1, Norm::euclid());
    if (!b.stabilized || std::abs(b.hi.value() - d) > kGeometryTol || b.lo.value() > d + kGeometryTol)
      record(r, std::abs(b.hi.value() - d), instance(), "pseudometric != truncation bounds");
  });
}

}  // namespace

VerifyReport crosscheck(const std::string& space, const VerifyOptions& opt) {
  auto r = start("crosscheck-" + space, opt);
  for (std::size_t t = 0; t < opt.trials; ++t) {
    Rng rng(trial_seed(opt.seed, t));
    if (space == "sup") crosscheck_sup(r, rng, t, opt);
    else if (space == "c0") crosscheck_lim(r, rng, SpaceKind::c0_spike, opt);
    else if (space == "c") crosscheck_lim(r, rng, SpaceKind::c_tail, opt);
    else if (space == "linf") crosscheck_lim(r, rng, SpaceKind::linf_tail, opt);
    else if (space == "euclid") crosscheck_euclid(r, rng, t, opt);
    else throw InvalidInput("unknown space '" + space + "'");
  }
  return r;
}

namespace {

struct NormVerdict {
  std::string norm;
  bool same_radius = false;
  bool same_center = false;
};

FinitePointSet rotate90(const FinitePointSet& pts) {
  FinitePointSet out;
  for (const auto& p : pts) out.push_back({-p[1], p[0]});
  return out;
}

FinitePointSet swap_coords(const FinitePointSet& pts) {
  FinitePointSet out;
  for (const auto& p : pts) out.push_back({p[1], p[0]});
  return out;
}

FinitePointSet symmetrize(const FinitePointSet& pts) {
  FinitePointSet out = pts;
  for (const auto& p : pts) out.push_back({-p[0], -p[1]});
  return out;
}

std::vector<NormVerdict> compare_centers(const FinitePointSet& a, const FinitePointSet& b, const std::vector<Norm>& norms) {
  std::vector<NormVerdict> out;
  {
    const auto ba = smallest_enclosing_ball(a), bb = smallest_enclosing_ball(b);
    out.push_back({"euclid", std::abs(ba.radius - bb.radius) <= kGeometryTol,
                   euclid_distance(ba.center, bb.center) <= kGeometryTol});
  }
  for (const auto& n : norms) {
    const auto ca = polyhedral_chebyshev_center(a, n), cb = polyhedral_chebyshev_center(b, n);
    out.push_back({n.name(), ca.radius == cb.radius, ca.vertices == cb.vertices});
  }
  return out;
}

RepresentableSeq alternating(const FinitePointSet& pts) {
  return RepresentableSeq(SpaceKind::euclidean, 2, {}, pts);
}

}  // namespace

VerifyReport fuzz_conjecture(const VerifyOptions& opt) {
  auto r = start("fuzz-conjecture", opt);
  const GenOptions g{2, 2, 0, 4, 6, 2};

  // The two-point example: d = sqrt 2, same Euclidean centers, separated by sup.
  const FinitePointSet px{{-1, 0}, {1, 0}}, py{{0, -1}, {0, 1}};
  const auto two_point = compare_centers(px, py, {Norm::sup()});
  json two_point_json = json::array();
  for (const auto& v : two_point) two_point_json.push_back({{"norm", v.norm}, {"same_radius", v.same_radius}, {"same_center", v.same_center}});

  json candidates = json::array();
  std::size_t excluded = 0, tested = 0;
  for (std::size_t t = 0; t < opt.trials; ++t) {
    Rng rng(trial_seed(opt.seed, t));
    FinitePointSet a = random_point_set(rng, 2, random_size(rng, 1, 4), g);
    FinitePointSet b;
    switch (t % 3) {
      case 0: b = random_point_set(rng, 2, random_size(rng, 1, 4), g); break;
      case 1: a = symmetrize(a); b = rotate90(a); break;
      default: b = swap_coords(a); break;
    }
    const auto x = alternating(a), y = alternating(b);
    if (pseudometric_d(x, y, Norm::euclid()).value() == 0) {
      ++excluded;
      continue;
    }
    ++tested;
    std::vector<Norm> norms{Norm::sup(), Norm::one()};
    for (std::size_t k = 0; k < opt.norm_family_size; ++k) norms.push_back(random_polyhedral_norm(rng, 2, random_size(rng, 0, 2), g));
    try {
      const auto verdicts = compare_centers(cluster_set(x), cluster_set(y), norms);
      const bool all = std::all_of(verdicts.begin(), verdicts.end(), [](const NormVerdict& v) { return v.same_radius && v.same_center; });
      if (all) {
        json norms_json = json::array();
        for (const auto& n : norms) {
          json rows = json::array();
          for (const auto& row : n.as_functionals(2)) rows.push_back(io::to_json(row));
          norms_json.push_back(rows);
        }
        candidates.push_back({{"trial", t}, {"instance", seqs_json({&x, &y})}, {"norms", norms_json}});
      }
    } catch (const std::exception& e) {
      r.details["errors"].push_back({{"trial", t}, {"message", e.what()}});
    }
  }
  r.details["two_point_pair"] = two_point_json;
  r.details["two_point_pair_separated"] =
      std::any_of(two_point.begin(), two_point.end(), [](const NormVerdict& v) { return !(v.same_radius && v.same_center); });
  r.details["tested_pairs"] = tested;
  r.details["excluded_d_zero"] = excluded;
  r.details["candidates"] = candidates;
  return r;
}

VerifyReport run_suite(const std::string& kind, const VerifyOptions& opt) {
  if (kind == "holder") return verify_holder(opt);
  if (kind == "bp-sets") return verify_bp_sets(opt);
  if (kind == "cac") return verify_cac(opt);
  if (kind == "lim-identities") return verify_lim_identities(opt);
  if (kind == "axioms") return verify_axioms(opt);
  if (kind == "ndist") return verify_ndist(opt);
  if (kind == "selectors") return verify_selectors(opt);
  if (kind == "hilbert-lemmas") return verify_hilbert_lemmas(opt);
  if (kind == "lim-parity") return verify_lim_parity(opt);
  throw InvalidInput("unknown verify suite '" + kind + "'");
}

}  // namespace ascenter::verify
