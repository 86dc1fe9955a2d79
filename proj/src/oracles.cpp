#include "ascenter/oracles.hpp"

#include <algorithm>
#include <cmath>

namespace ascenter::oracles {

std::string to_string(Method m) {
  switch (m) {
    case Method::coordinate_exact: return "coordinate_exact";
    case Method::grid: return "grid";
    case Method::subgradient: return "subgradient";
    case Method::dual_frank_wolfe: return "dual_frank_wolfe";
    case Method::truncation: return "truncation";
  }
  return "?";
}

std::size_t default_horizon(const RepresentableSeq& seq) {
  return std::max({seq.joint_start(), seq.dim() + 1, seq.joint_period() + 2});
}

namespace {

void check_horizon(const RepresentableSeq& seq, std::size_t horizon) {
  require(horizon >= default_horizon(seq), "horizon must pass the preperiods, dim and one period");
}

// Materialized window: terms n in [h, h + 2 * period).
struct Window {
  std::size_t first;
  std::size_t last;  // exclusive
};

Window window_at(const RepresentableSeq& seq, std::size_t h) { return {h, h + 2 * seq.joint_period()}; }

// Coordinates beyond dim that can be nonzero or distinct within the window.
std::size_t far_coordinate_limit(const RepresentableSeq& seq, const Window& w) {
  if (seq.is_finite_dimensional()) return seq.dim();
  // tail coordinates beyond dim all coincide
  if (seq.has_tail()) return std::max(seq.dim() + 2, w.first + 2);
  return seq.dim() + w.last + 1;
}

Bounds window_bounds(const RepresentableSeq& seq, const Window& w, std::size_t k) {
  Bounds b{seq.coordinate(w.first, k), seq.coordinate(w.first, k)};
  for (std::size_t n = w.first; n < w.last; ++n) {
    const Rational& v = seq.coordinate(n, k);
    b.lower = min(b.lower, v);
    b.upper = max(b.upper, v);
  }
  return b;
}

// sup/inf of x_n(k) over n in the window and k in [k_first, k_last].
Bounds block_bounds(const RepresentableSeq& seq, const Window& w, std::size_t k_first, std::size_t k_last) {
  Bounds b{seq.coordinate(w.first, k_first), seq.coordinate(w.first, k_first)};
  for (std::size_t n = w.first; n < w.last; ++n)
    for (std::size_t k = k_first; k <= k_last; ++k) {
      const Rational& v = seq.coordinate(n, k);
      b.lower = min(b.lower, v);
      b.upper = max(b.upper, v);
    }
  return b;
}

Rational quantity_at(const RepresentableSeq& seq, Quantity q, std::size_t m) {
  const Window w = window_at(seq, m);
  const std::size_t k_far = far_coordinate_limit(seq, w);
  switch (q) {
    case Quantity::alpha: {
      Rational best = 0;
      for (std::size_t k = 1; k <= k_far; ++k) {
        const auto b = window_bounds(seq, w, k);
        best = max(best, b.upper - b.lower);
      }
      return best;
    }
    case Quantity::beta: {
      // Coordinates up to dim + period + 1 cover every distinct behavior;
      // m > period + 1 keeps the window past their spikes.
      Rational best = 0;
      const std::size_t k_last = seq.is_finite_dimensional() ? seq.dim() : seq.dim() + seq.joint_period() + 1;
      for (std::size_t k = 1; k <= k_last; ++k) {
        const auto b = window_bounds(seq, w, k);
        best = max(best, b.upper - b.lower);
      }
      return best;
    }
    case Quantity::gamma: {
      const auto b = block_bounds(seq, w, m, k_far);
      return b.upper - b.lower;
    }
    case Quantity::delta: {
      const auto b = block_bounds(seq, w, m, k_far);
      return max(abs(b.lower), abs(b.upper));
    }
  }
  return 0;
}

}  // namespace

Envelope truncation_envelope(const RepresentableSeq& seq, std::size_t horizon) {
  check_horizon(seq, horizon);
  const Window w = window_at(seq, horizon);
  Envelope env;
  for (std::size_t k = 1; k <= seq.dim(); ++k) {
    const auto b = window_bounds(seq, w, k);
    env.lower.push_back(b.lower);
    env.upper.push_back(b.upper);
  }
  if (seq.spike()) {
    env.infinity = block_bounds(seq, w, horizon, far_coordinate_limit(seq, w));
  } else if (seq.tail()) {
    const auto b = block_bounds(seq, w, seq.dim() + 1, seq.dim() + 3);
    env.lower.push_back(b.lower);
    env.upper.push_back(b.upper);
  }
  return env;
}

OracleResult<Rational> truncation_oracle(const RepresentableSeq& seq, Quantity q, std::size_t horizon) {
  if (seq.is_finite_dimensional()) throw KindMismatch("Lim quantities need a c0_spike, c_tail or linf_tail sequence");
  check_horizon(seq, horizon);
  const Rational a = quantity_at(seq, q, horizon);
  const Rational b = quantity_at(seq, q, horizon + seq.joint_period());
  ensure(a == b, "truncation window did not stabilize");
  return {a, {}, 0, Method::truncation};
}

LimQuantities truncation_lim_quantities(const RepresentableSeq& seq, std::size_t horizon) {
  return {truncation_oracle(seq, Quantity::alpha, horizon).value, truncation_oracle(seq, Quantity::beta, horizon).value,
          truncation_oracle(seq, Quantity::gamma, horizon).value,
          truncation_oracle(seq, Quantity::delta, horizon).value};
}

Rational truncated_asymptotic_distance(const RepresentableSeq& seq, const RVec& y, std::size_t horizon) {
  check_horizon(seq, horizon);
  const Window w = window_at(seq, horizon);
  const std::size_t k_far = seq.is_finite_dimensional() ? seq.dim() : far_coordinate_limit(seq, w);
  auto y_at = [&](std::size_t k) -> Rational {
    if (k <= seq.dim()) return y[k - 1];
    return y.size() > seq.dim() ? y.back() : Rational(0);
  };
  Rational worst = 0;
  for (std::size_t n = w.first; n < w.last; ++n)
    for (std::size_t k = 1; k <= k_far; ++k) worst = max(worst, abs(seq.coordinate(n, k) - y_at(k)));
  return worst;
}

OracleResult<Rational> radius_oracle_supnorm(const RepresentableSeq& seq) {
  if (seq.kind() == SpaceKind::euclidean) throw KindMismatch("sup-norm oracle does not apply to euclidean sequences");
  const std::size_t h = default_horizon(seq);
  const Window w = window_at(seq, h);
  OracleResult<Rational> out;
  out.method = Method::coordinate_exact;
  // Free coordinates: 1..dim, plus the shared tail coordinate.
  const std::size_t free = seq.has_tail() ? seq.dim() + 1 : seq.dim();
  for (std::size_t k = 1; k <= free; ++k) {
    const auto b = window_bounds(seq, w, k);
    out.argmin.push_back((b.lower + b.upper) / 2);
    out.value = max(out.value, Rational((b.upper - b.lower) / 2));
  }
  if (seq.spike()) {
    // the spike coordinate of term n is untouched by a finitely supported y
    for (std::size_t n = w.first; n < w.last; ++n) out.value = max(out.value, abs(seq.coordinate(n, seq.dim() + n)));
  }
  ensure(truncated_asymptotic_distance(seq, out.argmin, h) == out.value, "sup-norm oracle argmin is not certified");
  return out;
}

OracleResult<Rational> radius_oracle_grid(const RepresentableSeq& seq, const Rational& step) {
  if (seq.kind() == SpaceKind::euclidean) throw KindMismatch("sup-norm oracle does not apply to euclidean sequences");
  require(step > 0, "grid step must be positive");
  const std::size_t h = default_horizon(seq);
  const Window w = window_at(seq, h);
  const std::size_t free = seq.has_tail() ? seq.dim() + 1 : seq.dim();
  require(free <= 4, "grid oracle is limited to four free coordinates");

  // Materialize the window: free coordinates and the |spike| lower bound.
  std::vector<RVec> terms;
  Rational floor_value = 0;
  for (std::size_t n = w.first; n < w.last; ++n) {
    RVec t;
    for (std::size_t k = 1; k <= free; ++k) t.push_back(seq.coordinate(n, k));
    terms.push_back(std::move(t));
    if (seq.spike()) floor_value = max(floor_value, abs(seq.coordinate(n, seq.dim() + n)));
  }
  std::vector<RVec> axes(free);
  for (std::size_t k = 0; k < free; ++k) {
    const auto b = window_bounds(seq, w, k + 1);
    for (Rational v = b.lower; v < b.upper; v += step) axes[k].push_back(v);
    axes[k].push_back(b.upper);
  }

  OracleResult<Rational> out;
  out.method = Method::grid;
  out.resolution = step / 2;
  bool first = true;
  std::vector<std::size_t> idx(free, 0);
  RVec y(free);
  while (true) {
    for (std::size_t k = 0; k < free; ++k) y[k] = axes[k][idx[k]];
    Rational v = floor_value;
    for (const auto& t : terms)
      for (std::size_t k = 0; k < free; ++k) v = max(v, abs(t[k] - y[k]));
    if (first || v < out.value) {
      out.value = v;
      out.argmin = y;
      first = false;
    }
    std::size_t k = 0;
    while (k < free && ++idx[k] == axes[k].size()) idx[k++] = 0;
    if (k == free) break;
  }
  return out;
}

OracleResult<double> radius_oracle_euclid(const std::vector<DVec>& points, double target_gap, std::size_t max_iters) {
  require(!points.empty(), "oracle needs a nonempty point set");
  const std::size_t n = points.size();
  const std::size_t dim = points.front().size();
  std::vector<double> norms_sq(n);
  for (std::size_t i = 0; i < n; ++i) norms_sq[i] = std::pow(euclid_norm(points[i]), 2);

  // Start at the vertex farthest from points[0].
  std::size_t start = 0;
  for (std::size_t i = 1; i < n; ++i)
    if (euclid_distance(points[i], points[0]) > euclid_distance(points[start], points[0])) start = i;
  std::vector<double> lambda(n, 0.0);
  lambda[start] = 1.0;

  DVec c(dim);
  double phi = 0, far_sq = 0;
  std::size_t far = 0, near = 0;
  auto refresh = [&] {
    std::fill(c.begin(), c.end(), 0.0);
    double weighted = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (lambda[i] == 0) continue;
      weighted += lambda[i] * norms_sq[i];
      for (std::size_t k = 0; k < dim; ++k) c[k] += lambda[i] * points[i][k];
    }
    phi = weighted - std::pow(euclid_norm(c), 2);
    far_sq = -1;
    double near_sq = INFINITY;
    for (std::size_t i = 0; i < n; ++i) {
      const double d = std::pow(euclid_distance(points[i], c), 2);
      if (d > far_sq) {
        far_sq = d;
        far = i;
      }
      if (lambda[i] > 0 && d < near_sq) {
        near_sq = d;
        near = i;
      }
    }
    return near_sq;
  };

  for (std::size_t it = 0; it < max_iters; ++it) {
    const double near_sq = refresh();
    if (std::sqrt(far_sq) - std::sqrt(std::max(phi, 0.0)) <= target_gap) break;
    const double gain_fw = far_sq - phi;
    const double gain_away = phi - near_sq;
    if (gain_fw >= gain_away || lambda[near] >= 1.0) {
      const double t = std::clamp(gain_fw / (2 * far_sq), 0.0, 1.0);
      for (auto& l : lambda) l *= 1 - t;
      lambda[far] += t;
    } else {
      const double t_max = lambda[near] / (1 - lambda[near]);
      const double t = near_sq > 0 ? std::min(gain_away / (2 * near_sq), t_max) : t_max;
      for (auto& l : lambda) l *= 1 + t;
      lambda[near] -= t;
      if (t == t_max) lambda[near] = 0;
    }
  }
  refresh();
  OracleResult<double> out;
  out.value = std::sqrt(far_sq);
  out.argmin = c;
  out.resolution = out.value - std::sqrt(std::max(phi, 0.0));
  out.method = Method::dual_frank_wolfe;
  return out;
}

OracleResult<double> radius_subgradient(const std::vector<DVec>& points, std::size_t iters, double step_scale) {
  require(!points.empty(), "oracle needs a nonempty point set");
  const std::size_t dim = points.front().size();
  DVec y(dim, 0.0);
  for (const auto& p : points)
    for (std::size_t k = 0; k < dim; ++k) y[k] += p[k] / static_cast<double>(points.size());
  auto value_at = [&](const DVec& z, std::size_t* arg) {
    double best = -1;
    for (std::size_t i = 0; i < points.size(); ++i) {
      const double d = euclid_distance(points[i], z);
      if (d > best) {
        best = d;
        if (arg) *arg = i;
      }
    }
    return best;
  };
  if (step_scale <= 0) step_scale = std::max(value_at(y, nullptr), 1e-12) / 2;

  OracleResult<double> out;
  out.method = Method::subgradient;
  out.argmin = y;
  out.value = value_at(y, nullptr);
  for (std::size_t t = 1; t <= iters; ++t) {
    std::size_t arg = 0;
    const double v = value_at(y, &arg);
    if (v < out.value) {
      out.value = v;
      out.argmin = y;
    }
    if (v == 0) break;
    const double step = step_scale / std::sqrt(static_cast<double>(t));
    for (std::size_t k = 0; k < dim; ++k) y[k] -= step * (y[k] - points[arg][k]) / v;
  }
  out.resolution = step_scale / std::sqrt(static_cast<double>(iters));
  return out;
}

}  // namespace ascenter::oracles
