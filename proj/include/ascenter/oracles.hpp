#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ascenter/c0_lim.hpp"
#include "ascenter/envelope.hpp"
#include "ascenter/sequence.hpp"

// Brute-force solvers that never call the closed-form modules; they work from
// materialized terms x_n(k) over finite windows.
namespace ascenter::oracles {

enum class Method { coordinate_exact, grid, subgradient, dual_frank_wolfe, truncation };

std::string to_string(Method m);

template <class T>
struct OracleResult {
  T value{};             // an upper bound on the true minimum within `resolution`
  std::vector<T> argmin;
  T resolution{};
  Method method = Method::coordinate_exact;
};

// Smallest n0 such that every window of terms starting at or after n0
// spanning `2 * period` terms shows the full periodic pattern.
std::size_t default_horizon(const RepresentableSeq& seq);

// Envelope read off terms n in [h, h + 2 * period) with h = horizon; for
// c0_spike the point at infinity uses coordinates k >= h.
Envelope truncation_envelope(const RepresentableSeq& seq, std::size_t horizon);

enum class Quantity { alpha, beta, gamma, delta };

// Evaluates the defining sup/inf expressions of one Lim quantity over finite
// windows at two consecutive offsets (horizon and horizon + period) and
// throws InvariantViolation unless they agree.
OracleResult<Rational> truncation_oracle(const RepresentableSeq& seq, Quantity q, std::size_t horizon);
LimQuantities truncation_lim_quantities(const RepresentableSeq& seq, std::size_t horizon);

// limsup_n sup_k |x_n(k) - y(k)| over a window of materialized terms.
Rational truncated_asymptotic_distance(const RepresentableSeq& seq, const RVec& y, std::size_t horizon);

// Minimizes y -> limsup_n ||x_n - y||_inf coordinate by coordinate with exact
// interval reasoning. Supports sup_finite, c0_spike and the tail kinds (the
// tail coordinates get their own free value). The minimum is certified by
// re-evaluating the truncated distance at the argmin.
OracleResult<Rational> radius_oracle_supnorm(const RepresentableSeq& seq);

// Grid search over y with spacing `step` inside the bounding box of the
// window values; value within step / 2 of the minimum. Intended for dim <= 3.
OracleResult<Rational> radius_oracle_grid(const RepresentableSeq& seq, const Rational& step);

// Euclidean Chebyshev radius of a finite set via the dual problem
//   max_{lambda in simplex} sum_i lambda_i |p_i|^2 - |sum_i lambda_i p_i|^2
// solved by Frank-Wolfe with away steps. `resolution` is the certified gap
// between the primal value and the dual bound.
OracleResult<double> radius_oracle_euclid(const std::vector<DVec>& points, double target_gap = 1e-10,
                                          std::size_t max_iters = 200000);

// Plain projected subgradient descent on y -> max_p |p - y| from the
// centroid with step c / sqrt(t). Coarse: O(1 / sqrt(t)) accuracy.
OracleResult<double> radius_subgradient(const std::vector<DVec>& points, std::size_t iters = 20000,
                                        double step_scale = 0.0);

}  // namespace ascenter::oracles
