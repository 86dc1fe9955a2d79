#pragma once

#include "ascenter/envelope.hpp"
#include "ascenter/rational.hpp"
#include "ascenter/sequence.hpp"

namespace ascenter {

// c0 viewed as continuous functions on the one-point compactification of N.
// Finite coordinates carry the core cycle max/min (zero beyond dim); the
// point at infinity carries max(0, max spike) and min(0, min spike).
Envelope envelopes_c0(const RepresentableSeq& seq);

// max(b(inf), -a(inf), (1/2) max_t (b(t) - a(t))).
Rational radius_c0(const Envelope& env);

// Center set restricted to finitely supported g: intervals [b_k - R, a_k + R]
// at the finite coordinates with R = radius_c0(env).
CenterBox center_box_c0(const Envelope& env);

// g_k = clamp(0, [b_k - R, a_k + R]); vanishes beyond dim, hence lies in c0.
RVec center_selector_c0(const Envelope& env);

// Scalars from the proof of Lim's radius formulas:
//   alpha = lim_m sup_k (sup_{n>=m} x_n(k) - inf_{n>=m} x_n(k))
//   beta  = sup_k (limsup_n x_n(k) - liminf_n x_n(k))
//   gamma = limsup_{n,k} x_n(k) - liminf_{n,k} x_n(k)
//   delta = limsup_{n,k} |x_n(k)|
struct LimQuantities {
  Rational alpha;
  Rational beta;
  Rational gamma;
  Rational delta;
  bool operator==(const LimQuantities&) const = default;
};

// alpha_m for a 1-based m.
Rational alpha_at(const RepresentableSeq& seq, std::size_t m);

LimQuantities lim_quantities(const RepresentableSeq& seq);

// Throws InvariantViolation unless beta <= alpha,
// max(beta, gamma) = max(alpha, gamma) and max(beta, 2 delta) = max(alpha, 2 delta).
void check_lim_identities(const LimQuantities& q);

enum class LimSpace { c0, c, linf };

// Lim's closed forms:
//   c0:   max(alpha / 2, lim_m limsup_k sup_{n>=m} |x_n(k)|)
//   c:    (1/2) max(alpha, lim_m (limsup_k sup_{n>=m} x_n(k) - liminf_k inf_{n>=m} x_n(k)))
//   linf: alpha / 2
Rational radius_lim(const RepresentableSeq& seq, LimSpace space);

}  // namespace ascenter
