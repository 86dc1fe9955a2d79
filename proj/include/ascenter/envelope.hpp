#pragma once

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "ascenter/rational.hpp"
#include "ascenter/sequence.hpp"

namespace ascenter {

struct Bounds {
  Rational lower;
  Rational upper;
};

// Lower/upper envelopes a <= b on the points of K. Coordinates are 0-based;
// `infinity` holds the values at the point at infinity of the one-point
// compactification when the model is c0.
struct Envelope {
  RVec lower;
  RVec upper;
  std::optional<Bounds> infinity;

  std::size_t size() const { return lower.size(); }
  // max over every point, infinity included, of upper - lower.
  Rational max_gap() const;
};

// Checks lower <= upper pointwise and matching lengths.
Envelope make_envelope(RVec lower, RVec upper, std::optional<Bounds> infinity = std::nullopt);

struct Interval {
  Rational lo;
  Rational hi;

  bool empty() const { return hi < lo; }
  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
  Rational clamp(const Rational& x) const { return ascenter::clamp(x, lo, hi); }
  // Distance from x to the interval.
  Rational distance(const Rational& x) const;
  bool operator==(const Interval&) const = default;
};

// Center set {g : max(||b - g||, ||g - a||) <= radius} as a product of
// intervals [b_k - radius, a_k + radius].
struct CenterBox {
  Rational radius;
  std::vector<Interval> intervals;

  bool contains(const RVec& g) const;
  // Sup-norm distance from h to the box.
  Rational distance(const RVec& h) const;
  bool operator==(const CenterBox&) const = default;
};

// Pointwise cycle max/min of a sup_finite sequence.
Envelope envelopes_finiteK(const RepresentableSeq& seq);

// c_tail / linf_tail: dim + 1 entries, the last one covering every coordinate
// beyond dim and the point at infinity (all share the tail cycle's range).
Envelope envelopes_tail(const RepresentableSeq& seq);

// max(||b - g||, ||g - a||) over the finite coordinates, plus the point at
// infinity (where g vanishes) when the envelope has one.
Rational envelope_deviation(const Envelope& env, const RVec& g);

// Radius (1/2)||b - a|| and the center box of an envelope without infinity.
CenterBox center_box(const Envelope& env);

// g = (a + b) / 2, checked to satisfy ||b - g|| = ||g - a|| = (1/2)||b - a||.
RVec ndist_midpoint(const Envelope& env);

// g with g(coord) = s and max(||b - g||, ||g - a||) equal to
// max(b(coord) - s, s - a(coord), (1/2)||b - a||); other coordinates are the
// midpoint clamped into [b_k - R, a_k + R] for that R.
RVec ndist_pinned(const Envelope& env, std::size_t coord, const Rational& s);

// Exact for sup_finite, c0_spike and the tail kinds; float for euclidean.
using Selector = std::variant<RVec, DVec>;

// An asymptotic center determined only by the envelope (or the cluster set
// in the Euclidean case): midpoint for sup_finite and the tail kinds, the
// zero-clamp rule for c0_spike, the smallest-enclosing-ball center for
// euclidean.
Selector canonical_selector(const RepresentableSeq& seq, std::uint64_t seed = 0);

// z = h + clamp(g - h, -1, 1), coordinatewise. Requires g in the center box
// and h in the delta-enlargement, 0 <= delta <= 1; z lands in the center box
// within sup distance 1 of h.
RVec cac_clamp_recenter(const Envelope& env, const RVec& g, const RVec& h, const Rational& delta);

struct CacReport {
  std::size_t trials = 0;
  Rational max_distance = 0;  // max sup distance from a sample to the center box
  RVec witness;               // the sample attaining it
  Rational max_recenter_shift = 0;  // max ||z - h|| over recentered samples
};

// Samples A_delta (the box [b - r - delta, a + r + delta]) and measures the
// distance to the center box. The first sample is the lower corner of A_delta.
CacReport cac_inclusion_check(const RepresentableSeq& seq, const Rational& delta, std::uint64_t seed,
                              std::size_t trials);

}  // namespace ascenter
