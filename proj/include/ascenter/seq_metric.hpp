#pragma once

#include <cstddef>
#include <vector>

#include "ascenter/norm.hpp"
#include "ascenter/sequence.hpp"

namespace ascenter {

// C_n(x) = {x_m : m >= n} as a finite set of distinct values.
struct TailSet {
  std::size_t index = 1;
  FinitePointSet points;  // sorted lexicographically
};

TailSet tail_set(const RepresentableSeq& seq, std::size_t n);

Distance hausdorff_distance(const FinitePointSet& a, const FinitePointSet& b, const Norm& norm);
double hausdorff_distance(const std::vector<DVec>& a, const std::vector<DVec>& b);

// d(x, y) = inf{eps : for every n some m has C_m(x) in C_n(y) + eps B and
// C_m(y) in C_n(x) + eps B}. For finite-dimensional eventually periodic
// sequences this is the Hausdorff distance between the cluster sets.
Distance pseudometric_d(const RepresentableSeq& x, const RepresentableSeq& y, const Norm& norm);

struct DistanceBounds {
  Distance lo{Rational(0)};
  Distance hi{Rational(0)};
  // The horizon reaches past both preperiods plus a full cycle, so hi = d.
  bool stabilized = false;
};

// Brute-force evaluation of the defining quantifiers over the terms
// x_1..x_horizon, y_1..y_horizon:
//   E(n) = min_m max(sup_{j>=m} min_{i>=n} |x_j - y_i|, sup_{i>=m} min_{j>=n} |x_j - y_i|)
// lo = E(tail_index), hi = E(last usable n). Works for every kind (sup norm
// outside the finite-dimensional kinds). A positive resolution rounds the
// bounds outward to that grid.
DistanceBounds pseudometric_d_truncated(const RepresentableSeq& x, const RepresentableSeq& y, std::size_t horizon,
                                        std::size_t tail_index, const Norm& norm, double resolution = 0);

}  // namespace ascenter
