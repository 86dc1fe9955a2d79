#pragma once

#include <cstdint>
#include <vector>

#include "ascenter/rational.hpp"
#include "ascenter/sequence.hpp"

namespace ascenter {

inline constexpr double kGeometryTol = 1e-9;
inline constexpr double kSlackTol = 1e-7;

struct BallCenter {
  DVec center;
  double radius = 0;
  // Input points on the sphere (within 1e-9 relative).
  std::vector<DVec> support;
};

// Smallest enclosing ball by Welzl's move-to-front recursion. The insertion
// order is shuffled with `seed`; duplicates are removed first.
BallCenter smallest_enclosing_ball(const std::vector<DVec>& points, std::uint64_t seed = 0);
BallCenter smallest_enclosing_ball(const FinitePointSet& points, std::uint64_t seed = 0);

// Euclidean distance from x to the convex hull of `points` (Wolfe's
// minimum-norm-point algorithm).
double hull_distance(const std::vector<DVec>& points, const DVec& x);

// Asymptotic center and radius of a finite-dimensional sequence under the
// Euclidean norm: the smallest enclosing ball of its cluster set.
BallCenter euclid_center(const RepresentableSeq& seq, std::uint64_t seed = 0);

// Restricts seq to the positions whose value lies farther than r - eps from
// the center. Checks that center and radius are preserved within 1e-9.
RepresentableSeq far_subsequence(const RepresentableSeq& seq, double eps, std::uint64_t seed = 0);

// Distance from the center to the hull of cluster points at distance >= r - eps.
double hull_membership_check(const RepresentableSeq& seq, double eps, std::uint64_t seed = 0);

struct BoundCheck {
  double center_gap_sq = 0;  // ||c1 - c2||^2
  double bound = 0;          // d (r1 + r2 + d)
  double slack = 0;          // bound - center_gap_sq
  double d = 0;
  double r1 = 0;
  double r2 = 0;
};

// ||A(x) - A(y)||^2 <= d(x,y) (r(x) + r(y) + d(x,y)); throws when the slack
// falls below -1e-7.
BoundCheck holder_bound_check(const RepresentableSeq& x, const RepresentableSeq& y, std::uint64_t seed = 0);

// Same inequality for Chebyshev centers of finite sets and their Hausdorff distance.
BoundCheck baronti_papini_sets_check(const FinitePointSet& a, const FinitePointSet& b, std::uint64_t seed = 0);

}  // namespace ascenter
