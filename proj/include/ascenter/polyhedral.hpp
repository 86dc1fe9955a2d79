#pragma once

#include <vector>

#include "ascenter/norm.hpp"
#include "ascenter/sequence.hpp"

namespace ascenter {

// Chebyshev radius and center set of a finite set under a polyhedral norm
// max_j |<w_j, v>|. The center set is a polytope, described by its sorted
// vertex list so that two center sets compare equal iff they coincide.
struct PolyhedralCenter {
  Rational radius;
  std::vector<RVec> vertices;
};

// Exact linear programming by vertex enumeration; meant for dim <= 3.
PolyhedralCenter polyhedral_chebyshev_center(const FinitePointSet& points, const Norm& norm);

}  // namespace ascenter
