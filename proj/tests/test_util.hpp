#pragma once

#include <string>
#include <vector>

#include "ascenter/sequence.hpp"

namespace ascenter::test {

inline RVec rv(std::initializer_list<const char*> xs) {
  RVec out;
  for (const char* x : xs) out.push_back(parse_rational(x));
  return out;
}

inline RepresentableSeq finite(SpaceKind kind, std::vector<RVec> pre, std::vector<RVec> cycle) {
  const std::size_t dim = cycle.front().size();
  return RepresentableSeq(kind, dim, std::move(pre), std::move(cycle));
}

inline RepresentableSeq sup(std::vector<RVec> pre, std::vector<RVec> cycle) {
  return finite(SpaceKind::sup_finite, std::move(pre), std::move(cycle));
}

inline RepresentableSeq euclid(std::vector<RVec> pre, std::vector<RVec> cycle) {
  return finite(SpaceKind::euclidean, std::move(pre), std::move(cycle));
}

// x_n = core(n) + spike(n) e_{dim+n}
inline RepresentableSeq spiked(std::vector<RVec> core_cycle, RVec spike_cycle, RVec spike_pre = {}) {
  const std::size_t dim = core_cycle.front().size();
  return RepresentableSeq(SpaceKind::c0_spike, dim, {}, std::move(core_cycle), ScalarSeq{std::move(spike_pre), std::move(spike_cycle)});
}

inline RepresentableSeq tailed(SpaceKind kind, std::vector<RVec> core_cycle, RVec tail_cycle) {
  const std::size_t dim = core_cycle.front().size();
  return RepresentableSeq(kind, dim, {}, std::move(core_cycle), std::nullopt, ScalarSeq{{}, std::move(tail_cycle)});
}

// The alternating pair ((-1)^n, 0) and (0, (-1)^n) in the plane.
inline RepresentableSeq pair_x() { return euclid({}, {rv({"-1", "0"}), rv({"1", "0"})}); }
inline RepresentableSeq pair_y() { return euclid({}, {rv({"0", "-1"}), rv({"0", "1"})}); }

}  // namespace ascenter::test
