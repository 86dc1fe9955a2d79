#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "ascenter/envelope.hpp"
#include "ascenter/norm.hpp"
#include "ascenter/sequence.hpp"

namespace ascenter {

using Rng = std::mt19937_64;

std::uint64_t splitmix64(std::uint64_t x);

// Seed of trial i under master seed s: splitmix64(s ^ splitmix64(i + 1)).
// Each trial owns its generator, so any partition of the trials over
// threads reproduces the serial run.
inline std::uint64_t trial_seed(std::uint64_t master, std::uint64_t trial) {
  return splitmix64(master ^ splitmix64(trial + 1));
}

struct GenOptions {
  std::size_t min_dim = 1;
  std::size_t max_dim = 4;
  std::size_t max_preperiod = 3;
  std::size_t max_cycle = 5;
  int value_range = 8;  // numerators in [-value_range, value_range]
  int max_den = 4;      // denominators in [1, max_den]
};

Rational random_rational(Rng& rng, const GenOptions& opt);
RVec random_vector(Rng& rng, std::size_t dim, const GenOptions& opt);
std::size_t random_size(Rng& rng, std::size_t lo, std::size_t hi);

// dim drawn from [min_dim, max_dim] unless `dim` is nonzero.
RepresentableSeq random_finite(Rng& rng, SpaceKind kind, const GenOptions& opt, std::size_t dim = 0);
RepresentableSeq random_c0_spike(Rng& rng, const GenOptions& opt);
RepresentableSeq random_tail(Rng& rng, SpaceKind kind, const GenOptions& opt);

// Another description with the same cluster set: cycle entries shuffled and
// repeated, arbitrary preperiod.
RepresentableSeq random_d_equivalent(Rng& rng, const RepresentableSeq& seq, const GenOptions& opt);

FinitePointSet random_point_set(Rng& rng, std::size_t dim, std::size_t count, const GenOptions& opt);

Envelope random_envelope(Rng& rng, std::size_t dim, const GenOptions& opt);

// Coordinate functionals plus `extra` random rows: always spans R^dim.
Norm random_polyhedral_norm(Rng& rng, std::size_t dim, std::size_t extra, const GenOptions& opt);

}  // namespace ascenter
