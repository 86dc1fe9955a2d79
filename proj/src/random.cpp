#include "ascenter/random.hpp"

#include <algorithm>

namespace ascenter {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::size_t random_size(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

Rational random_rational(Rng& rng, const GenOptions& opt) {
  const int num = std::uniform_int_distribution<int>(-opt.value_range, opt.value_range)(rng);
  const int den = std::uniform_int_distribution<int>(1, opt.max_den)(rng);
  Rational q(num, den);
  q.canonicalize();
  return q;
}

RVec random_vector(Rng& rng, std::size_t dim, const GenOptions& opt) {
  RVec v(dim);
  for (auto& x : v) x = random_rational(rng, opt);
  return v;
}

namespace {

std::vector<RVec> random_vectors(Rng& rng, std::size_t count, std::size_t dim, const GenOptions& opt) {
  std::vector<RVec> out(count);
  for (auto& v : out) v = random_vector(rng, dim, opt);
  return out;
}

ScalarSeq random_scalar(Rng& rng, const GenOptions& opt) {
  ScalarSeq s;
  s.preperiod.resize(random_size(rng, 0, opt.max_preperiod));
  for (auto& x : s.preperiod) x = random_rational(rng, opt);
  s.cycle.resize(random_size(rng, 1, opt.max_cycle));
  for (auto& x : s.cycle) x = random_rational(rng, opt);
  return s;
}

}  // namespace

RepresentableSeq random_finite(Rng& rng, SpaceKind kind, const GenOptions& opt, std::size_t dim) {
  if (dim == 0) dim = random_size(rng, opt.min_dim, opt.max_dim);
  auto pre = random_vectors(rng, random_size(rng, 0, opt.max_preperiod), dim, opt);
  auto cycle = random_vectors(rng, random_size(rng, 1, opt.max_cycle), dim, opt);
  return RepresentableSeq(kind, dim, std::move(pre), std::move(cycle));
}

RepresentableSeq random_c0_spike(Rng& rng, const GenOptions& opt) {
  const auto dim = random_size(rng, opt.min_dim, opt.max_dim);
  auto pre = random_vectors(rng, random_size(rng, 0, opt.max_preperiod), dim, opt);
  auto cycle = random_vectors(rng, random_size(rng, 1, opt.max_cycle), dim, opt);
  return RepresentableSeq(SpaceKind::c0_spike, dim, std::move(pre), std::move(cycle), random_scalar(rng, opt));
}

RepresentableSeq random_tail(Rng& rng, SpaceKind kind, const GenOptions& opt) {
  const auto dim = random_size(rng, opt.min_dim, opt.max_dim);
  auto pre = random_vectors(rng, random_size(rng, 0, opt.max_preperiod), dim, opt);
  auto cycle = random_vectors(rng, random_size(rng, 1, opt.max_cycle), dim, opt);
  return RepresentableSeq(kind, dim, std::move(pre), std::move(cycle), std::nullopt, random_scalar(rng, opt));
}

RepresentableSeq random_d_equivalent(Rng& rng, const RepresentableSeq& seq, const GenOptions& opt) {
  const auto points = cluster_set(seq);
  std::vector<RVec> cycle = points;
  const auto extra = random_size(rng, 0, points.size() + 2);
  for (std::size_t i = 0; i < extra; ++i) cycle.push_back(points[random_size(rng, 0, points.size() - 1)]);
  std::shuffle(cycle.begin(), cycle.end(), rng);
  auto pre = random_vectors(rng, random_size(rng, 0, opt.max_preperiod), seq.dim(), opt);
  return RepresentableSeq(seq.kind(), seq.dim(), std::move(pre), std::move(cycle));
}

FinitePointSet random_point_set(Rng& rng, std::size_t dim, std::size_t count, const GenOptions& opt) {
  return random_vectors(rng, count, dim, opt);
}

Envelope random_envelope(Rng& rng, std::size_t dim, const GenOptions& opt) {
  RVec lower(dim), upper(dim);
  for (std::size_t k = 0; k < dim; ++k) {
    auto a = random_rational(rng, opt);
    auto b = random_rational(rng, opt);
    if (b < a) std::swap(a, b);
    lower[k] = a;
    upper[k] = b;
  }
  return make_envelope(std::move(lower), std::move(upper));
}

Norm random_polyhedral_norm(Rng& rng, std::size_t dim, std::size_t extra, const GenOptions& opt) {
  std::vector<RVec> rows(dim, RVec(dim, 0));
  for (std::size_t i = 0; i < dim; ++i) {
    Rational w = random_rational(rng, opt);
    rows[i][i] = w == 0 ? Rational(1) : abs(w);
  }
  for (std::size_t j = 0; j < extra; ++j) rows.push_back(random_vector(rng, dim, opt));
  return Norm::polyhedral(std::move(rows));
}

}  // namespace ascenter
