#include "ascenter/seq_metric.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace ascenter {

TailSet tail_set(const RepresentableSeq& seq, std::size_t n) {
  if (!seq.is_finite_dimensional()) throw KindMismatch("tail_set needs a sup_finite or euclidean sequence");
  require(n >= 1, "tail index is 1-based");
  TailSet t{n, seq.cycle()};
  for (std::size_t m = n; m <= seq.preperiod().size(); ++m) t.points.push_back(seq.preperiod()[m - 1]);
  std::sort(t.points.begin(), t.points.end(), [](const RVec& a, const RVec& b) { return lex_less(a, b); });
  t.points.erase(std::unique(t.points.begin(), t.points.end()), t.points.end());
  return t;
}

namespace {

template <class T, class Dist>
T directed_hausdorff(std::size_t na, std::size_t nb, Dist&& dist) {
  T worst = 0;
  for (std::size_t i = 0; i < na; ++i) {
    T best = dist(i, 0);
    for (std::size_t j = 1; j < nb; ++j) {
      T d = dist(i, j);
      if (d < best) best = d;
    }
    if (worst < best) worst = best;
  }
  return worst;
}

}  // namespace

Distance hausdorff_distance(const FinitePointSet& a, const FinitePointSet& b, const Norm& norm) {
  require(!a.empty() && !b.empty(), "Hausdorff distance needs nonempty sets");
  if (norm.is_exact()) {
    auto ab = [&](std::size_t i, std::size_t j) { return norm.exact(a[i] - b[j]); };
    auto ba = [&](std::size_t i, std::size_t j) { return norm.exact(b[i] - a[j]); };
    return Distance(max(directed_hausdorff<Rational>(a.size(), b.size(), ab),
                        directed_hausdorff<Rational>(b.size(), a.size(), ba)));
  }
  std::vector<DVec> da, db;
  for (const auto& p : a) da.push_back(to_double(p));
  for (const auto& p : b) db.push_back(to_double(p));
  return Distance(hausdorff_distance(da, db));
}

double hausdorff_distance(const std::vector<DVec>& a, const std::vector<DVec>& b) {
  require(!a.empty() && !b.empty(), "Hausdorff distance needs nonempty sets");
  auto ab = [&](std::size_t i, std::size_t j) { return euclid_distance(a[i], b[j]); };
  auto ba = [&](std::size_t i, std::size_t j) { return euclid_distance(b[i], a[j]); };
  return std::max(directed_hausdorff<double>(a.size(), b.size(), ab),
                  directed_hausdorff<double>(b.size(), a.size(), ba));
}

namespace {

void check_pair(const RepresentableSeq& x, const RepresentableSeq& y) {
  if (x.kind() != y.kind()) throw KindMismatch("sequences have different kinds");
  if (x.dim() != y.dim()) throw InvalidInput("sequences have different dimensions");
}

}  // namespace

Distance pseudometric_d(const RepresentableSeq& x, const RepresentableSeq& y, const Norm& norm) {
  check_pair(x, y);
  if (!x.is_finite_dimensional())
    throw KindMismatch("exact d is available for sup_finite and euclidean sequences only");
  return hausdorff_distance(cluster_set(x), cluster_set(y), norm);
}

namespace {

// Exact sup-norm distance between x_j and y_i in the ambient space.
Rational term_distance_sup(const RepresentableSeq& x, std::size_t j, const RepresentableSeq& y, std::size_t i) {
  Rational d = sup_norm(x.core_term(j) - y.core_term(i));
  if (x.spike()) {
    const Rational& sx = x.spike()->at(j);
    const Rational& sy = y.spike()->at(i);
    d = max(d, i == j ? Rational(abs(sx - sy)) : max(abs(sx), abs(sy)));
  }
  if (x.tail()) d = max(d, abs(x.tail()->at(j) - y.tail()->at(i)));
  return d;
}

// Matrix D[j][i] = |x_j - y_i| for 1 <= i, j <= horizon; E(n) for the
// requested n values.
template <class T>
std::vector<T> tail_excess(const std::vector<std::vector<T>>& dist, std::size_t n, std::size_t last_m,
                           std::size_t horizon) {
  // sup_{j>=m} min_{i>=n} D[j][i] for all m, and the symmetric counterpart.
  std::vector<T> row_min(horizon + 1), col_min(horizon + 1);
  for (std::size_t j = 1; j <= horizon; ++j) {
    T best = dist[j][n];
    for (std::size_t i = n + 1; i <= horizon; ++i)
      if (dist[j][i] < best) best = dist[j][i];
    row_min[j] = best;
  }
  for (std::size_t i = 1; i <= horizon; ++i) {
    T best = dist[n][i];
    for (std::size_t j = n + 1; j <= horizon; ++j)
      if (dist[j][i] < best) best = dist[j][i];
    col_min[i] = best;
  }
  std::vector<T> excess(last_m + 1);
  T sx = 0, sy = 0;
  for (std::size_t m = horizon; m >= n; --m) {
    if (sx < row_min[m]) sx = row_min[m];
    if (sy < col_min[m]) sy = col_min[m];
    if (m <= last_m) excess[m] = sx < sy ? sy : sx;
    if (m == n) break;
  }
  return excess;
}

template <class T>
std::pair<T, T> truncated_bounds(const std::vector<std::vector<T>>& dist, std::size_t horizon, std::size_t first_n,
                                 std::size_t last_n) {
  auto e_of = [&](std::size_t n) {
    const auto excess = tail_excess(dist, n, last_n, horizon);
    T best = excess[n];
    for (std::size_t m = n + 1; m <= last_n; ++m)
      if (excess[m] < best) best = excess[m];
    return best;
  };
  return {e_of(first_n), e_of(last_n)};
}

}  // namespace

DistanceBounds pseudometric_d_truncated(const RepresentableSeq& x, const RepresentableSeq& y, std::size_t horizon,
                                        std::size_t tail_index, const Norm& norm, double resolution) {
  check_pair(x, y);
  require(tail_index >= 1 && horizon >= tail_index, "need horizon >= tail index >= 1");
  if (!x.is_finite_dimensional() && norm.kind() != NormKind::sup)
    throw KindMismatch("c0, c and l-infinity models carry the sup norm only");
  const std::size_t window = std::max(x.joint_period(), y.joint_period());
  require(horizon > window && horizon - window >= tail_index, "horizon too short for a full cycle after the tail index");
  const std::size_t last_n = horizon - window;

  DistanceBounds out;
  out.stabilized = last_n >= std::max(x.joint_start(), y.joint_start());
  if (norm.is_exact()) {
    std::vector<std::vector<Rational>> dist(horizon + 1, std::vector<Rational>(horizon + 1));
    for (std::size_t j = 1; j <= horizon; ++j)
      for (std::size_t i = 1; i <= horizon; ++i)
        dist[j][i] = x.is_finite_dimensional() ? norm.exact(x.core_term(j) - y.core_term(i))
                                               : term_distance_sup(x, j, y, i);
    auto [lo, hi] = truncated_bounds(dist, horizon, tail_index, last_n);
    out.lo = Distance(lo);
    out.hi = Distance(hi);
  } else {
    std::vector<std::vector<double>> dist(horizon + 1, std::vector<double>(horizon + 1));
    for (std::size_t j = 1; j <= horizon; ++j)
      for (std::size_t i = 1; i <= horizon; ++i)
        dist[j][i] = norm.approx(to_double(x.core_term(j) - y.core_term(i)));
    auto [lo, hi] = truncated_bounds(dist, horizon, tail_index, last_n);
    out.lo = Distance(lo);
    out.hi = Distance(hi);
  }
  if (resolution > 0) {
    out.lo = Distance(std::floor(out.lo.value() / resolution) * resolution);
    out.hi = Distance(std::ceil(out.hi.value() / resolution) * resolution);
  }
  return out;
}

}  // namespace ascenter
