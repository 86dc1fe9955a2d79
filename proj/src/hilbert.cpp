#include "ascenter/hilbert.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <list>
#include <random>

#include "ascenter/seq_metric.hpp"

namespace ascenter {

namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;

VectorXd to_eigen(const DVec& v) { return Eigen::Map<const VectorXd>(v.data(), static_cast<Eigen::Index>(v.size())); }
DVec from_eigen(const VectorXd& v) { return DVec(v.data(), v.data() + v.size()); }

struct Ball {
  VectorXd center;
  double radius_sq = -1;  // negative: the empty ball
};

// Welzl's move-to-front recursion over a list of point indices.
class MoveToFront {
 public:
  explicit MoveToFront(std::vector<VectorXd> points) : pts_(std::move(points)), dim_(pts_.front().size()) {
    for (std::size_t i = 0; i < pts_.size(); ++i) order_.push_back(i);
  }

  Ball solve() {
    Ball ball;
    recurse(order_.end(), ball);
    return ball;
  }

 private:
  bool outside(const Ball& ball, std::size_t i) const {
    if (ball.radius_sq < 0) return true;
    const double d2 = (pts_[i] - ball.center).squaredNorm();
    return d2 > ball.radius_sq + 1e-12 * std::max(1.0, ball.radius_sq);
  }

  // Circumsphere of the support inside its affine hull; false when the
  // support is (numerically) affinely dependent.
  bool support_ball(Ball& ball) const {
    const auto k = static_cast<Eigen::Index>(support_.size()) - 1;
    const VectorXd& q0 = pts_[support_.front()];
    if (k == 0) {
      ball = {q0, 0.0};
      return true;
    }
    MatrixXd diffs(dim_, k);
    for (Eigen::Index j = 0; j < k; ++j) diffs.col(j) = pts_[support_[j + 1]] - q0;
    const MatrixXd gram = 2.0 * diffs.transpose() * diffs;
    const VectorXd rhs = diffs.colwise().squaredNorm().transpose();
    Eigen::FullPivLU<MatrixXd> lu(gram);
    lu.setThreshold(1e-12);
    if (!lu.isInvertible()) return false;
    const VectorXd mu = lu.solve(rhs);
    ball.center = q0 + diffs * mu;
    ball.radius_sq = (ball.center - q0).squaredNorm();
    return true;
  }

  void recurse(std::list<std::size_t>::iterator end, Ball& ball) {
    if (!support_.empty() && !support_ball(ball)) return;
    if (support_.empty()) ball = Ball{};
    if (static_cast<Eigen::Index>(support_.size()) == dim_ + 1) return;
    for (auto it = order_.begin(); it != end;) {
      auto next = std::next(it);
      if (outside(ball, *it)) {
        support_.push_back(*it);
        Ball candidate;
        if (support_ball(candidate)) {
          recurse(it, ball);
          order_.splice(order_.begin(), order_, it);
        }
        support_.pop_back();
      }
      it = next;
    }
  }

  std::vector<VectorXd> pts_;
  Eigen::Index dim_;
  std::list<std::size_t> order_;
  std::vector<std::size_t> support_;
};

std::vector<DVec> dedupe(std::vector<DVec> points) {
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  return points;
}

}  // namespace

BallCenter smallest_enclosing_ball(const std::vector<DVec>& points, std::uint64_t seed) {
  require(!points.empty(), "smallest enclosing ball of an empty set");
  const auto dim = points.front().size();
  for (const auto& p : points) require(p.size() == dim, "points differ in dimension");
  auto unique = dedupe(points);
  std::mt19937_64 rng(seed);
  std::shuffle(unique.begin(), unique.end(), rng);

  std::vector<VectorXd> eig;
  for (const auto& p : unique) eig.push_back(to_eigen(p));
  const Ball ball = MoveToFront(eig).solve();

  BallCenter out;
  out.center = from_eigen(ball.center);
  for (const auto& p : unique) out.radius = std::max(out.radius, euclid_distance(p, out.center));
  const double tol = kGeometryTol * std::max(1.0, out.radius);
  for (const auto& p : dedupe(points))
    if (euclid_distance(p, out.center) >= out.radius - tol) out.support.push_back(p);
  return out;
}

BallCenter smallest_enclosing_ball(const FinitePointSet& points, std::uint64_t seed) {
  std::vector<DVec> pts;
  for (const auto& p : points) pts.push_back(to_double(p));
  return smallest_enclosing_ball(pts, seed);
}

double hull_distance(const std::vector<DVec>& points, const DVec& x) {
  require(!points.empty(), "convex hull of an empty set");
  const auto n = points.size();
  std::vector<VectorXd> p;
  double scale = 0;
  for (const auto& q : points) {
    require(q.size() == x.size(), "points differ in dimension");
    p.push_back(to_eigen(q) - to_eigen(x));
    scale = std::max(scale, p.back().squaredNorm());
  }
  const double tol = 1e-14 * std::max(1.0, scale);

  // Wolfe's minimum-norm-point algorithm on the translated points.
  std::vector<std::size_t> active;
  std::vector<double> weight;
  std::size_t first = 0;
  for (std::size_t i = 1; i < n; ++i)
    if (p[i].squaredNorm() < p[first].squaredNorm()) first = i;
  active.push_back(first);
  weight.push_back(1.0);
  VectorXd cur = p[first];

  auto affine_min = [&](const std::vector<std::size_t>& set) {
    const auto k = static_cast<Eigen::Index>(set.size());
    MatrixXd kkt = MatrixXd::Zero(k + 1, k + 1);
    for (Eigen::Index a = 0; a < k; ++a) {
      for (Eigen::Index b = 0; b < k; ++b) kkt(a, b) = p[set[a]].dot(p[set[b]]);
      kkt(a, k) = 1;
      kkt(k, a) = 1;
    }
    VectorXd rhs = VectorXd::Zero(k + 1);
    rhs(k) = 1;
    const VectorXd sol = kkt.completeOrthogonalDecomposition().solve(rhs);
    return std::vector<double>(sol.data(), sol.data() + k);
  };

  for (std::size_t major = 0; major < 10 * n + 50; ++major) {
    std::size_t best = 0;
    double best_dot = cur.dot(p[0]);
    for (std::size_t i = 1; i < n; ++i) {
      const double d = cur.dot(p[i]);
      if (d < best_dot) {
        best_dot = d;
        best = i;
      }
    }
    if (best_dot >= cur.squaredNorm() - tol) break;
    if (std::find(active.begin(), active.end(), best) != active.end()) break;
    active.push_back(best);
    weight.push_back(0.0);

    for (std::size_t minor = 0; minor < n + 2; ++minor) {
      const auto v = affine_min(active);
      bool interior = true;
      for (double vi : v) interior = interior && vi > 1e-15;
      if (interior) {
        weight = v;
        break;
      }
      double theta = 1.0;
      for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] <= 1e-15 && weight[i] - v[i] > 0) theta = std::min(theta, weight[i] / (weight[i] - v[i]));
      for (std::size_t i = 0; i < v.size(); ++i) weight[i] = theta * v[i] + (1 - theta) * weight[i];
      std::vector<std::size_t> keep_idx;
      std::vector<double> keep_w;
      for (std::size_t i = 0; i < active.size(); ++i)
        if (weight[i] > 1e-15) {
          keep_idx.push_back(active[i]);
          keep_w.push_back(weight[i]);
        }
      active = std::move(keep_idx);
      weight = std::move(keep_w);
    }
    double total = 0;
    for (double w : weight) total += w;
    cur = VectorXd::Zero(p.front().size());
    for (std::size_t i = 0; i < active.size(); ++i) cur += (weight[i] / total) * p[active[i]];
  }
  return cur.norm();
}

BallCenter euclid_center(const RepresentableSeq& seq, std::uint64_t seed) {
  return smallest_enclosing_ball(cluster_set(seq), seed);
}

RepresentableSeq far_subsequence(const RepresentableSeq& seq, double eps, std::uint64_t seed) {
  require(eps > 0, "eps must be positive");
  const auto ball = euclid_center(seq, seed);
  const double threshold = ball.radius - eps;
  auto far = [&](const RVec& v) { return euclid_distance(to_double(v), ball.center) > threshold; };
  std::vector<RVec> pre, cycle;
  std::copy_if(seq.preperiod().begin(), seq.preperiod().end(), std::back_inserter(pre), far);
  std::copy_if(seq.cycle().begin(), seq.cycle().end(), std::back_inserter(cycle), far);
  ensure(!cycle.empty(), "no cluster point lies at the asymptotic radius");
  RepresentableSeq out(seq.kind(), seq.dim(), std::move(pre), std::move(cycle));

  const auto after = euclid_center(out, seed);
  ensure(euclid_distance(after.center, ball.center) <= kGeometryTol, "far subsequence moved the asymptotic center");
  ensure(std::abs(after.radius - ball.radius) <= kGeometryTol, "far subsequence changed the asymptotic radius");
  return out;
}

double hull_membership_check(const RepresentableSeq& seq, double eps, std::uint64_t seed) {
  require(eps > 0, "eps must be positive");
  const auto ball = euclid_center(seq, seed);
  std::vector<DVec> far;
  for (const auto& p : cluster_set(seq)) {
    auto q = to_double(p);
    if (euclid_distance(q, ball.center) >= ball.radius - eps) far.push_back(std::move(q));
  }
  ensure(!far.empty(), "no cluster point lies at the asymptotic radius");
  return hull_distance(far, ball.center);
}

namespace {

BoundCheck bound_from(const BallCenter& a, const BallCenter& b, double d) {
  BoundCheck out;
  out.r1 = a.radius;
  out.r2 = b.radius;
  out.d = d;
  const double gap = euclid_distance(a.center, b.center);
  out.center_gap_sq = gap * gap;
  out.bound = d * (a.radius + b.radius + d);
  out.slack = out.bound - out.center_gap_sq;
  return out;
}

}  // namespace

BoundCheck holder_bound_check(const RepresentableSeq& x, const RepresentableSeq& y, std::uint64_t seed) {
  require(x.dim() == y.dim(), "sequences have different dimensions");
  const auto out =
      bound_from(euclid_center(x, seed), euclid_center(y, seed), pseudometric_d(x, y, Norm::euclid()).value());
  ensure(out.slack >= -kSlackTol, "Hoelder bound violated: slack " + std::to_string(out.slack));
  return out;
}

BoundCheck baronti_papini_sets_check(const FinitePointSet& a, const FinitePointSet& b, std::uint64_t seed) {
  require(!a.empty() && !b.empty(), "sets must be nonempty");
  require(a.front().size() == b.front().size(), "sets differ in dimension");
  const auto out = bound_from(smallest_enclosing_ball(a, seed), smallest_enclosing_ball(b, seed),
                              hausdorff_distance(a, b, Norm::euclid()).value());
  ensure(out.slack >= -kSlackTol, "set bound violated: slack " + std::to_string(out.slack));
  return out;
}

}  // namespace ascenter
