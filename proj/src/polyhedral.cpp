#include "ascenter/polyhedral.hpp"

#include <algorithm>
#include <optional>

namespace ascenter {

namespace {

// Solves the square system rows * x = rhs exactly; nullopt if singular.
std::optional<RVec> solve_exact(std::vector<RVec> rows, RVec rhs) {
  const std::size_t n = rows.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && rows[pivot][c] == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(rows[c], rows[pivot]);
    std::swap(rhs[c], rhs[pivot]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || rows[r][c] == 0) continue;
      const Rational f = rows[r][c] / rows[c][c];
      for (std::size_t k = c; k < n; ++k) rows[r][k] -= f * rows[c][k];
      rhs[r] -= f * rhs[c];
    }
  }
  for (std::size_t i = 0; i < n; ++i) rhs[i] /= rows[i][i];
  return rhs;
}

// Visits every size-k subset of {0..n-1}.
template <class F>
void for_each_subset(std::size_t n, std::size_t k, F&& visit) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    visit(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

Rational dot(const RVec& a, const RVec& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace

PolyhedralCenter polyhedral_chebyshev_center(const FinitePointSet& points, const Norm& norm) {
  require(!points.empty(), "empty point set");
  const std::size_t dim = points.front().size();
  require(dim >= 1 && dim <= 3, "polyhedral centers are computed for dim <= 3");
  const auto rows = norm.as_functionals(dim);

  // Per functional w: M_w = max_p <w,p>, m_w = min_p <w,p>. The objective is
  // max_w max(M_w - <w,y>, <w,y> - m_w).
  std::vector<RVec> normals;  // s * w, so the constraint reads <normal, y> + t >= bound
  RVec bounds;
  for (const auto& w : rows) {
    Rational hi = dot(w, points.front()), lo = hi;
    for (const auto& p : points) {
      const Rational v = dot(w, p);
      hi = max(hi, v);
      lo = min(lo, v);
    }
    normals.push_back(w);
    bounds.push_back(hi);
    RVec neg(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) neg[i] = -w[i];
    normals.push_back(std::move(neg));
    bounds.push_back(-lo);
  }

  auto objective = [&](const RVec& y) {
    Rational t = bounds.front() - dot(normals.front(), y);
    for (std::size_t i = 1; i < normals.size(); ++i) t = max(t, bounds[i] - dot(normals[i], y));
    return t;
  };

  // Vertices of the epigraph: dim + 1 tight constraints in (y, t).
  std::optional<Rational> best;
  for_each_subset(normals.size(), dim + 1, [&](const std::vector<std::size_t>& idx) {
    std::vector<RVec> sys;
    RVec rhs;
    for (auto i : idx) {
      RVec row = normals[i];
      row.push_back(1);
      sys.push_back(std::move(row));
      rhs.push_back(bounds[i]);
    }
    auto sol = solve_exact(std::move(sys), std::move(rhs));
    if (!sol) return;
    RVec y(sol->begin(), sol->begin() + static_cast<std::ptrdiff_t>(dim));
    const Rational t = objective(y);
    if (!best || t < *best) best = t;
  });
  ensure(best.has_value(), "polyhedral LP has no vertex");

  PolyhedralCenter out{*best, {}};
  // Center polytope {y : <normal_i, y> >= bound_i - r}; vertices from dim tight constraints.
  for_each_subset(normals.size(), dim, [&](const std::vector<std::size_t>& idx) {
    std::vector<RVec> sys;
    RVec rhs;
    for (auto i : idx) {
      sys.push_back(normals[i]);
      rhs.push_back(bounds[i] - out.radius);
    }
    auto y = solve_exact(std::move(sys), std::move(rhs));
    if (y && objective(*y) <= out.radius) out.vertices.push_back(std::move(*y));
  });
  std::sort(out.vertices.begin(), out.vertices.end(), [](const RVec& a, const RVec& b) { return lex_less(a, b); });
  out.vertices.erase(std::unique(out.vertices.begin(), out.vertices.end()), out.vertices.end());
  ensure(!out.vertices.empty(), "polyhedral center set has no vertex");
  return out;
}

}  // namespace ascenter
