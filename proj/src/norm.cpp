#include "ascenter/norm.hpp"

#include <cmath>

#include "ascenter/errors.hpp"

namespace ascenter {

std::size_t rank(std::vector<RVec> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t pivot = r;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[r], rows[pivot]);
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      if (rows[i][c] == 0) continue;
      const Rational f = rows[i][c] / rows[r][c];
      for (std::size_t k = c; k < cols; ++k) rows[i][k] -= f * rows[r][k];
    }
    ++r;
  }
  return r;
}

Norm Norm::polyhedral(std::vector<RVec> functionals) {
  require(!functionals.empty(), "polyhedral norm needs at least one functional");
  const auto dim = functionals.front().size();
  require(dim > 0, "polyhedral norm functionals must be nonempty vectors");
  for (const auto& w : functionals) require(w.size() == dim, "polyhedral norm functionals differ in length");
  require(rank(functionals) == dim, "polyhedral norm functionals do not span the space");
  return Norm(NormKind::polyhedral, std::move(functionals));
}

Rational Norm::exact(std::span<const Rational> v) const {
  switch (kind_) {
    case NormKind::sup:
      return sup_norm(v);
    case NormKind::one: {
      Rational s = 0;
      for (const auto& x : v) s += abs(x);
      return s;
    }
    case NormKind::polyhedral: {
      require(v.size() == rows_.front().size(), "vector dimension does not match the norm");
      Rational m = 0;
      for (const auto& w : rows_) {
        Rational dot = 0;
        for (std::size_t i = 0; i < v.size(); ++i) dot += w[i] * v[i];
        m = max(m, abs(dot));
      }
      return m;
    }
    case NormKind::euclid:
      break;
  }
  throw KindMismatch("the Euclidean norm has no exact rational value");
}

double Norm::approx(std::span<const double> v) const {
  switch (kind_) {
    case NormKind::sup: {
      double m = 0;
      for (double x : v) m = std::max(m, std::abs(x));
      return m;
    }
    case NormKind::one: {
      double s = 0;
      for (double x : v) s += std::abs(x);
      return s;
    }
    case NormKind::euclid:
      return euclid_norm(v);
    case NormKind::polyhedral: {
      double m = 0;
      for (const auto& w : rows_) {
        double dot = 0;
        for (std::size_t i = 0; i < v.size(); ++i) dot += w[i].get_d() * v[i];
        m = std::max(m, std::abs(dot));
      }
      return m;
    }
  }
  return 0;
}

Distance Norm::operator()(std::span<const Rational> v) const {
  if (is_exact()) return Distance(exact(v));
  return Distance(approx(to_double(v)));
}

Distance Norm::distance(std::span<const Rational> a, std::span<const Rational> b) const {
  require(a.size() == b.size(), "dimension mismatch");
  return (*this)(a - b);
}

std::vector<RVec> Norm::as_functionals(std::size_t dim) const {
  switch (kind_) {
    case NormKind::sup: {
      std::vector<RVec> rows(dim, RVec(dim, 0));
      for (std::size_t i = 0; i < dim; ++i) rows[i][i] = 1;
      return rows;
    }
    case NormKind::one: {
      // all sign patterns with first entry +1
      std::vector<RVec> rows;
      const std::size_t count = dim == 0 ? 0 : (std::size_t{1} << (dim - 1));
      for (std::size_t mask = 0; mask < count; ++mask) {
        RVec w(dim, 1);
        for (std::size_t i = 1; i < dim; ++i)
          if (mask & (std::size_t{1} << (i - 1))) w[i] = -1;
        rows.push_back(std::move(w));
      }
      return rows;
    }
    case NormKind::polyhedral:
      require(rows_.front().size() == dim, "vector dimension does not match the norm");
      return rows_;
    case NormKind::euclid:
      break;
  }
  throw KindMismatch("the Euclidean norm is not polyhedral");
}

std::string Norm::name() const {
  switch (kind_) {
    case NormKind::sup: return "sup";
    case NormKind::one: return "one";
    case NormKind::euclid: return "euclid";
    case NormKind::polyhedral: return "polyhedral";
  }
  return "?";
}

}  // namespace ascenter
