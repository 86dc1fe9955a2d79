#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ascenter/rational.hpp"

namespace ascenter {

// A nonnegative quantity that is exact whenever it came from max/min/± over
// rationals, and a double when a square root was involved.
class Distance {
 public:
  explicit Distance(Rational exact) : exact_(std::move(exact)), value_(exact_->get_d()) {}
  explicit Distance(double approx) : value_(approx) {}

  bool is_exact() const { return exact_.has_value(); }
  const Rational& exact() const { return *exact_; }
  double value() const { return value_; }

 private:
  std::optional<Rational> exact_;
  double value_ = 0;
};

enum class NormKind { sup, one, euclid, polyhedral };

// Norms on R^dim used by the finite-dimensional models. Everything except
// the Euclidean norm is polyhedral and evaluates exactly.
class Norm {
 public:
  static Norm sup() { return Norm(NormKind::sup, {}); }
  static Norm one() { return Norm(NormKind::one, {}); }
  static Norm euclid() { return Norm(NormKind::euclid, {}); }
  // ||v|| = max_j |<w_j, v>|. The functionals must span R^dim.
  static Norm polyhedral(std::vector<RVec> functionals);

  NormKind kind() const { return kind_; }
  bool is_exact() const { return kind_ != NormKind::euclid; }
  const std::vector<RVec>& functionals() const { return rows_; }

  Rational exact(std::span<const Rational> v) const;
  double approx(std::span<const double> v) const;
  Distance operator()(std::span<const Rational> v) const;
  Distance distance(std::span<const Rational> a, std::span<const Rational> b) const;

  // The polyhedral description max_j |<w_j, v>| for any exact norm of the
  // given dimension (sup and one-norm expanded into their functionals).
  std::vector<RVec> as_functionals(std::size_t dim) const;

  std::string name() const;

 private:
  Norm(NormKind kind, std::vector<RVec> rows) : kind_(kind), rows_(std::move(rows)) {}

  NormKind kind_;
  std::vector<RVec> rows_;
};

// Rank of a set of rational row vectors (exact Gaussian elimination).
std::size_t rank(std::vector<RVec> rows);

}  // namespace ascenter
