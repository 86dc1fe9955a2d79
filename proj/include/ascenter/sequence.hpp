#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "ascenter/errors.hpp"
#include "ascenter/norm.hpp"
#include "ascenter/rational.hpp"

namespace ascenter {

// preperiod followed by the cycle repeated forever. Terms are 1-indexed.
template <class T>
struct EventuallyPeriodic {
  std::vector<T> preperiod;
  std::vector<T> cycle;

  const T& at(std::size_t n) const {
    if (n <= preperiod.size()) return preperiod[n - 1];
    return cycle[(n - 1 - preperiod.size()) % cycle.size()];
  }

  // Same terms, minimal cycle length, then minimal preperiod.
  EventuallyPeriodic minimal() const;

  // Drops the first term. An empty preperiod rotates the cycle instead.
  EventuallyPeriodic forward() const;

  bool operator==(const EventuallyPeriodic&) const = default;
};

template <class T>
EventuallyPeriodic<T> EventuallyPeriodic<T>::minimal() const {
  EventuallyPeriodic out;
  const std::size_t len = cycle.size();
  std::size_t period = len;
  for (std::size_t p = 1; p < len; ++p) {
    if (len % p != 0) continue;
    bool ok = true;
    for (std::size_t i = 0; i + p < len && ok; ++i) ok = cycle[i] == cycle[i + p];
    if (ok) {
      period = p;
      break;
    }
  }
  out.cycle.assign(cycle.begin(), cycle.begin() + static_cast<std::ptrdiff_t>(period));
  out.preperiod = preperiod;
  // Absorb preperiod terms that already continue the cycle backwards.
  while (!out.preperiod.empty() && out.preperiod.back() == out.cycle.back()) {
    out.preperiod.pop_back();
    std::rotate(out.cycle.rbegin(), out.cycle.rbegin() + 1, out.cycle.rend());
  }
  return out;
}

template <class T>
EventuallyPeriodic<T> EventuallyPeriodic<T>::forward() const {
  EventuallyPeriodic out = *this;
  if (!out.preperiod.empty()) {
    out.preperiod.erase(out.preperiod.begin());
  } else {
    std::rotate(out.cycle.begin(), out.cycle.begin() + 1, out.cycle.end());
  }
  return out;
}

using ScalarSeq = EventuallyPeriodic<Rational>;
using CoreSeq = EventuallyPeriodic<RVec>;

enum class SpaceKind { sup_finite, euclidean, c0_spike, c_tail, linf_tail };

std::string to_string(SpaceKind kind);
SpaceKind parse_space_kind(const std::string& text);

// A bounded sequence with a finite description.
//
//   sup_finite / euclidean: x_n = core(n) in R^dim, sup or Euclidean norm.
//   c0_spike:  x_n = core(n) + spike(n) * e_{dim+n}, an element of c0.
//   c_tail / linf_tail: x_n(k) = core(n)_k for k <= dim and tail(n) for
//              every k > dim; the ambient space is c or l-infinity.
//
// Elements y of the ambient space are passed as dim coordinates (zero beyond
// dim), or dim + 1 coordinates for the tail kinds where the last entry is the
// constant value of y at every coordinate beyond dim.
class RepresentableSeq {
 public:
  RepresentableSeq(SpaceKind kind, std::size_t dim, std::vector<RVec> preperiod, std::vector<RVec> cycle,
                   std::optional<ScalarSeq> spike = std::nullopt, std::optional<ScalarSeq> tail = std::nullopt);

  SpaceKind kind() const { return kind_; }
  std::size_t dim() const { return dim_; }
  const CoreSeq& core() const { return core_; }
  const std::vector<RVec>& preperiod() const { return core_.preperiod; }
  const std::vector<RVec>& cycle() const { return core_.cycle; }
  const std::optional<ScalarSeq>& spike() const { return spike_; }
  const std::optional<ScalarSeq>& tail() const { return tail_; }

  bool is_finite_dimensional() const { return kind_ == SpaceKind::sup_finite || kind_ == SpaceKind::euclidean; }
  bool has_tail() const { return tail_.has_value(); }

  // First 1-based index at which every component is periodic.
  std::size_t joint_start() const;
  // lcm of all cycle lengths.
  std::size_t joint_period() const;

  const RVec& core_term(std::size_t n) const { return core_.at(n); }
  // Scalar at coordinate k (1-based, any k >= 1) of term n.
  const Rational& coordinate(std::size_t n, std::size_t k) const;

  // The forward operator F: (x_1, x_2, ...) -> (x_2, x_3, ...). For c0_spike
  // the spike of the new term n still sits at coordinate dim + n, which leaves
  // every asymptotic quantity unchanged.
  RepresentableSeq forward() const;

  bool operator==(const RepresentableSeq&) const = default;

 private:
  SpaceKind kind_;
  std::size_t dim_;
  CoreSeq core_;
  std::optional<ScalarSeq> spike_;
  std::optional<ScalarSeq> tail_;
};

// Termwise-equivalent description with minimal cycles and preperiods.
RepresentableSeq canonicalize(const RepresentableSeq& seq);

// Drops all preperiods and rotates the joint cycle to its lexicographically
// least phase. Not termwise equivalent, but it is a forward shift of seq, so
// every asymptotic quantity is preserved.
RepresentableSeq shift_normal_form(const RepresentableSeq& seq);

// Distinct cycle vectors, sorted lexicographically.
using FinitePointSet = std::vector<RVec>;

FinitePointSet cluster_set(const RepresentableSeq& seq);

// limsup_n ||x_n - y|| in the sup norm of the ambient space; exact.
Rational asymptotic_distance_sup(const RepresentableSeq& seq, const RVec& y);

// limsup_n ||x_n - y|| for a finite-dimensional kind under any norm.
Distance asymptotic_distance(const RepresentableSeq& seq, const RVec& y, const Norm& norm);
double asymptotic_distance(const RepresentableSeq& seq, const DVec& y, const Norm& norm);

// The norm a kind carries by default: Euclidean for euclidean, sup otherwise.
Norm native_norm(SpaceKind kind);

// y in A_delta(x) given the asymptotic radius r, under the native norm.
bool delta_set_membership(const RepresentableSeq& seq, const RVec& y, const Rational& delta, const Rational& radius);
bool delta_set_membership(const RepresentableSeq& seq, const DVec& y, double delta, double radius,
                          double tolerance = 1e-9);

}  // namespace ascenter
