#pragma once

#include <gmpxx.h>

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ascenter {

using Rational = mpq_class;
using RVec = std::vector<Rational>;
using DVec = std::vector<double>;

// Parses "p" or "p/q" (q > 0). Throws InvalidInput otherwise.
Rational parse_rational(std::string_view text);

// Canonical text: "p" for integers, "p/q" in lowest terms otherwise.
std::string to_string(const Rational& q);

inline Rational abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

inline const Rational& max(const Rational& a, const Rational& b) { return a < b ? b : a; }
inline const Rational& min(const Rational& a, const Rational& b) { return b < a ? b : a; }

// n/d in lowest terms; the two-argument mpq constructor does not reduce.
inline Rational ratio(long n, long d) {
  Rational q(n, d);
  q.canonicalize();
  return q;
}

inline Rational clamp(const Rational& x, const Rational& lo, const Rational& hi) {
  if (x < lo) return lo;
  if (hi < x) return hi;
  return x;
}

inline double to_double(const Rational& q) { return q.get_d(); }
DVec to_double(std::span<const Rational> v);

RVec operator-(std::span<const Rational> a, std::span<const Rational> b);
inline RVec operator-(const RVec& a, const RVec& b) {
  return std::span<const Rational>(a) - std::span<const Rational>(b);
}

Rational sup_norm(std::span<const Rational> v);
double euclid_norm(std::span<const double> v);
double euclid_distance(std::span<const double> a, std::span<const double> b);

// Lexicographic order on equal-length vectors.
bool lex_less(std::span<const Rational> a, std::span<const Rational> b);

std::string to_string(std::span<const Rational> v);

}  // namespace ascenter
