#include "ascenter/rational.hpp"

#include <cctype>
#include <cmath>

#include "ascenter/errors.hpp"

namespace ascenter {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) body.remove_prefix(1);
  const auto slash = body.find('/');
  const auto num = body.substr(0, slash);
  const auto den = slash == std::string_view::npos ? std::string_view{} : body.substr(slash + 1);
  if (!all_digits(num) || (slash != std::string_view::npos && !all_digits(den)))
    throw InvalidInput("malformed rational '" + std::string(text) + "'");
  Rational q;
  if (q.set_str(std::string(text.front() == '+' ? text.substr(1) : text), 10) != 0)
    throw InvalidInput("malformed rational '" + std::string(text) + "'");
  if (q.get_den() == 0) throw InvalidInput("zero denominator in '" + std::string(text) + "'");
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) {
  Rational c(q);
  c.canonicalize();
  return c.get_str();
}

DVec to_double(std::span<const Rational> v) {
  DVec out;
  out.reserve(v.size());
  for (const auto& q : v) out.push_back(q.get_d());
  return out;
}

RVec operator-(std::span<const Rational> a, std::span<const Rational> b) {
  RVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

Rational sup_norm(std::span<const Rational> v) {
  Rational m = 0;
  for (const auto& x : v) {
    Rational a = abs(x);
    if (m < a) m = a;
  }
  return m;
}

double euclid_norm(std::span<const double> v) {
  double s = 0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

double euclid_distance(std::span<const double> a, std::span<const double> b) {
  double s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
  return std::sqrt(s);
}

bool lex_less(std::span<const Rational> a, std::span<const Rational> b) {
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
    if (a[i] < b[i]) return true;
    if (b[i] < a[i]) return false;
  }
  return a.size() < b.size();
}

std::string to_string(std::span<const Rational> v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += to_string(v[i]);
  }
  return s + ")";
}

}  // namespace ascenter
