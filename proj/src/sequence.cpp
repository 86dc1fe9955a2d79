#include "ascenter/sequence.hpp"

#include <algorithm>

namespace ascenter {

std::string to_string(SpaceKind kind) {
  switch (kind) {
    case SpaceKind::sup_finite: return "sup_finite";
    case SpaceKind::euclidean: return "euclidean";
    case SpaceKind::c0_spike: return "c0_spike";
    case SpaceKind::c_tail: return "c_tail";
    case SpaceKind::linf_tail: return "linf_tail";
  }
  return "?";
}

SpaceKind parse_space_kind(const std::string& text) {
  for (auto k : {SpaceKind::sup_finite, SpaceKind::euclidean, SpaceKind::c0_spike, SpaceKind::c_tail,
                 SpaceKind::linf_tail})
    if (to_string(k) == text) return k;
  throw InvalidInput("unknown space kind '" + text + "'");
}

namespace {

void check_scalar(const ScalarSeq& s, const char* name) {
  require(!s.cycle.empty(), std::string(name) + " cycle must be nonempty");
}

}  // namespace

RepresentableSeq::RepresentableSeq(SpaceKind kind, std::size_t dim, std::vector<RVec> preperiod,
                                   std::vector<RVec> cycle, std::optional<ScalarSeq> spike,
                                   std::optional<ScalarSeq> tail)
    : kind_(kind), dim_(dim), core_{std::move(preperiod), std::move(cycle)}, spike_(std::move(spike)),
      tail_(std::move(tail)) {
  require(dim_ > 0, "dim must be positive");
  require(!core_.cycle.empty(), "cycle must be nonempty");
  for (const auto* part : {&core_.preperiod, &core_.cycle})
    for (const auto& v : *part) require(v.size() == dim_, "vector length differs from dim");
  require(!(spike_ && tail_), "spike and tail are mutually exclusive");
  const bool wants_spike = kind_ == SpaceKind::c0_spike;
  const bool wants_tail = kind_ == SpaceKind::c_tail || kind_ == SpaceKind::linf_tail;
  require(spike_.has_value() == wants_spike, "spike must be present exactly for c0_spike");
  require(tail_.has_value() == wants_tail, "tail must be present exactly for c_tail and linf_tail");
  if (spike_) check_scalar(*spike_, "spike");
  if (tail_) check_scalar(*tail_, "tail");
}

std::size_t RepresentableSeq::joint_start() const {
  std::size_t pre = core_.preperiod.size();
  if (spike_) pre = std::max(pre, spike_->preperiod.size());
  if (tail_) pre = std::max(pre, tail_->preperiod.size());
  return pre + 1;
}

std::size_t RepresentableSeq::joint_period() const {
  std::size_t l = core_.cycle.size();
  if (spike_) l = std::lcm(l, spike_->cycle.size());
  if (tail_) l = std::lcm(l, tail_->cycle.size());
  return l;
}

const Rational& RepresentableSeq::coordinate(std::size_t n, std::size_t k) const {
  static const Rational zero(0);
  require(n >= 1 && k >= 1, "indices are 1-based");
  if (k <= dim_) return core_.at(n)[k - 1];
  if (spike_) return k == dim_ + n ? spike_->at(n) : zero;
  if (tail_) return tail_->at(n);
  throw InvalidInput("coordinate beyond dim in a finite-dimensional kind");
}

RepresentableSeq RepresentableSeq::forward() const {
  RepresentableSeq out = *this;
  out.core_ = core_.forward();
  if (spike_) out.spike_ = spike_->forward();
  if (tail_) out.tail_ = tail_->forward();
  return out;
}

RepresentableSeq canonicalize(const RepresentableSeq& seq) {
  const auto core = seq.core().minimal();
  std::optional<ScalarSeq> spike, tail;
  if (seq.spike()) spike = seq.spike()->minimal();
  if (seq.tail()) tail = seq.tail()->minimal();
  return RepresentableSeq(seq.kind(), seq.dim(), core.preperiod, core.cycle, std::move(spike), std::move(tail));
}

namespace {

// Joint term n flattened for lexicographic phase comparison.
RVec joint_key(const RepresentableSeq& seq, std::size_t n) {
  RVec key = seq.core_term(n);
  if (seq.spike()) key.push_back(seq.spike()->at(n));
  if (seq.tail()) key.push_back(seq.tail()->at(n));
  return key;
}

}  // namespace

RepresentableSeq shift_normal_form(const RepresentableSeq& seq) {
  const std::size_t start = seq.joint_start();
  const std::size_t period = seq.joint_period();
  std::size_t best = 0;
  for (std::size_t s = 1; s < period; ++s) {
    for (std::size_t i = 0; i < period; ++i) {
      const auto a = joint_key(seq, start + s + i);
      const auto b = joint_key(seq, start + best + i);
      if (a == b) continue;
      if (lex_less(a, b)) best = s;
      break;
    }
  }
  std::vector<RVec> cycle;
  ScalarSeq spike, tail;
  for (std::size_t i = 0; i < period; ++i) {
    const std::size_t n = start + best + i;
    cycle.push_back(seq.core_term(n));
    if (seq.spike()) spike.cycle.push_back(seq.spike()->at(n));
    if (seq.tail()) tail.cycle.push_back(seq.tail()->at(n));
  }
  return canonicalize(RepresentableSeq(seq.kind(), seq.dim(), {}, std::move(cycle),
                                       seq.spike() ? std::optional(spike) : std::nullopt,
                                       seq.tail() ? std::optional(tail) : std::nullopt));
}

FinitePointSet cluster_set(const RepresentableSeq& seq) {
  if (!seq.is_finite_dimensional())
    throw KindMismatch("cluster_set applies to sup_finite and euclidean sequences only");
  FinitePointSet pts = seq.cycle();
  std::sort(pts.begin(), pts.end(), [](const RVec& a, const RVec& b) { return lex_less(a, b); });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

namespace {

void check_point(const RepresentableSeq& seq, std::size_t size) {
  const bool ok = size == seq.dim() || (seq.has_tail() && size == seq.dim() + 1);
  require(ok, "point has " + std::to_string(size) + " coordinates, sequence has dim " + std::to_string(seq.dim()));
}

}  // namespace

Rational asymptotic_distance_sup(const RepresentableSeq& seq, const RVec& y) {
  check_point(seq, y.size());
  const std::size_t start = seq.joint_start();
  const std::size_t period = seq.joint_period();
  const Rational y_tail = y.size() > seq.dim() ? y.back() : Rational(0);
  Rational worst = 0;
  for (std::size_t n = start; n < start + period; ++n) {
    const auto& x = seq.core_term(n);
    Rational d = 0;
    for (std::size_t k = 0; k < seq.dim(); ++k) d = max(d, abs(x[k] - y[k]));
    if (seq.spike()) d = max(d, abs(seq.spike()->at(n)));
    if (seq.tail()) d = max(d, abs(seq.tail()->at(n) - y_tail));
    worst = max(worst, d);
  }
  return worst;
}

Distance asymptotic_distance(const RepresentableSeq& seq, const RVec& y, const Norm& norm) {
  if (!seq.is_finite_dimensional()) {
    if (norm.kind() != NormKind::sup) throw KindMismatch("c0, c and l-infinity models carry the sup norm only");
    return Distance(asymptotic_distance_sup(seq, y));
  }
  check_point(seq, y.size());
  if (norm.is_exact()) {
    Rational worst = 0;
    for (const auto& p : seq.cycle()) worst = max(worst, norm.exact(p - y));
    return Distance(worst);
  }
  return Distance(asymptotic_distance(seq, to_double(y), norm));
}

double asymptotic_distance(const RepresentableSeq& seq, const DVec& y, const Norm& norm) {
  if (!seq.is_finite_dimensional()) throw KindMismatch("floating-point distance needs a finite-dimensional kind");
  check_point(seq, y.size());
  double worst = 0;
  DVec diff(y.size());
  for (const auto& p : seq.cycle()) {
    for (std::size_t k = 0; k < y.size(); ++k) diff[k] = p[k].get_d() - y[k];
    worst = std::max(worst, norm.approx(diff));
  }
  return worst;
}

Norm native_norm(SpaceKind kind) { return kind == SpaceKind::euclidean ? Norm::euclid() : Norm::sup(); }

bool delta_set_membership(const RepresentableSeq& seq, const RVec& y, const Rational& delta, const Rational& radius) {
  require(delta >= 0, "delta must be nonnegative");
  require(radius >= 0, "radius must be nonnegative");
  const auto norm = native_norm(seq.kind());
  if (!norm.is_exact())
    return delta_set_membership(seq, to_double(y), delta.get_d(), radius.get_d());
  return asymptotic_distance(seq, y, norm).exact() <= radius + delta;
}

bool delta_set_membership(const RepresentableSeq& seq, const DVec& y, double delta, double radius, double tolerance) {
  require(delta >= 0, "delta must be nonnegative");
  return asymptotic_distance(seq, y, native_norm(seq.kind())) <= radius + delta + tolerance;
}

}  // namespace ascenter
