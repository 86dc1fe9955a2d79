#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "ascenter/rational.hpp"

namespace ascenter::verify {

using nlohmann::json;

struct VerifyOptions {
  std::size_t trials = 100;
  std::uint64_t seed = 0;
  std::size_t dim = 0;  // 0: each suite draws its own dimensions
  Rational delta = 1;
  std::size_t norm_family_size = 3;
};

struct VerifyReport {
  std::string kind;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  std::size_t violations = 0;
  std::optional<double> min_slack;
  double max_violation = 0;   // largest observed excess over the pinned tolerance
  json witness;               // replayable offending instance, null when clean
  std::string failure;        // message for the witness
  json details = json::object();

  bool ok() const { return violations == 0; }
  json to_json() const;
};

// d (r1 + r2 + d) >= |c1 - c2|^2 on Euclidean pairs.
VerifyReport verify_holder(const VerifyOptions& opt);
// Same bound for finite point sets with the Hausdorff distance.
VerifyReport verify_bp_sets(const VerifyOptions& opt);
// Samples of the delta-enlarged center set stay within delta of the center box.
VerifyReport verify_cac(const VerifyOptions& opt);
// beta <= alpha and the two max-identities, exactly.
VerifyReport verify_lim_identities(const VerifyOptions& opt);
// Pseudometric axioms and zero-distance consequences across a norm family.
VerifyReport verify_axioms(const VerifyOptions& opt);
// Midpoint and pinned selectors on random envelopes.
VerifyReport verify_ndist(const VerifyOptions& opt);
// canonical_selector invariances.
VerifyReport verify_selectors(const VerifyOptions& opt);
// far_subsequence preservation and center-in-hull.
VerifyReport verify_hilbert_lemmas(const VerifyOptions& opt);
// c0: Lim formula vs envelope radius; c: both Lim formulas vs the oracle.
VerifyReport verify_lim_parity(const VerifyOptions& opt);

// Closed forms against oracles; space is one of sup, c0, c, linf, euclid.
VerifyReport crosscheck(const std::string& space, const VerifyOptions& opt);

// Exploratory search for pairs with d > 0 whose centers and radii agree
// under every sampled norm. Never reports violations.
VerifyReport fuzz_conjecture(const VerifyOptions& opt);

// Dispatch by CLI name: holder, bp-sets, cac, lim-identities, axioms, ndist,
// selectors, hilbert-lemmas, lim-parity.
VerifyReport run_suite(const std::string& kind, const VerifyOptions& opt);

}  // namespace ascenter::verify
