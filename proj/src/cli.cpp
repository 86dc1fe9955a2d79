#include "ascenter/cli.hpp"

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "ascenter/c0_lim.hpp"
#include "ascenter/envelope.hpp"
#include "ascenter/hilbert.hpp"
#include "ascenter/io.hpp"
#include "ascenter/oracles.hpp"
#include "ascenter/seq_metric.hpp"
#include "ascenter/verify.hpp"

namespace ascenter::cli {

namespace {

using io::json;

struct Options {
  std::string input;
  std::vector<std::string> inputs;
  std::string space;
  std::string norm;
  std::size_t trials = 100;
  std::uint64_t seed = 0;
  std::size_t dim = 0;
  std::string delta = "1";
  std::size_t norm_family_size = 3;
  std::string json_out;
  std::string witness_out = "ascenter-witness.json";
  std::string suite;
};

using Row = std::pair<std::string, std::string>;

void print_table(std::ostream& out, const std::string& title, const std::vector<Row>& rows) {
  out << title << "\n";
  std::size_t width = 0;
  for (const auto& r : rows) width = std::max(width, r.first.size());
  for (const auto& [k, v] : rows) out << "  " << std::left << std::setw(static_cast<int>(width)) << k << "  " << v << "\n";
}

std::string text(const json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw io::SchemaError("cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& bytes) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw InvalidInput("cannot write " + path);
  f << bytes;
}

SpaceKind default_kind(const std::string& space) {
  if (space == "sup") return SpaceKind::sup_finite;
  if (space == "euclid") return SpaceKind::euclidean;
  if (space == "c0") return SpaceKind::c0_spike;
  if (space == "c") return SpaceKind::c_tail;
  if (space == "linf") return SpaceKind::linf_tail;
  throw InvalidInput("unknown space '" + space + "'");
}

std::string default_space(SpaceKind kind) {
  switch (kind) {
    case SpaceKind::sup_finite: return "sup";
    case SpaceKind::euclidean: return "euclid";
    case SpaceKind::c0_spike: return "c0";
    case SpaceKind::c_tail: return "c";
    case SpaceKind::linf_tail: return "linf";
  }
  return "?";
}

// The space a sequence is read in; linf also accepts c representations.
std::string resolve_space(const RepresentableSeq& seq, const std::string& requested) {
  if (requested.empty()) return default_space(seq.kind());
  default_kind(requested);
  const bool ok = default_kind(requested) == seq.kind() || (requested == "linf" && seq.kind() == SpaceKind::c_tail);
  if (!ok) throw KindMismatch("a " + to_string(seq.kind()) + " sequence cannot be read in space " + requested);
  return requested;
}

json rational_diff(const Rational& a, const Rational& b) { return io::to_json(Rational(a - b)); }

std::vector<DVec> cluster_doubles(const RepresentableSeq& seq) {
  std::vector<DVec> pts;
  for (const auto& p : cluster_set(seq)) pts.push_back(to_double(p));
  return pts;
}

json radius_result(const RepresentableSeq& seq, const std::string& space, std::uint64_t seed) {
  json r{{"space", space}};
  if (space == "euclid") {
    const auto ball = euclid_center(seq, seed);
    const auto fw = oracles::radius_oracle_euclid(cluster_doubles(seq));
    r["radius"] = io::real_json(ball.radius);
    r["oracle"] = {{"method", oracles::to_string(fw.method)}, {"value", io::real_json(fw.value)},
                   {"resolution", io::real_json(fw.resolution)}};
    r["diff"] = io::real_json(fw.value - ball.radius);
    return r;
  }
  Rational closed;
  if (space == "sup") {
    closed = center_box(envelopes_finiteK(seq)).radius;
  } else if (space == "c0") {
    closed = radius_c0(envelopes_c0(seq));
    r["radius_lim_formula"] = io::to_json(radius_lim(seq, LimSpace::c0));
  } else {
    closed = radius_lim(seq, space == "c" ? LimSpace::c : LimSpace::linf);
  }
  if (!seq.is_finite_dimensional()) {
    r["lim_quantities"] = io::to_json(lim_quantities(seq));
    r["lim_quantities_oracle"] = io::to_json(oracles::truncation_lim_quantities(seq, oracles::default_horizon(seq)));
  }
  const auto oracle = oracles::radius_oracle_supnorm(seq);
  r["radius"] = io::to_json(closed);
  r["oracle"] = {{"method", oracles::to_string(oracle.method)}, {"value", io::to_json(oracle.value)}};
  r["diff"] = rational_diff(oracle.value, closed);
  return r;
}

json center_result(const RepresentableSeq& seq, const std::string& space, std::uint64_t seed) {
  json r{{"space", space}};
  if (space == "euclid") {
    const auto ball = euclid_center(seq, seed);
    const auto fw = oracles::radius_oracle_euclid(cluster_doubles(seq));
    const DVec fw_center(fw.argmin.begin(), fw.argmin.end());
    r["center"] = io::to_json(ball.center);
    r["radius"] = io::real_json(ball.radius);
    json support = json::array();
    for (const auto& p : ball.support) support.push_back(io::to_json(p));
    r["support"] = support;
    r["oracle"] = {{"method", oracles::to_string(fw.method)}, {"center", io::to_json(fw_center)}};
    r["diff"] = io::real_json(euclid_distance(fw_center, ball.center));
    return r;
  }
  CenterBox box;
  RVec selector;
  if (space == "c0") {
    const auto env = envelopes_c0(seq);
    box = center_box_c0(env);
    selector = center_selector_c0(env);
  } else {
    const auto env = space == "sup" ? envelopes_finiteK(seq) : envelopes_tail(seq);
    box = center_box(env);
    selector = ndist_midpoint(env);
  }
  const auto oracle = oracles::radius_oracle_supnorm(seq);
  r["center_box"] = io::to_json(box);
  r["selector"] = io::to_json(selector);
  r["oracle"] = {{"method", oracles::to_string(oracle.method)}, {"argmin", io::to_json(oracle.argmin)},
                 {"value", io::to_json(oracle.value)}};
  r["diff"] = io::to_json(box.distance(oracle.argmin));
  return r;
}

json envelope_result(const RepresentableSeq& seq, const std::string& space) {
  if (space == "euclid") throw KindMismatch("envelopes are defined for sup-norm models only");
  const Envelope env = space == "sup" ? envelopes_finiteK(seq) : space == "c0" ? envelopes_c0(seq) : envelopes_tail(seq);
  const auto oracle = oracles::truncation_envelope(seq, oracles::default_horizon(seq));
  Rational diff = 0;
  for (std::size_t k = 0; k < env.size(); ++k)
    diff = max(diff, max(abs(env.lower[k] - oracle.lower[k]), abs(env.upper[k] - oracle.upper[k])));
  if (env.infinity && oracle.infinity)
    diff = max(diff, max(abs(env.infinity->lower - oracle.infinity->lower), abs(env.infinity->upper - oracle.infinity->upper)));
  return json{{"space", space}, {"envelope", io::to_json(env)}, {"oracle", io::to_json(oracle)}, {"diff", io::to_json(diff)}};
}

Norm parse_norm(const std::string& name, SpaceKind kind) {
  if (name.empty()) return native_norm(kind);
  if (name == "sup") return Norm::sup();
  if (name == "one") return Norm::one();
  if (name == "euclid") return Norm::euclid();
  throw InvalidInput("unknown norm '" + name + "'");
}

json distance_result(const RepresentableSeq& x, const RepresentableSeq& y, const std::string& norm_name) {
  if (x.kind() != y.kind()) throw KindMismatch("sequences have different kinds");
  if (x.dim() != y.dim()) throw InvalidInput("sequences have different dimensions");
  const Norm norm = parse_norm(norm_name, x.kind());
  auto dist_json = [](const Distance& d) { return d.is_exact() ? io::to_json(d.exact()) : io::real_json(d.value()); };
  const std::size_t horizon =
      std::max(x.joint_start(), y.joint_start()) + 2 * std::max(x.joint_period(), y.joint_period());
  const auto bounds = pseudometric_d_truncated(x, y, horizon, 1, norm);
  json r{{"norm", norm.name()},
         {"truncation", {{"horizon", horizon}, {"lo", dist_json(bounds.lo)}, {"hi", dist_json(bounds.hi)}, {"stabilized", bounds.stabilized}}}};
  if (x.is_finite_dimensional()) {
    const auto d = pseudometric_d(x, y, norm);
    r["d"] = dist_json(d);
    r["diff"] = io::real_json(bounds.hi.value() - d.value());
  } else {
    r["d"] = nullptr;
  }
  return r;
}

std::vector<Row> result_rows(const json& result, const std::string& prefix = "") {
  std::vector<Row> rows;
  for (const auto& [k, v] : result.items()) {
    if (v.is_object() && !v.empty()) {
      auto sub = result_rows(v, prefix + k + ".");
      rows.insert(rows.end(), sub.begin(), sub.end());
    } else {
      rows.emplace_back(prefix + k, text(v));
    }
  }
  return rows;
}

int emit(const Options& opt, json report, std::ostream& out, const std::string& title, int code) {
  std::vector<Row> rows{{"command", text(report["command"])}};
  if (report.contains("input_digest")) rows.emplace_back("input digest", text(report["input_digest"]));
  if (report.contains("results")) {
    print_table(out, title, rows);
    std::size_t i = 0;
    for (const auto& res : report["results"]) print_table(out, "sequence " + std::to_string(++i), result_rows(res));
  } else {
    auto more = result_rows(report["report"]);
    rows.insert(rows.end(), more.begin(), more.end());
    print_table(out, title, rows);
  }
  if (!opt.json_out.empty()) write_file(opt.json_out, io::dump_canonical(report));
  return code;
}

json command_echo(int argc, const char* const* argv) {
  json echo = json::array();
  for (int i = 1; i < argc; ++i) echo.push_back(argv[i]);
  return echo;
}

int run_verify_report(const Options& opt, json echo, const verify::VerifyReport& rep, std::ostream& out,
                      std::ostream& err) {
  json report{{"command", echo}, {"seed", opt.seed}, {"report", rep.to_json()}};
  int code = kOk;
  if (!rep.ok()) {
    code = kViolation;
    write_file(opt.witness_out, io::dump_canonical(rep.witness));
    err << "violation: " << rep.failure << " (witness written to " << opt.witness_out << ")\n";
  }
  return emit(opt, report, out, rep.kind, code);
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Asymptotic centers and radii of eventually periodic sequences"};
  app.require_subcommand(1);
  Options opt;

  const std::vector<std::string> spaces{"sup", "euclid", "c0", "c", "linf"};
  auto add_input = [&](CLI::App* sub) {
    sub->add_option("-i,--input", opt.input, "instance file")->required();
    sub->add_option("--space", opt.space, "sup, euclid, c0, c or linf")->check(CLI::IsMember(spaces));
    sub->add_option("--seed", opt.seed, "seed for randomized geometry");
    sub->add_option("--json", opt.json_out, "write the JSON report here");
  };
  auto add_trials = [&](CLI::App* sub) {
    sub->add_option("--trials", opt.trials, "number of trials")->check(CLI::PositiveNumber);
    sub->add_option("--seed", opt.seed, "master seed");
    sub->add_option("--dim", opt.dim, "fixed dimension (default: drawn per trial)");
    sub->add_option("--json", opt.json_out, "write the JSON report here");
    sub->add_option("--witness", opt.witness_out, "where to write a failing instance");
  };

  auto* radius = app.add_subcommand("radius", "asymptotic radius with oracle comparison");
  add_input(radius);
  auto* center = app.add_subcommand("center", "asymptotic center set and selector");
  add_input(center);
  auto* envelope = app.add_subcommand("envelope", "upper and lower envelopes");
  add_input(envelope);

  auto* distance = app.add_subcommand("distance", "tail pseudometric between two instances");
  distance->add_option("files", opt.inputs, "two instance files")->required()->expected(2);
  distance->add_option("--norm", opt.norm, "sup, one or euclid (default: native)")
      ->check(CLI::IsMember(std::vector<std::string>{"sup", "one", "euclid"}));
  distance->add_option("--json", opt.json_out, "write the JSON report here");

  auto* cross = app.add_subcommand("crosscheck", "closed forms against oracles on random instances");
  cross->add_option("--space", opt.space, "sup, euclid, c0, c or linf")->required()->check(CLI::IsMember(spaces));
  add_trials(cross);

  auto* ver = app.add_subcommand("verify", "property suites");
  ver->add_option("kind", opt.suite, "holder, bp-sets, cac, lim-identities, axioms, ndist, selectors, hilbert-lemmas, lim-parity")
      ->required()
      ->check(CLI::IsMember(std::vector<std::string>{"holder", "bp-sets", "cac", "lim-identities", "axioms", "ndist",
                                                     "selectors", "hilbert-lemmas", "lim-parity"}));
  add_trials(ver);
  ver->add_option("--delta", opt.delta, "enlargement for cac, a rational in [0, 1]");
  ver->add_option("--norm-family-size", opt.norm_family_size, "random polyhedral norms per trial");

  auto* fuzz = app.add_subcommand("fuzz", "exploratory searches");
  fuzz->require_subcommand(1);
  auto* conj = fuzz->add_subcommand("conjecture", "pairs with d > 0 and matching centers under sampled norms");
  conj->add_option("--trials", opt.trials, "number of pairs")->check(CLI::PositiveNumber);
  conj->add_option("--seed", opt.seed, "master seed");
  conj->add_option("--norm-family-size", opt.norm_family_size, "random polyhedral norms per pair");
  conj->add_option("--json", opt.json_out, "write the JSON report here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kSchemaError;
  }

  const json echo = command_echo(argc, argv);
  try {
    if (radius->parsed() || center->parsed() || envelope->parsed()) {
      const std::string bytes = read_file(opt.input);
      const auto seqs = io::parse_instance(bytes);
      json results = json::array();
      for (const auto& seq : seqs) {
        const std::string space = resolve_space(seq, opt.space);
        if (radius->parsed()) results.push_back(radius_result(seq, space, opt.seed));
        else if (center->parsed()) results.push_back(center_result(seq, space, opt.seed));
        else results.push_back(envelope_result(seq, space));
      }
      json report{{"command", echo}, {"input_digest", io::digest(bytes)}, {"seed", opt.seed}, {"results", results}};
      return emit(opt, report, out, radius->parsed() ? "radius" : center->parsed() ? "center" : "envelope", kOk);
    }
    if (distance->parsed()) {
      const std::string a = read_file(opt.inputs[0]), b = read_file(opt.inputs[1]);
      const auto xs = io::parse_instance(a), ys = io::parse_instance(b);
      if (xs.size() != ys.size()) throw InvalidInput("instance files hold different numbers of sequences");
      json results = json::array();
      for (std::size_t i = 0; i < xs.size(); ++i) results.push_back(distance_result(xs[i], ys[i], opt.norm));
      json report{{"command", echo}, {"input_digest", io::digest(a + b)}, {"results", results}};
      return emit(opt, report, out, "distance", kOk);
    }
    verify::VerifyOptions vopt;
    vopt.trials = opt.trials;
    vopt.seed = opt.seed;
    vopt.dim = opt.dim;
    vopt.delta = parse_rational(opt.delta);
    vopt.norm_family_size = opt.norm_family_size;
    if (cross->parsed()) return run_verify_report(opt, echo, verify::crosscheck(opt.space, vopt), out, err);
    if (ver->parsed()) return run_verify_report(opt, echo, verify::run_suite(opt.suite, vopt), out, err);
    if (conj->parsed()) {
      const auto rep = verify::fuzz_conjecture(vopt);
      json report{{"command", echo}, {"seed", opt.seed}, {"report", rep.to_json()}};
      return emit(opt, report, out, rep.kind, kOk);
    }
  } catch (const io::SchemaError& e) {
    err << "schema error: " << e.what() << "\n";
    return kSchemaError;
  } catch (const KindMismatch& e) {
    err << "kind mismatch: " << e.what() << "\n";
    return kKindMismatch;
  } catch (const InvalidInput& e) {
    err << "invalid input: " << e.what() << "\n";
    return kSchemaError;
  } catch (const InvariantViolation& e) {
    err << "invariant violated: " << e.what() << "\n";
    return kViolation;
  }
  return kOk;
}

}  // namespace ascenter::cli
