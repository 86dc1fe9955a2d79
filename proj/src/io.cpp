#include "ascenter/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace ascenter::io {

json to_json(const Rational& q) { return to_string(q); }

json to_json(const RVec& v) {
  json arr = json::array();
  for (const auto& q : v) arr.push_back(to_string(q));
  return arr;
}

json to_json(const DVec& v) {
  json arr = json::array();
  for (double x : v) arr.push_back(real_json(x));
  return arr;
}

json real_json(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return std::stod(buf);
}

namespace {

json vectors_json(const std::vector<RVec>& vs) {
  json arr = json::array();
  for (const auto& v : vs) arr.push_back(to_json(v));
  return arr;
}

json scalar_seq_json(const std::optional<ScalarSeq>& s) {
  if (!s) return nullptr;
  return json{{"preperiod", to_json(s->preperiod)}, {"cycle", to_json(s->cycle)}};
}

[[noreturn]] void schema_fail(const std::string& what) { throw SchemaError("schema: " + what); }

void check_keys(const json& j, std::initializer_list<const char*> allowed, const std::string& where) {
  if (!j.is_object()) schema_fail(where + " must be an object");
  for (const auto& [key, value] : j.items()) {
    bool known = false;
    for (const char* a : allowed) known = known || key == a;
    if (!known) schema_fail("unknown key '" + key + "' in " + where);
  }
}

RVec rvec_from_json(const json& j, std::size_t dim, const std::string& where) {
  if (!j.is_array()) schema_fail(where + " must be an array");
  if (j.size() != dim) schema_fail(where + " has " + std::to_string(j.size()) + " entries, expected " + std::to_string(dim));
  RVec v;
  for (const auto& e : j) v.push_back(rational_from_json(e));
  return v;
}

std::vector<RVec> vectors_from_json(const json& j, std::size_t dim, const std::string& where) {
  if (!j.is_array()) schema_fail(where + " must be an array of vectors");
  std::vector<RVec> out;
  for (const auto& v : j) out.push_back(rvec_from_json(v, dim, where + " entry"));
  return out;
}

std::optional<ScalarSeq> scalar_seq_from_json(const json& j, const std::string& where) {
  if (j.is_null()) return std::nullopt;
  check_keys(j, {"preperiod", "cycle"}, where);
  ScalarSeq s;
  auto scalars = [&](const char* key) {
    RVec out;
    if (!j.contains(key)) return out;
    if (!j[key].is_array()) schema_fail(where + "." + key + " must be an array");
    for (const auto& e : j[key]) out.push_back(rational_from_json(e));
    return out;
  };
  s.preperiod = scalars("preperiod");
  s.cycle = scalars("cycle");
  if (s.cycle.empty()) schema_fail(where + ".cycle must be nonempty");
  return s;
}

}  // namespace

json to_json(const RepresentableSeq& seq) {
  return json{{"space", {{"kind", to_string(seq.kind())}, {"dim", seq.dim()}}},
              {"preperiod", vectors_json(seq.preperiod())},
              {"cycle", vectors_json(seq.cycle())},
              {"spike", scalar_seq_json(seq.spike())},
              {"tail", scalar_seq_json(seq.tail())}};
}

json to_json(const Envelope& env) {
  json j{{"lower", to_json(env.lower)}, {"upper", to_json(env.upper)}, {"infinity", nullptr}};
  if (env.infinity) j["infinity"] = {{"lower", to_json(env.infinity->lower)}, {"upper", to_json(env.infinity->upper)}};
  return j;
}

json to_json(const CenterBox& box) {
  json intervals = json::array();
  for (const auto& iv : box.intervals) intervals.push_back(json::array({to_json(iv.lo), to_json(iv.hi)}));
  return json{{"radius", to_json(box.radius)}, {"intervals", intervals}};
}

json to_json(const LimQuantities& q) {
  return json{{"alpha", to_json(q.alpha)}, {"beta", to_json(q.beta)}, {"gamma", to_json(q.gamma)},
              {"delta", to_json(q.delta)}};
}

json to_json(const CacReport& r) {
  return json{{"trials", r.trials},
              {"max_distance", to_json(r.max_distance)},
              {"witness", to_json(r.witness)},
              {"max_recenter_shift", to_json(r.max_recenter_shift)}};
}

Rational rational_from_json(const json& j) {
  if (!j.is_string()) schema_fail("rationals must be \"p/q\" strings, got " + j.dump());
  try {
    return parse_rational(j.get<std::string>());
  } catch (const InvalidInput& e) {
    schema_fail(e.what());
  }
}

RepresentableSeq seq_from_json(const json& j) {
  check_keys(j, {"space", "preperiod", "cycle", "spike", "tail"}, "sequence");
  if (!j.contains("space") || !j.contains("cycle")) schema_fail("sequence needs 'space' and 'cycle'");
  const auto& space = j["space"];
  check_keys(space, {"kind", "dim"}, "space");
  if (!space.contains("kind") || !space["kind"].is_string()) schema_fail("space.kind must be a string");
  if (!space.contains("dim") || !space["dim"].is_number_unsigned() || space["dim"].get<std::size_t>() == 0)
    schema_fail("space.dim must be a positive integer");
  SpaceKind kind;
  try {
    kind = parse_space_kind(space["kind"].get<std::string>());
  } catch (const InvalidInput& e) {
    schema_fail(e.what());
  }
  const auto dim = space["dim"].get<std::size_t>();
  auto pre = j.contains("preperiod") ? vectors_from_json(j["preperiod"], dim, "preperiod") : std::vector<RVec>{};
  auto cycle = vectors_from_json(j["cycle"], dim, "cycle");
  auto spike = j.contains("spike") ? scalar_seq_from_json(j["spike"], "spike") : std::nullopt;
  auto tail = j.contains("tail") ? scalar_seq_from_json(j["tail"], "tail") : std::nullopt;
  try {
    return RepresentableSeq(kind, dim, std::move(pre), std::move(cycle), std::move(spike), std::move(tail));
  } catch (const SchemaError&) {
    throw;
  } catch (const InvalidInput& e) {
    schema_fail(e.what());
  }
}

json instance_json(const std::vector<RepresentableSeq>& seqs) {
  json arr = json::array();
  for (const auto& s : seqs) arr.push_back(to_json(s));
  return json{{"version", 1}, {"sequences", arr}};
}

std::vector<RepresentableSeq> parse_instance(const json& j) {
  if (!j.is_object()) schema_fail("document must be an object");
  if (!j.contains("sequences")) return {seq_from_json(j)};
  check_keys(j, {"version", "sequences"}, "instance file");
  if (!j.contains("version") || j["version"] != 1) schema_fail("instance file needs \"version\": 1");
  if (!j["sequences"].is_array() || j["sequences"].empty()) schema_fail("sequences must be a nonempty array");
  std::vector<RepresentableSeq> out;
  for (const auto& s : j["sequences"]) out.push_back(seq_from_json(s));
  return out;
}

std::vector<RepresentableSeq> parse_instance(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    schema_fail(std::string("invalid JSON: ") + e.what());
  }
  return parse_instance(j);
}

std::vector<RepresentableSeq> load_instance_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) schema_fail("cannot read " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_instance(buf.str());
}

std::string dump_canonical(const json& j) { return j.dump(2) + "\n"; }

std::string digest(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace ascenter::io
