#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "ascenter/c0_lim.hpp"
#include "ascenter/envelope.hpp"
#include "ascenter/errors.hpp"
#include "ascenter/sequence.hpp"

namespace ascenter::io {

using nlohmann::json;

// The document does not follow the instance schema.
class SchemaError : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

json to_json(const Rational& q);
json to_json(const RVec& v);
json to_json(const RepresentableSeq& seq);
json to_json(const Envelope& env);
json to_json(const CenterBox& box);
json to_json(const LimQuantities& q);
json to_json(const CacReport& r);
json to_json(const DVec& v);

// Decimal with 12 significant digits.
json real_json(double v);

Rational rational_from_json(const json& j);
RepresentableSeq seq_from_json(const json& j);

// {"version": 1, "sequences": [...]}
json instance_json(const std::vector<RepresentableSeq>& seqs);

// Accepts an instance file or a single bare sequence document.
std::vector<RepresentableSeq> parse_instance(const json& j);
std::vector<RepresentableSeq> parse_instance(const std::string& text);
std::vector<RepresentableSeq> load_instance_file(const std::filesystem::path& path);

// Two-space indented dump with a trailing newline; the byte format of
// canonical files.
std::string dump_canonical(const json& j);

// 64-bit FNV-1a digest, rendered as 16 hex digits.
std::string digest(const std::string& bytes);

}  // namespace ascenter::io
