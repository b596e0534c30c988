// Internal JSON helpers. Integer literals too wide for 64 bits are kept as
// their decimal text so dataset integers stay arbitrary precision.
#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "cherfd/rat.hpp"

namespace cherfd::detail {

using json = nlohmann::json;

/// Throws ParseError on malformed text or duplicate object keys.
json parse_json_exact(std::string_view text);

std::string read_file(const std::string& path);

const json& require(const json& obj, const char* key, std::string_view context);
std::string as_string(const json& v, std::string_view context);
bool as_bool(const json& v, std::string_view context);
BigInt as_bigint(const json& v, std::string_view context);
Rat as_rat(const json& v, std::string_view context);
Bound as_bound(const json& v, std::string_view context);

/// Number when it fits in 64 bits, decimal string otherwise.
json bigint_to_json(const BigInt& n);

}  // namespace cherfd::detail
