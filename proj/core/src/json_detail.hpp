#pragma once

#include <cstdint>
#include <limits>
#include <string>

#include <nlohmann/json.hpp>

#include "gog/error.hpp"
#include "gog/integer.hpp"

// Shared JSON plumbing for the gogspec and report serializers.
namespace gog::detail {

using json = nlohmann::ordered_json;

[[noreturn]] inline void syntax(const std::string& message) {
  fail(ErrorCode::SyntaxError, message);
}

inline Integer integer_field(const json& j, const char* key) {
  if (!j.contains(key)) syntax(std::string("missing field ") + key);
  const json& v = j.at(key);
  try {
    if (v.is_number_unsigned()) return Integer(v.get<std::uint64_t>());
    if (v.is_number_integer()) return Integer(v.get<std::int64_t>());
    if (v.is_string()) return Integer(v.get<std::string>());
  } catch (const std::exception&) {
    syntax(std::string("bad integer in field ") + key);
  }
  syntax(std::string("field ") + key + " must be an integer or decimal string");
}

inline std::string string_field(const json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_string())
    syntax(std::string("missing or non-string field ") + key);
  return j.at(key).get<std::string>();
}

inline json integer_value(const Integer& n) {
  static const Integer lo = Integer(std::numeric_limits<std::int64_t>::min());
  static const Integer hi = Integer(std::numeric_limits<std::int64_t>::max());
  if (n >= lo && n <= hi) return json(static_cast<std::int64_t>(n));
  return json(n.str());
}

}  // namespace gog::detail
