#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "json.hpp"
#include "zetatop/error.hpp"

namespace zetatop::detail {

using json = nlohmann::ordered_json;

inline std::pair<std::size_t, std::size_t> line_col(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

inline json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    const auto [line, col] = line_col(text, e.byte > 0 ? e.byte - 1 : 0);
    throw ParseError(std::string("JSON syntax error: ") + e.what(), line, col);
  }
}

inline std::int64_t get_int(const json& obj, const char* key, std::int64_t fallback,
                            const std::string& where) {
  if (!obj.contains(key)) return fallback;
  const auto& v = obj.at(key);
  if (!v.is_number_integer()) {
    throw ValidationError("non-integer-field",
                          where + ": field '" + key + "' must be an exact integer");
  }
  return v.get<std::int64_t>();
}

inline std::string get_string(const json& obj, const char* key, const std::string& where) {
  if (!obj.contains(key) || !obj.at(key).is_string()) {
    throw ValidationError("missing-field", where + ": missing string field '" + key + "'");
  }
  return obj.at(key).get<std::string>();
}

}  // namespace zetatop::detail
