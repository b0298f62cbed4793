#pragma once

#include <filesystem>
#include <initializer_list>
#include <string>
#include <string_view>

#include <json.hpp>

#include "lexiprof/errors.hpp"

namespace lexiprof::detail {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

/// Converts a byte offset into a 1-based (line, column) pair.
inline std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

/// Parses one JSON document; syntax errors become ParseError with position
/// relative to `first_line`.
inline json parse_json(std::string_view text, std::size_t first_line = 1) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    // nlohmann reports the 1-based offset of the offending byte.
    const std::size_t byte = e.byte == 0 ? 0 : e.byte - 1;
    auto [line, column] = line_column(text, byte);
    std::string what = e.what();
    if (auto pos = what.find("syntax error"); pos != std::string::npos) what = what.substr(pos);
    throw ParseError(what, line + first_line - 1, column);
  }
}

/// Rejects keys outside `allowed`.
inline void check_keys(const json& obj, std::initializer_list<std::string_view> allowed,
                       const std::string& where, std::size_t line = 0) {
  if (!obj.is_object()) throw ParseError(where + ": expected an object", line);
  for (const auto& [key, _] : obj.items()) {
    bool ok = false;
    for (auto a : allowed) ok = ok || a == key;
    if (!ok) throw ParseError(where + ": unknown key '" + key + "'", line);
  }
}

inline const json& require(const json& obj, const char* key, const std::string& where,
                           std::size_t line = 0) {
  auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(where + ": missing key '" + key + "'", line);
  return *it;
}

inline std::string require_string(const json& obj, const char* key, const std::string& where,
                                  std::size_t line = 0) {
  const json& v = require(obj, key, where, line);
  if (!v.is_string()) throw ParseError(where + "." + key + ": expected a string", line);
  return v.get<std::string>();
}

inline std::string optional_string(const json& obj, const char* key, const std::string& where,
                                   std::size_t line = 0) {
  auto it = obj.find(key);
  if (it == obj.end() || it->is_null()) return {};
  if (!it->is_string()) throw ParseError(where + "." + key + ": expected a string", line);
  return it->get<std::string>();
}

inline std::string dump(const ordered_json& j) {
  return j.dump(2, ' ', false, json::error_handler_t::replace) + "\n";
}

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view contents);

}  // namespace lexiprof::detail
