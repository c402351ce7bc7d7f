#pragma once

#include <charconv>
#include <string>
#include <system_error>

namespace zagreb {

// Shortest decimal form that parses back to the same double (up to 17
// significant digits). Locale-independent, so CSV/JSON output is stable.
inline std::string format_double(double value) {
  char buffer[40];
  const auto result = std::to_chars(buffer, buffer + sizeof(buffer), value);
  return std::string(buffer, result.ptr);
}

inline bool parse_double_token(const std::string& token, double& out) {
  if (token.empty()) return false;
  const char* first = token.data();
  const char* last = first + token.size();
  const auto result = std::from_chars(first, last, out);
  return result.ec == std::errc() && result.ptr == last;
}

}  // namespace zagreb
