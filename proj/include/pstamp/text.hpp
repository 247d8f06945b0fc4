#pragma once
// The shared text format: bases are comma- or space-separated decimal
// integers in ascending order ("1,4,15,18,19"); representations print as
// descending summands joined by '+' ("6+6+6+5").

#include <charconv>
#include <string>
#include <string_view>
#include <vector>

#include "pstamp/common.hpp"
#include "pstamp/representation.hpp"

namespace pstamp {

inline std::vector<Value> parse_elements(std::string_view text) {
  std::vector<Value> out;
  std::size_t pos = 0;
  const auto is_sep = [](char c) { return c == ',' || c == ' ' || c == '\t' || c == '\r' || c == '\n'; };
  while (pos < text.size()) {
    while (pos < text.size() && is_sep(text[pos])) ++pos;
    if (pos >= text.size()) break;
    std::size_t end = pos;
    while (end < text.size() && !is_sep(text[end])) ++end;
    const std::string_view token = text.substr(pos, end - pos);
    Value v = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (ec != std::errc{} || ptr != token.data() + token.size() || v == 0)
      fail(Errc::parse_error, "not a positive integer: '" + std::string(token) + "'");
    out.push_back(v);
    pos = end;
  }
  if (out.empty()) fail(Errc::empty_input, "no elements given");
  for (std::size_t i = 1; i < out.size(); ++i)
    if (out[i] <= out[i - 1]) fail(Errc::not_strictly_increasing, "elements must strictly increase");
  return out;
}

inline std::string format_elements(const std::vector<Value>& elements, char sep = ',') {
  std::string out;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (i) out.push_back(sep);
    out += std::to_string(elements[i]);
  }
  return out;
}

inline std::string format_parts(const Representation& rep) {
  if (rep.count == 0) return "(empty)";
  std::string out;
  for (const auto& [elem, mult] : rep.parts)
    for (Value i = 0; i < mult; ++i) {
      if (!out.empty()) out.push_back('+');
      out += std::to_string(elem);
    }
  return out;
}

}  // namespace pstamp
