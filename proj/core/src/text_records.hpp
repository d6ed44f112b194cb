#pragma once

// Internal: line-oriented whitespace tokenizer shared by the edge-list and
// partition readers.

#include <cctype>
#include <charconv>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "triwalk/error.hpp"

namespace triwalk::detail {

/// Calls fn(line_no, tokens) for every line with at least one token after
/// `#` comments are stripped. Handles LF and CRLF.
template <typename Fn>
void for_each_record(std::string_view text, Fn&& fn) {
  std::size_t line_no = 0;
  std::size_t pos = 0;
  std::vector<std::string_view> tokens;
  while (pos < text.size()) {
    auto eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);

    tokens.clear();
    std::size_t i = 0;
    auto space = [&](std::size_t k) {
      return std::isspace(static_cast<unsigned char>(line[k])) != 0;
    };
    while (i < line.size()) {
      while (i < line.size() && space(i)) ++i;
      const std::size_t start = i;
      while (i < line.size() && !space(i)) ++i;
      if (i > start) tokens.push_back(line.substr(start, i - start));
    }
    if (!tokens.empty()) fn(line_no, tokens);
  }
}

inline std::size_t parse_index(std::string_view token, std::size_t line_no) {
  std::size_t value = 0;
  auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw Error(ErrorCode::kParse, "line " + std::to_string(line_no) +
                                       ": non-integer token '" +
                                       std::string(token) + "'");
  }
  return value;
}

}  // namespace triwalk::detail
