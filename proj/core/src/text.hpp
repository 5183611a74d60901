#pragma once

// Line-oriented text helpers shared by the file parsers.

#include <algorithm>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "geozeta/error.hpp"

namespace geozeta::detail {

/// Splits on whitespace after stripping a `#` comment; ':' is its own token.
inline std::vector<std::string> tokenize(std::string_view line) {
  if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
  std::string spaced;
  spaced.reserve(line.size() + 4);
  for (char ch : line) {
    if (ch == ':') {
      spaced += " : ";
    } else {
      spaced += ch;
    }
  }
  std::istringstream in(spaced);
  std::vector<std::string> tokens;
  for (std::string t; in >> t;) tokens.push_back(t);
  return tokens;
}

inline int parse_nonnegative(const std::string& token, std::size_t line, const char* what) {
  if (token.empty() || !std::all_of(token.begin(), token.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    throw ParseError(line, std::string("expected ") + what + ", got '" + token + "'");
  }
  try {
    return std::stoi(token);
  } catch (const std::out_of_range&) {
    throw ParseError(line, std::string(what) + " out of range: '" + token + "'");
  }
}

template <typename Fn>
void for_each_line(std::string_view text, Fn&& fn) {
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto end = text.find('\n', pos);
    const auto line = text.substr(pos, end == std::string_view::npos ? std::string_view::npos : end - pos);
    ++line_no;
    auto tokens = tokenize(line);
    if (!tokens.empty()) fn(line_no, tokens);
    if (end == std::string_view::npos) break;
    pos = end + 1;
  }
}

inline std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace geozeta::detail
