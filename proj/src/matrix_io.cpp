#include "assign/matrix_io.hpp"

#include <charconv>
#include <cstdio>
#include <vector>

namespace assign {

namespace {

struct Line {
  std::size_t number;
  std::string_view text;
};

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f'; }

std::string_view trim(std::string_view s) {
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

// Non-blank, non-comment lines with their 1-based line numbers.
std::vector<Line> content_lines(std::string_view text) {
  if (text.starts_with("\xEF\xBB\xBF")) text.remove_prefix(3);
  std::vector<Line> lines;
  std::size_t number = 0;
  while (!text.empty()) {
    ++number;
    const std::size_t end = text.find('\n');
    std::string_view raw = text.substr(0, end);
    text.remove_prefix(end == std::string_view::npos ? text.size() : end + 1);
    std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    lines.push_back(Line{number, line});
  }
  return lines;
}

std::vector<std::string_view> split_tokens(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && is_space(s[i])) ++i;
    const std::size_t start = i;
    while (i < s.size() && !is_space(s[i])) ++i;
    if (i > start) out.push_back(s.substr(start, i - start));
  }
  return out;
}

[[noreturn]] void syntax_error(std::size_t line, const std::string& what) {
  throw Error(ErrorCode::kSyntaxError, "line " + std::to_string(line) + ": " + what);
}

bool looks_decimal(std::string_view token) {
  double value;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  return ec == std::errc() && ptr == token.data() + token.size();
}

Cost parse_entry(std::string_view token, std::size_t line) {
  std::string_view digits = token;
  if (digits.starts_with('+')) digits.remove_prefix(1);
  Cost value = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec == std::errc() && ptr == digits.data() + digits.size() && !digits.empty()) {
    if (value < 0) {
      throw Error(ErrorCode::kNegativeCost,
                  "line " + std::to_string(line) + ": entry " + std::string(token) + " is negative");
    }
    return value;
  }
  if (ec == std::errc::result_out_of_range) {
    syntax_error(line, "entry '" + std::string(token) + "' does not fit in 64 bits");
  }
  if (looks_decimal(token)) {
    throw Error(ErrorCode::kNonIntegerCost, "line " + std::to_string(line) + ": entry '" +
                                                std::string(token) + "' is not an integer");
  }
  syntax_error(line, "entry '" + std::string(token) + "' is not a number");
}

}  // namespace

CostMatrix parse_matrix(std::string_view text) {
  const std::vector<Line> lines = content_lines(text);
  if (lines.empty()) syntax_error(1, "missing size line");

  const auto header = split_tokens(lines[0].text);
  std::size_t k = 0;
  {
    auto [ptr, ec] = std::from_chars(header[0].data(), header[0].data() + header[0].size(), k);
    if (header.size() != 1 || ec != std::errc() || ptr != header[0].data() + header[0].size()) {
      syntax_error(lines[0].number, "expected a single non-negative integer size");
    }
  }

  SquareGrid grid(k);
  for (std::size_t r = 0; r < k; ++r) {
    if (r + 1 >= lines.size()) {
      const std::size_t at = lines.back().number + 1;
      syntax_error(at, "expected " + std::to_string(k) + " rows, found " + std::to_string(r));
    }
    const Line& line = lines[r + 1];
    const auto tokens = split_tokens(line.text);
    if (tokens.size() < k) {
      syntax_error(line.number, "row has " + std::to_string(tokens.size()) +
                                    " entries, expected " + std::to_string(k));
    }
    if (tokens.size() > k) {
      throw Error(ErrorCode::kNonSquare, "line " + std::to_string(line.number) + ": row has " +
                                             std::to_string(tokens.size()) +
                                             " entries, expected " + std::to_string(k));
    }
    for (std::size_t c = 0; c < k; ++c) grid(r, c) = parse_entry(tokens[c], line.number);
  }
  if (lines.size() > k + 1) {
    throw Error(ErrorCode::kNonSquare, "line " + std::to_string(lines[k + 1].number) +
                                           ": more than " + std::to_string(k) + " rows");
  }
  return CostMatrix(std::move(grid));
}

std::string serialize_matrix(const CostMatrix& m) {
  std::string out = std::to_string(m.size()) + '\n';
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) {
      if (j > 0) out += ' ';
      out += std::to_string(m(i, j));
    }
    out += '\n';
  }
  return out;
}

std::string matrix_digest(const CostMatrix& m) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char c : serialize_matrix(m)) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash));
  return buf;
}

}  // namespace assign
