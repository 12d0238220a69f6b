#include "core/scpi.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>

namespace labbench::scpi {

namespace {

std::string upper(std::string_view s) {
  std::string out(s);
  for (char& ch : out) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
  return out;
}

bool is_vowel(char c) {
  return c == 'A' || c == 'E' || c == 'I' || c == 'O' || c == 'U';
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool valid_mnemonic(std::string_view s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s.front()))) return false;
  for (char c : s) {
    if (!std::isalnum(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  size_t start = 0;
  while (true) {
    size_t pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      parts.push_back(s.substr(start));
      return parts;
    }
    parts.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

// Program data separated by whitespace or commas.
std::vector<std::string_view> split_args(std::string_view s) {
  std::vector<std::string_view> out;
  size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (std::isspace(static_cast<unsigned char>(s[i])) || s[i] == ',')) ++i;
    size_t start = i;
    while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i])) && s[i] != ',') ++i;
    if (i > start) out.push_back(s.substr(start, i - start));
  }
  return out;
}

}  // namespace

ScpiError make_error(int code) {
  switch (code) {
    case 0: return {0, "No error"};
    case kErrSyntax: return {kErrSyntax, "Syntax error"};
    case kErrMissingParameter: return {kErrMissingParameter, "Missing parameter"};
    case kErrUndefinedHeader: return {kErrUndefinedHeader, "Undefined header"};
    case kErrDataOutOfRange: return {kErrDataOutOfRange, "Data out of range"};
    case kErrQueueOverflow: return {kErrQueueOverflow, "Queue overflow"};
    default: return {code, "Unknown error"};
  }
}

std::string short_form(std::string_view mnemonic) {
  std::string u = upper(mnemonic);
  if (u.size() <= 4) return u;
  return u.substr(0, is_vowel(u[3]) ? 3 : 4);
}

bool mnemonic_matches(std::string_view token, std::string_view long_form) {
  std::string t = upper(token);
  std::string full = upper(long_form);
  size_t n = 0;
  while (n < long_form.size() &&
         std::isupper(static_cast<unsigned char>(long_form[n]))) {
    ++n;
  }
  return t == full || t == full.substr(0, n);
}

Arg parse_number(std::string_view token) {
  std::string_view num = token;
  if (!num.empty() && num.front() == '+') num.remove_prefix(1);
  if (!num.empty()) {
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), v);
    if (ec == std::errc{} && ptr == num.data() + num.size() && std::isfinite(v)) {
      return Arg{v};
    }
  }
  if (mnemonic_matches(token, "MINimum")) return Arg{Keyword::Min};
  if (mnemonic_matches(token, "MAXimum")) return Arg{Keyword::Max};
  std::string u = upper(token);
  if (u == "ON") return Arg{Keyword::On};
  if (u == "OFF") return Arg{Keyword::Off};
  return Arg{std::string(token)};
}

std::string format_nr3(double value) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.8E", value);
  return buf;
}

ParseResult parse_message(std::string_view line) {
  ParseResult result;
  std::vector<std::string> ctx_path;  // previous unit's parent level
  std::vector<std::string> ctx_raw;

  for (std::string_view piece : split(line, ';')) {
    std::string_view unit_text = trim(piece);
    if (unit_text.empty()) {
      return {{}, make_error(kErrSyntax)};
    }

    // Header runs to the first whitespace; everything after is program data.
    size_t header_end = 0;
    while (header_end < unit_text.size() &&
           !std::isspace(static_cast<unsigned char>(unit_text[header_end]))) {
      ++header_end;
    }
    std::string_view header = unit_text.substr(0, header_end);
    std::string_view data = unit_text.substr(header_end);

    CommandUnit unit;
    if (!header.empty() && header.back() == '?') {
      unit.is_query = true;
      header.remove_suffix(1);
    }

    bool absolute = false;
    if (!header.empty() && header.front() == '*') {
      unit.is_common = true;
      header.remove_prefix(1);
      if (!valid_mnemonic(header)) {
        return {{}, make_error(kErrSyntax)};
      }
      unit.raw.push_back(upper(header));
      unit.path.push_back(short_form(header));
    } else {
      if (!header.empty() && header.front() == ':') {
        absolute = true;
        header.remove_prefix(1);
      }
      if (header.empty()) {
        return {{}, make_error(kErrSyntax)};
      }
      if (!absolute) {
        unit.path = ctx_path;
        unit.raw = ctx_raw;
      }
      for (std::string_view mnem : split(header, ':')) {
        if (!valid_mnemonic(mnem)) {
          return {{}, make_error(kErrSyntax)};
        }
        unit.raw.push_back(upper(mnem));
        unit.path.push_back(short_form(mnem));
      }
      // Path retention: the next relative unit resolves at this level.
      ctx_path.assign(unit.path.begin(), unit.path.end() - 1);
      ctx_raw.assign(unit.raw.begin(), unit.raw.end() - 1);
    }

    for (std::string_view tok : split_args(data)) {
      unit.args.push_back(parse_number(tok));
    }
    result.units.push_back(std::move(unit));
  }
  return result;
}

}  // namespace labbench::scpi
