#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace labbench::scpi {

enum class Keyword { Min, Max, On, Off };

// One program-data element: a finite number, a recognized keyword, or an
// uninterpreted token (the consumer decides whether that is an error).
struct Arg {
  std::variant<double, Keyword, std::string> value;

  bool is_number() const { return std::holds_alternative<double>(value); }
  bool is_keyword() const { return std::holds_alternative<Keyword>(value); }
  bool is_token() const { return std::holds_alternative<std::string>(value); }
  double number() const { return std::get<double>(value); }
  Keyword keyword() const { return std::get<Keyword>(value); }
  const std::string& token() const { return std::get<std::string>(value); }
};

// Negative codes per the SCPI convention; 0 means "No error".
struct ScpiError {
  int code = 0;
  std::string message;
};

inline constexpr int kErrSyntax = -102;
inline constexpr int kErrMissingParameter = -109;
inline constexpr int kErrUndefinedHeader = -113;
inline constexpr int kErrDataOutOfRange = -222;
inline constexpr int kErrQueueOverflow = -350;

// Standard message text for the codes above (and 0).
ScpiError make_error(int code);

struct CommandUnit {
  std::vector<std::string> path;  // canonical short-form mnemonics
  std::vector<std::string> raw;   // uppercased mnemonics as written
  bool is_common = false;         // *-prefixed
  bool is_query = false;
  std::vector<Arg> args;
};

struct ParseResult {
  std::vector<CommandUnit> units;
  std::optional<ScpiError> error;  // engaged => units is empty

  bool ok() const { return !error.has_value(); }
};

// Parse one newline-stripped program message. Units split on ';' with
// SCPI-99 path retention: a unit starting with ':' or '*' resolves from the
// root, anything else resolves at the previous unit's parent level. Header
// existence is not checked here; dispatch raises -113.
ParseResult parse_message(std::string_view line);

// True iff token equals the short or the long form of a mnemonic spelled
// with its uppercase short-form prefix (e.g. "VOLTage"), case-insensitive.
bool mnemonic_matches(std::string_view token, std::string_view long_form);

// Canonical short form of a mnemonic as written: first four characters,
// or three when the fourth is a vowel.
std::string short_form(std::string_view mnemonic);

// NR1/NR2/NR3 numbers and MINimum/MAXimum/ON/OFF keywords; anything else
// falls through to a bare token.
Arg parse_number(std::string_view token);

// Query response format: 9 significant digits, uppercase E exponent.
std::string format_nr3(double value);

}  // namespace labbench::scpi
