#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pi {

enum class ErrorKind {
  Syntax,
  UnknownName,
  TypeMismatch,
  Ambiguous,
  ValueTypeMismatch,
  EndpointMismatch,
  SoundnessViolation,
  SemanticMismatch,
  NotPi2,
  BadPosition,
  PatternMismatch,
  IllTypedInstance,
  UnsoundInstance,
  FinalMismatch,
  InvalidLoop,
  NoCell,
  AgreementViolation,
  NotQuotedEndpoints,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the toolkit carries a kind so callers (and the
/// CLI exit-code mapping) can dispatch without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, std::string found,
             std::vector<std::string> expected);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::string& found() const noexcept { return found_; }
  const std::vector<std::string>& expected() const noexcept {
    return expected_;
  }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string found_;
  std::vector<std::string> expected_;
};

// Internal-error classes: these indicate a bug in the toolkit, never bad
// user input.
inline bool is_internal(ErrorKind kind) {
  return kind == ErrorKind::SoundnessViolation ||
         kind == ErrorKind::AgreementViolation;
}

}  // namespace pi
