#include "pi/error.hpp"

namespace pi {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Syntax: return "SyntaxError";
    case ErrorKind::UnknownName: return "UnknownName";
    case ErrorKind::TypeMismatch: return "TypeMismatch";
    case ErrorKind::Ambiguous: return "Ambiguous";
    case ErrorKind::ValueTypeMismatch: return "ValueTypeMismatch";
    case ErrorKind::EndpointMismatch: return "EndpointMismatch";
    case ErrorKind::SoundnessViolation: return "SoundnessViolation";
    case ErrorKind::SemanticMismatch: return "SemanticMismatch";
    case ErrorKind::NotPi2: return "NotPi2";
    case ErrorKind::BadPosition: return "BadPosition";
    case ErrorKind::PatternMismatch: return "PatternMismatch";
    case ErrorKind::IllTypedInstance: return "IllTypedInstance";
    case ErrorKind::UnsoundInstance: return "UnsoundInstance";
    case ErrorKind::FinalMismatch: return "FinalMismatch";
    case ErrorKind::InvalidLoop: return "InvalidLoop";
    case ErrorKind::NoCell: return "NoCell";
    case ErrorKind::AgreementViolation: return "AgreementViolation";
    case ErrorKind::NotQuotedEndpoints: return "NotQuotedEndpoints";
  }
  return "Error";
}

namespace {

std::string describe(std::size_t line, std::size_t column,
                     const std::string& found,
                     const std::vector<std::string>& expected) {
  std::string msg = std::to_string(line) + ":" + std::to_string(column) +
                    ": unexpected " +
                    (found == "end of input" ? found : "'" + found + "'");
  if (!expected.empty()) {
    msg += "; expected one of:";
    for (const auto& e : expected) msg += " " + e;
  }
  return msg;
}

}  // namespace

ParseError::ParseError(std::size_t line, std::size_t column, std::string found,
                       std::vector<std::string> expected)
    : Error(ErrorKind::Syntax, describe(line, column, found, expected)),
      line_(line),
      column_(column),
      found_(std::move(found)),
      expected_(std::move(expected)) {}

}  // namespace pi
