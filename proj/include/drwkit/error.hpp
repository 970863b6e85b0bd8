#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace drwkit {

/// Domain error categories. The CLI prints `name(kind)` on stderr.
enum class ErrorKind {
  DivisionByZero,
  InexactDivision,
  NotInGhostImage,
  LengthUnderflow,
  ContextMismatch,
  NotAUnit,
  NotMonogenic,
  ImproperIdeal,
  InvalidArgument,
  ParseError,
  Internal,
};

constexpr std::string_view name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::InexactDivision: return "InexactDivision";
    case ErrorKind::NotInGhostImage: return "NotInGhostImage";
    case ErrorKind::LengthUnderflow: return "LengthUnderflow";
    case ErrorKind::ContextMismatch: return "ContextMismatch";
    case ErrorKind::NotAUnit: return "NotAUnit";
    case ErrorKind::NotMonogenic: return "NotMonogenic";
    case ErrorKind::ImproperIdeal: return "ImproperIdeal";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::Internal: return "Internal";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(name(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

}  // namespace drwkit
