#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace sctop {

enum class ErrorKind {
  InvalidPoset,
  InvalidTopology,
  T0Violation,
  CapExceeded,
  SpaceMismatch,
  IndexOutOfRange,
  NotSIPlusContinuous,
  NotStronglyComplete,
  UnsupportedDescriptor,
  UnsupportedForm,
  Unsupported,
  ParseError,
  SemanticError,
  SchemaError,
};

constexpr std::string_view to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::InvalidPoset: return "InvalidPoset";
    case ErrorKind::InvalidTopology: return "InvalidTopology";
    case ErrorKind::T0Violation: return "T0Violation";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::SpaceMismatch: return "SpaceMismatch";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::NotSIPlusContinuous: return "NotSIPlusContinuous";
    case ErrorKind::NotStronglyComplete: return "NotStronglyComplete";
    case ErrorKind::UnsupportedDescriptor: return "UnsupportedDescriptor";
    case ErrorKind::UnsupportedForm: return "UnsupportedForm";
    case ErrorKind::Unsupported: return "Unsupported";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::SemanticError: return "SemanticError";
    case ErrorKind::SchemaError: return "SchemaError";
  }
  return "Unknown";
}

/// Base exception for every failure raised by the library. The kind lets
/// callers (the CLI in particular) map failures to exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, std::string expected, std::string found)
      : Error(ErrorKind::ParseError,
              "line " + std::to_string(line) + ", column " + std::to_string(column) +
                  ": expected " + expected + ", found " + found),
        line_(line),
        column_(column),
        expected_(std::move(expected)) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::string& expected() const noexcept { return expected_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string expected_;
};

class SchemaError : public Error {
 public:
  SchemaError(std::string pointer, const std::string& message)
      : Error(ErrorKind::SchemaError, (pointer.empty() ? std::string("/") : pointer) + ": " + message),
        pointer_(std::move(pointer)) {}

  /// JSON pointer to the offending value.
  const std::string& pointer() const noexcept { return pointer_; }

 private:
  std::string pointer_;
};

/// Hard cap on the number of carrier points for which a full subset
/// enumeration is performed.
inline constexpr std::size_t kDefaultCap = 20;

inline void check_cap(std::size_t size, std::size_t cap, std::string_view what) {
  if (size > cap) {
    throw Error(ErrorKind::CapExceeded, std::string(what) + " needs " + std::to_string(size) +
                                            " points but the enumeration cap is " +
                                            std::to_string(cap));
  }
}

}  // namespace sctop
