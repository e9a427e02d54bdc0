#pragma once

#include <stdexcept>
#include <string>

namespace iterasym {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad user input: malformed rationals, invalid specs, unknown names.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Structured-text parse failure; carries the offending line (0 if unknown)
// and field name (empty if unknown).
class ParseError : public ValidationError {
 public:
  ParseError(const std::string& message, int line = 0, std::string field = {})
      : ValidationError(format(message, line, field)), line_(line), field_(std::move(field)) {}

  int line() const noexcept { return line_; }
  const std::string& field() const noexcept { return field_; }

 private:
  static std::string format(const std::string& message, int line, const std::string& field) {
    std::string out;
    if (line > 0) out += "line " + std::to_string(line) + ": ";
    if (!field.empty()) out += "field '" + field + "': ";
    return out + message;
  }

  int line_;
  std::string field_;
};

// Argument outside a function's declared domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Iterative numeric procedure failed to converge.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

// Requested accuracy cannot be delivered at the working precision.
class PrecisionError : public Error {
 public:
  using Error::Error;
};

}  // namespace iterasym
