#pragma once

#include <stdexcept>
#include <string>

namespace attisim {

/// Input data violates a documented range or labeling constraint.
struct ValidationError : std::runtime_error {
  explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Caller broke an API precondition (e.g. mismatched turn indices).
struct ContractError : std::logic_error {
  explicit ContractError(const std::string& msg) : std::logic_error(msg) {}
};

/// A file could not be parsed; the message carries the line number.
struct ParseError : std::runtime_error {
  ParseError(const std::string& file, int line, const std::string& msg)
      : std::runtime_error(file + ":" + std::to_string(line) + ": " + msg),
        line_number(line) {}
  int line_number;
};

}  // namespace attisim
