#pragma once

#include <stdexcept>
#include <string>

namespace speciallab {

/// Base class for every error raised by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Presentation-file syntax or validation failure; carries the 1-based line.
struct ParseError : Error {
  int line;
  ParseError(int line_, const std::string& what_)
      : Error("line " + std::to_string(line_) + ": " + what_), line(line_) {}
};

/// A completeness precondition could not be established for a system.
struct CompletenessError : Error {
  using Error::Error;
};

/// A witness search ran out of its state budget before settling the query.
struct SearchBudgetError : Error {
  using Error::Error;
};

/// The requested grammar export is refused because the instance language
/// has three or more synchronized runs and is provably not context-free.
struct NotContextFreeError : Error {
  using Error::Error;
};

}  // namespace speciallab
