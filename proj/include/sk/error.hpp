#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sk {

enum class ErrorCode {
  DegenerateSimplex,
  DuplicateSimplex,
  IndexOutOfRange,
  QuotientNotSimplicial,
  NotATriangle,
  InvalidMark,
  Disconnected,
  UnreducedRelator,
  BadLengthTwoRelator,
  NotCyclicallyReduced,
  InvalidPresentation,
  TooLarge,
  NotAComplex,
  InvalidColoredGraph,
  BudgetExceeded,
  TrivialH1,
  SystoleTooShort,
  UnsupportedSpec,
  DomainError,
  ParseError,
};

std::string_view to_string(ErrorCode code);

/// Domain error raised by every module; the code is echoed by the CLI.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);

  ErrorCode code() const noexcept { return code_; }
  std::string_view code_name() const { return to_string(code_); }

 private:
  ErrorCode code_;
};

}  // namespace sk
