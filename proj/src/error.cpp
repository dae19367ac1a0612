#include "sk/error.hpp"

namespace sk {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DegenerateSimplex: return "DegenerateSimplex";
    case ErrorCode::DuplicateSimplex: return "DuplicateSimplex";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::QuotientNotSimplicial: return "QuotientNotSimplicial";
    case ErrorCode::NotATriangle: return "NotATriangle";
    case ErrorCode::InvalidMark: return "InvalidMark";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::UnreducedRelator: return "UnreducedRelator";
    case ErrorCode::BadLengthTwoRelator: return "BadLengthTwoRelator";
    case ErrorCode::NotCyclicallyReduced: return "NotCyclicallyReduced";
    case ErrorCode::InvalidPresentation: return "InvalidPresentation";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::NotAComplex: return "NotAComplex";
    case ErrorCode::InvalidColoredGraph: return "InvalidColoredGraph";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::TrivialH1: return "TrivialH1";
    case ErrorCode::SystoleTooShort: return "SystoleTooShort";
    case ErrorCode::UnsupportedSpec: return "UnsupportedSpec";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(what), code_(code) {}

}  // namespace sk
