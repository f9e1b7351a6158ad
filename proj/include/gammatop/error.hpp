#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gammatop/point_set.hpp"

namespace gammatop {

enum class ErrorCode {
  // topology axioms
  MissingEmptyOrFull,
  NotClosedUnderUnion,
  NotClosedUnderIntersection,
  PointOutOfRange,
  // operations
  NotExpansive,
  PivotNotInSpace,
  TableNotTotal,
  UnknownOpen,
  // properties
  NotACoverOfX,
  MemberNotGammaOpen,
  Uncoverable,
  EmptySubspace,
  PreconditionViolated,
  // search and plumbing
  SizeTooLarge,
  UnknownTheorem,
  ParseError,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::MissingEmptyOrFull: return "MissingEmptyOrFull";
    case ErrorCode::NotClosedUnderUnion: return "NotClosedUnderUnion";
    case ErrorCode::NotClosedUnderIntersection: return "NotClosedUnderIntersection";
    case ErrorCode::PointOutOfRange: return "PointOutOfRange";
    case ErrorCode::NotExpansive: return "NotExpansive";
    case ErrorCode::PivotNotInSpace: return "PivotNotInSpace";
    case ErrorCode::TableNotTotal: return "TableNotTotal";
    case ErrorCode::UnknownOpen: return "UnknownOpen";
    case ErrorCode::NotACoverOfX: return "NotACoverOfX";
    case ErrorCode::MemberNotGammaOpen: return "MemberNotGammaOpen";
    case ErrorCode::Uncoverable: return "Uncoverable";
    case ErrorCode::EmptySubspace: return "EmptySubspace";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::SizeTooLarge: return "SizeTooLarge";
    case ErrorCode::UnknownTheorem: return "UnknownTheorem";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

/// True for errors caused by mathematically invalid input (as opposed to usage errors).
constexpr bool is_invalid_input(ErrorCode code) {
  switch (code) {
    case ErrorCode::SizeTooLarge:
    case ErrorCode::UnknownTheorem:
    case ErrorCode::ParseError:
      return false;
    default:
      return true;
  }
}

/// Every failure in the library is reported as an Error carrying a code and,
/// where one exists, the witness sets (or index) that violate the contract.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string message, std::vector<PointSet> witness = {},
        std::optional<std::size_t> index = std::nullopt)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code),
        witness_(std::move(witness)),
        index_(index) {}

  ErrorCode code() const noexcept { return code_; }
  const std::vector<PointSet>& witness() const noexcept { return witness_; }
  std::optional<std::size_t> index() const noexcept { return index_; }

 private:
  ErrorCode code_;
  std::vector<PointSet> witness_;
  std::optional<std::size_t> index_;
};

}  // namespace gammatop
