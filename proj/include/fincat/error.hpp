#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fincat {

enum class ErrorKind {
  // category and functor validation
  kMissingIdentity,
  kNonAssociative,
  kIncompleteComposition,
  kDomCodMismatch,
  kUnitLawViolation,
  kConflictingComposition,
  kDuplicateId,
  kUnknownObject,
  kUnknownArrow,
  kUnknownElement,
  kTooLarge,
  kFunctorViolation,
  kNaturalityViolation,
  kBaseMismatch,
  // operation preconditions
  kNotFiltered,
  kFlatnessRequired,
  kNotAnEmbedding,
  kNotFinal,
  kCodMismatch,
  kNotATopology,
  kNotRigid,
  kNotASheaf,
  kSearchBudgetExceeded,
  // internal self-tests
  kCommutationFailure,
  kRelationNotTransitive,
  kSelfTestFailure,
  // input handling
  kParseError,
  kUsage,
};

std::string_view error_name(ErrorKind kind);

/// Every failure raised by the library. what() reads "<Name>: <detail>".
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail);

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorKind kind_;
  std::string detail_;
};

}  // namespace fincat
