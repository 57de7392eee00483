#include "fincat/error.hpp"

namespace fincat {

std::string_view error_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kMissingIdentity: return "MissingIdentity";
    case ErrorKind::kNonAssociative: return "NonAssociative";
    case ErrorKind::kIncompleteComposition: return "IncompleteComposition";
    case ErrorKind::kDomCodMismatch: return "DomCodMismatch";
    case ErrorKind::kUnitLawViolation: return "UnitLawViolation";
    case ErrorKind::kConflictingComposition: return "ConflictingComposition";
    case ErrorKind::kDuplicateId: return "DuplicateId";
    case ErrorKind::kUnknownObject: return "UnknownObject";
    case ErrorKind::kUnknownArrow: return "UnknownArrow";
    case ErrorKind::kUnknownElement: return "UnknownElement";
    case ErrorKind::kTooLarge: return "TooLarge";
    case ErrorKind::kFunctorViolation: return "FunctorViolation";
    case ErrorKind::kNaturalityViolation: return "NaturalityViolation";
    case ErrorKind::kBaseMismatch: return "BaseMismatch";
    case ErrorKind::kNotFiltered: return "NotFiltered";
    case ErrorKind::kFlatnessRequired: return "FlatnessRequired";
    case ErrorKind::kNotAnEmbedding: return "NotAnEmbedding";
    case ErrorKind::kNotFinal: return "NotFinal";
    case ErrorKind::kCodMismatch: return "CodMismatch";
    case ErrorKind::kNotATopology: return "NotATopology";
    case ErrorKind::kNotRigid: return "NotRigid";
    case ErrorKind::kNotASheaf: return "NotASheaf";
    case ErrorKind::kSearchBudgetExceeded: return "SearchBudgetExceeded";
    case ErrorKind::kCommutationFailure: return "CommutationFailure";
    case ErrorKind::kRelationNotTransitive: return "RelationNotTransitive";
    case ErrorKind::kSelfTestFailure: return "SelfTestFailure";
    case ErrorKind::kParseError: return "ParseError";
    case ErrorKind::kUsage: return "Usage";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& detail)
    : std::runtime_error(std::string(error_name(kind)) + ": " + detail),
      kind_(kind),
      detail_(detail) {}

}  // namespace fincat
