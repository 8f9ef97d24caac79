#include "symrep/errors.hpp"

namespace symrep {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::NotAssociative: return "NotAssociative";
    case ErrorCode::BadIdentity: return "BadIdentity";
    case ErrorCode::SizeBoundExceeded: return "SizeBoundExceeded";
    case ErrorCode::InvalidHom: return "InvalidHom";
    case ErrorCode::TargetNotGroup: return "TargetNotGroup";
    case ErrorCode::NotAGroup: return "NotAGroup";
    case ErrorCode::NotASubgroup: return "NotASubgroup";
    case ErrorCode::IdentityLawViolated: return "IdentityLawViolated";
    case ErrorCode::CompatibilityViolated: return "CompatibilityViolated";
    case ErrorCode::NotEquivariant: return "NotEquivariant";
    case ErrorCode::MonoidMismatch: return "MonoidMismatch";
    case ErrorCode::SubmonoidMismatch: return "SubmonoidMismatch";
    case ErrorCode::CompletionMismatch: return "CompletionMismatch";
    case ErrorCode::FamilyInvalid: return "FamilyInvalid";
    case ErrorCode::ObjectNotFound: return "ObjectNotFound";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::Usage: return "Usage";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, std::string const& message,
             std::vector<Index> witness)
    : std::runtime_error(std::string(to_string(code)) + ": " + message),
      code_(code),
      message_(message),
      witness_(std::move(witness)) {}

}  // namespace symrep
