#include "qfocus/error.hpp"

namespace qfocus {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DuplicateIndex: return "DuplicateIndex";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::ArityMismatch: return "ArityMismatch";
    case ErrorCode::NotInLens: return "NotInLens";
    case ErrorCode::EqualIndices: return "EqualIndices";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::UnknownGate: return "UnknownGate";
    case ErrorCode::UnsupportedAlphabet: return "UnsupportedAlphabet";
    case ErrorCode::InvalidPermutation: return "InvalidPermutation";
    case ErrorCode::SizeGuardExceeded: return "SizeGuardExceeded";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::UnknownExample: return "UnknownExample";
  }
  return "Unknown";
}

}  // namespace qfocus
