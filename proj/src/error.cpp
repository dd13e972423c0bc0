#include "multirel/error.hpp"

namespace multirel {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::duplicate_element: return "DuplicateElement";
    case ErrorCode::empty_carrier: return "EmptyCarrier";
    case ErrorCode::unknown_element: return "UnknownElement";
    case ErrorCode::carrier_mismatch: return "CarrierMismatch";
    case ErrorCode::carrier_too_large: return "CarrierTooLarge";
    case ErrorCode::not_subidentity: return "NotSubidentity";
    case ErrorCode::not_multirelation: return "NotMultirelation";
    case ErrorCode::enumeration_cap_exceeded: return "EnumerationCapExceeded";
    case ErrorCode::universe_too_large: return "UniverseTooLarge";
    case ErrorCode::syntax_error: return "SyntaxError";
    case ErrorCode::unknown_carrier: return "UnknownCarrier";
    case ErrorCode::duplicate_name: return "DuplicateName";
    case ErrorCode::invalid_argument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace multirel
