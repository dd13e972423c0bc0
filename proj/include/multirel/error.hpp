#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace multirel {

enum class ErrorCode {
  duplicate_element,
  empty_carrier,
  unknown_element,
  carrier_mismatch,
  carrier_too_large,
  not_subidentity,
  not_multirelation,
  enumeration_cap_exceeded,
  universe_too_large,
  syntax_error,
  unknown_carrier,
  duplicate_name,
  invalid_argument,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace multirel
