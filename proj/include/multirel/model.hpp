#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "multirel/error.hpp"
#include "multirel/liftings.hpp"

namespace multirel {

/// Parse failure with a 1-based source position.
class ParseError : public Error {
 public:
  ParseError(ErrorCode code, std::size_t line, std::size_t column, const std::string& message);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

struct NamedMultirelation {
  std::string name;
  Multirelation rel;

  friend bool operator==(const NamedMultirelation&, const NamedMultirelation&) = default;
};

/// Declared carriers and multirelations, in declaration order.
struct Model {
  std::vector<Carrier> carriers;
  std::vector<NamedMultirelation> mrels;

  const Carrier* find_carrier(std::string_view name) const;
  const Multirelation* find_mrel(std::string_view name) const;

  friend bool operator==(const Model&, const Model&) = default;
};

/// Grammar, one statement per line, '#' starts a comment, LF or CRLF:
///
///   carrier NAME = ELEM ELEM ...
///   mrel NAME : SRC -> P(BASE)
///   ELEM -> { [ELEM {, ELEM}] }        pair of the most recent mrel
///
/// Throws ParseError (syntax_error, unknown_carrier, unknown_element,
/// duplicate_name, duplicate_element, empty_carrier, carrier_too_large).
Model parse_model(std::string_view text);

/// Canonical text: carriers, then each mrel with its pairs sorted by source
/// index and subset mask. parse_model(render_model(m)) == m.
std::string render_model(const Model& model);

/// One "mrel NAME : SRC -> P(BASE)" block followed by its pair lines.
std::string render_mrel(std::string_view name, const Multirelation& rel);

}  // namespace multirel
