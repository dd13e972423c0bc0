#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "multirel/error.hpp"

namespace multirel {

enum class CarrierKind { base, powerset };

/// A named, ordered finite set of element labels.
///
/// Carriers are immutable and cheap to copy (shared storage). Two carriers
/// compare equal when name, element list and kind agree; a powerset carrier
/// additionally compares its base. Index i of a powerset carrier is the
/// subset whose members are the base elements at the bits set in i.
class Carrier {
 public:
  const std::string& name() const noexcept;
  std::span<const std::string> elements() const noexcept;
  std::size_t size() const noexcept;
  const std::string& label(std::size_t index) const;
  std::optional<std::size_t> index_of(std::string_view label) const;

  CarrierKind kind() const noexcept;
  bool is_powerset() const noexcept { return kind() == CarrierKind::powerset; }
  /// Base carrier of a powerset carrier; throws not_multirelation otherwise.
  const Carrier& powerset_base() const;

  friend bool operator==(const Carrier& lhs, const Carrier& rhs);

 private:
  struct Data;
  explicit Carrier(std::shared_ptr<const Data> data) : data_(std::move(data)) {}

  friend Carrier mk_carrier(std::string name, std::vector<std::string> elements);
  friend Carrier detail_powerset_of(const Carrier& base);

  std::shared_ptr<const Data> data_;
};

/// Base-kind carrier. Throws empty_carrier or duplicate_element.
Carrier mk_carrier(std::string name, std::vector<std::string> elements);

// Unchecked powerset construction, memoized per base. Use pow_carrier().
Carrier detail_powerset_of(const Carrier& base);

/// The carrier "X" with elements a, b, c, ... of the given size (1..26).
Carrier standard_carrier(std::size_t size, std::string name = "X");

}  // namespace multirel
