#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>

namespace multirel::props {

struct Outcome {
  std::string name;
  std::uint64_t checked = 0;
  std::optional<std::string> failure;

  bool ok() const { return !failure && checked > 0; }
};

struct Property {
  std::string_view group;
  std::string_view name;
  Outcome (*run)();
};

/// Runs p, turning an escaped exception into a failure.
Outcome run_guarded(const Property& p);

/// The whole invariant suite, grouped by module.
std::span<const Property> all_properties();

}  // namespace multirel::props
