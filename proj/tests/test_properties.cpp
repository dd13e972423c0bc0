#include <doctest.h>

#include "properties.hpp"

using multirel::props::all_properties;
using multirel::props::run_guarded;

TEST_CASE("invariant suite") {
  for (const auto& p : all_properties()) {
    SUBCASE(std::string(p.name).c_str()) {
      const auto outcome = run_guarded(p);
      INFO(outcome.name << " checked=" << outcome.checked << " failure=" << outcome.failure.value_or(""));
      CHECK(outcome.ok());
    }
  }
}
