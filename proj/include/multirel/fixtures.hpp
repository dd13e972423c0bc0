#pragma once

#include <array>
#include <string_view>

#include "multirel/liftings.hpp"

// Named multirelations whose composition behaviour is known exactly. Sweeps
// check them before any random instance.
namespace multirel::fixtures {

/// The four multirelations over X = {a}, in table order 0, alpha, beta, gamma:
/// 0, {(a,{})}, {(a,{a})}, {(a,{}),(a,{a})}.
struct SingletonBase {
  Carrier x;
  Multirelation zero;
  Multirelation alpha;
  Multirelation beta;
  Multirelation gamma;

  std::array<Multirelation, 4> all() const { return {zero, alpha, beta, gamma}; }
};
SingletonBase singleton_base();

/// Display names in table order: "0", "α", "β", "γ".
inline constexpr std::array<std::string_view, 4> kSingletonNames = {"0", "α", "β", "γ"};

/// X = {a,b,c}; alpha relates every element to X, beta relates each element
/// to the other two. Parikh extension fails on (beta, alpha).
struct ParikhCounterexample {
  Carrier x;
  Multirelation alpha;
  Multirelation beta;
};
ParikhCounterexample parikh_counterexample();

/// X = {a,b}; alpha = {(a,{a,b}),(a,{a}),(b,{a})}, beta = {(a,{a}),(a,{b})}.
/// Peleg associativity fails on (alpha, alpha, beta).
struct PelegCounterexample {
  Carrier x;
  Multirelation alpha;
  Multirelation beta;
};
PelegCounterexample peleg_counterexample();

}  // namespace multirel::fixtures
