#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "multirel/liftings.hpp"

namespace multirel {

// ---------------------------------------------------------------------------
// Oracles and single-instance checks

/// Composition evaluated straight from the set-theoretic definitions, without
/// any lifting:
///   kleisli  (a,A) iff some (a,B) in alpha has A = union of beta(B)
///   parikh   (a,A) iff some (a,B) in alpha has (b,A) in beta for all b in B
///   peleg    (a,A) iff some (a,B) in alpha admits a choice C_b in beta(b)
///            for each b in B with union A
/// Peleg enumerates choices on B only; throws enumeration_cap_exceeded when
/// their number exceeds cap.
Multirelation oracle_compose(LiftKind kind, const Multirelation& alpha, const Multirelation& beta,
                             std::uint64_t cap = kDefaultEnumerationCap);

/// lift(beta ; lift(gamma)) == lift(beta) ; lift(gamma).
bool check_extension(LiftKind kind, const Multirelation& beta, const Multirelation& gamma);

/// (alpha . beta) . gamma == alpha . (beta . gamma).
bool check_associativity(LiftKind kind, const Multirelation& alpha, const Multirelation& beta,
                         const Multirelation& gamma);

/// When the extension identity fails on (beta, gamma), the single-pair
/// multirelation {(x0, B)} with B a row where the two sides differ. The triple
/// (that, beta, gamma) then violates associativity.
std::optional<Multirelation> associativity_witness(LiftKind kind, const Multirelation& beta,
                                                   const Multirelation& gamma);

// ---------------------------------------------------------------------------
// Laws and reports

enum class LawKind {
  kleisli_assoc,
  parikh_assoc,
  peleg_assoc,
  peleg_assoc_union_closed,      // third argument union-closed
  peleg_assoc_all_union_closed,  // all three union-closed
  parikh_assoc_up_closed,
  kleisli_right_unit,
  kleisli_left_unit,
  parikh_left_unit,
  parikh_right_unit,
  parikh_units_up_closed,
  peleg_unit,
  lift_extension,
  weak_peleg_assoc,
  oracle_equivalence,
};

/// A law; lift_extension and oracle_equivalence are parameterized by a kind.
struct LawId {
  LawKind kind;
  std::optional<LiftKind> lift;

  friend bool operator==(const LawId&, const LawId&) = default;
};

/// "peleg-assoc", "lift-extension(parikh)", ...
std::string to_string(const LawId& law);
/// Inverse of to_string; also accepts "lift-extension-parikh". Throws invalid_argument.
LawId parse_law_id(std::string_view text);
std::vector<LawId> all_law_ids();

/// How many multirelations the law quantifies over (1, 2 or 3). Unit-search
/// laws quantify over the candidate unit and report 1.
int law_arity(const LawId& law);
/// Largest base size sweep() accepts in exhaustive mode.
std::size_t exhaustive_limit(const LawId& law);

struct Exhaustive {
  friend bool operator==(const Exhaustive&, const Exhaustive&) = default;
};
struct Sampled {
  std::uint64_t count = 0;
  std::uint64_t seed = 0;
  friend bool operator==(const Sampled&, const Sampled&) = default;
};
using SweepMode = std::variant<Exhaustive, Sampled>;

std::string to_string(const SweepMode& mode);

struct LawReport {
  LawId law;
  std::size_t universe = 0;  // base carrier size
  SweepMode mode;
  bool holds = true;
  std::optional<std::string> witness;  // present iff !holds
  std::uint64_t checked = 0;           // instances evaluated

  friend bool operator==(const LawReport&, const LawReport&) = default;
};

/// "law=<id> universe=<n> mode=<m> verdict=<holds|fails> [witness=...]"
std::string to_string(const LawReport& report);

/// One evaluated instance, handed to SweepOptions::trace.
struct TraceRecord {
  LawId law;
  std::uint64_t index = 0;
  std::string origin;  // "fixture:<name>", "exhaustive" or "sampled"
  bool holds = true;
  std::vector<std::pair<std::string, std::string>> arguments;  // name, rendered relation
};

struct SweepOptions {
  std::function<void(const TraceRecord&)> trace;
  std::uint64_t enumeration_cap = kDefaultEnumerationCap;
  /// A class-restricted sampled sweep redraws each argument until it lies in
  /// the class, and stops early after this many draws for one argument.
  std::uint64_t max_rejections_per_sample = 100000;
};

enum class UnitSide { left, right, both };

/// Right: lift(kind, iota) == id (no quantifier needed). Left: iota ; lift(alpha)
/// == alpha for every alpha over the base of iota (all of them in exhaustive
/// mode, count seeded draws otherwise). Both sides only exists as a law for
/// peleg; other kinds reject UnitSide::both with invalid_argument.
LawReport check_unit(LiftKind kind, UnitSide side, const Multirelation& iota,
                     const SweepMode& mode = Exhaustive{});

/// Evaluates one instance of the law. Arguments follow the law's quantifier
/// order (alpha, beta, gamma; lift-extension takes beta, gamma). Unit-search
/// laws take the candidate iota and check it exhaustively. Returns nullopt
/// when the instance lies outside the class the law is restricted to.
std::optional<bool> check_instance(const LawId& law, const std::vector<Multirelation>& args,
                                   const SweepOptions& options = {});

/// Every candidate iota: X -> P(X) with |X| = base_size (<= 2) passing
/// check_unit(kind, side, iota, mode), in matrix-bit order.
std::vector<Multirelation> find_units(LiftKind kind, UnitSide side, std::size_t base_size,
                                      const SweepMode& mode = Exhaustive{});

/// Checks the law over endo-multirelations X -> P(X) with |X| = base_size.
///
/// Exhaustive mode enumerates every instance (index order: first argument
/// slowest, each argument in matrix-bit order) and throws universe_too_large
/// above exhaustive_limit(law). Sampled mode first checks the pinned fixtures
/// that live at this base size, then count seeded uniform draws. Class-restricted
/// laws skip instances outside the class. Unit-search laws always search every
/// candidate unit (base <= 2); the mode only governs the quantifier over alpha.
/// The report carries the first failing instance.
LawReport sweep(const LawId& law, std::size_t base_size, const SweepMode& mode,
                const SweepOptions& options = {});

}  // namespace multirel
