#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "multirel/powerset.hpp"
#include "multirel/relation.hpp"

namespace multirel {

/// A relation X -> P(Y). Row i is the family of subsets related to x_i; since
/// P(Y) has at most 64 elements each family is one word.
class Multirelation : public Relation {
 public:
  /// Throws not_multirelation unless the target is a powerset carrier.
  explicit Multirelation(Relation rel);
  /// The empty multirelation src -> P(base).
  Multirelation(const Carrier& src, const Carrier& base);

  const Carrier& target_base() const { return target().powerset_base(); }
  /// Subset family of row i, one bit per subset mask.
  Word family(std::size_t i) const noexcept { return row_word(i); }
};

/// Pairs are (element label, subset label) with subsets written "{a,b}".
Multirelation mk_multirelation(const Carrier& src, const Carrier& base,
                               std::initializer_list<std::pair<std::string, std::string>> pairs);

enum class LiftKind { kleisli, parikh, peleg };

inline constexpr LiftKind kAllLiftKinds[] = {LiftKind::kleisli, LiftKind::parikh, LiftKind::peleg};

std::string_view to_string(LiftKind kind);
/// Accepts "kleisli", "parikh", "peleg".
LiftKind parse_lift_kind(std::string_view text);

inline constexpr std::uint64_t kDefaultEnumerationCap = 1'000'000;

/// P(Y) -> P(Z): B goes to the union of every subset some b in B relates to.
Relation kleisli_lift(const Multirelation& beta);

/// P(Y) -> P(Z): (B, A) iff every b in B relates to A.
Relation parikh_lift(const Multirelation& beta);

/// P(Y) -> P(Z): (B, A) iff B lies in the domain of beta and some choice of one
/// related subset per b in B has union A.
///
/// Computed bottom-up over B: the reachable unions of B+{b} are the reachable
/// unions of B each joined with every subset of row b. The cost is
/// O(2^|Y| * |P(Z)| * max row size) and never enumerates choice functions.
Relation peleg_lift(const Multirelation& beta);

/// The same lifting assembled as the join of u_{dom beta} f_o over every
/// choice function f of beta. Exponential; kept as a cross-check.
Relation peleg_lift_by_choices(const Multirelation& beta,
                               std::uint64_t cap = kDefaultEnumerationCap);

Relation lift(LiftKind kind, const Multirelation& beta);

/// Every pfn f below beta with the same domain, in lexicographic order of the
/// per-row choice (first nonempty row varies slowest, subsets ascend by mask).
/// Throws enumeration_cap_exceeded when the product of row sizes exceeds cap.
std::vector<Multirelation> enumerate_pfns_c(const Multirelation& beta,
                                            std::uint64_t cap = kDefaultEnumerationCap);

/// alpha composed with lift(kind, beta). Throws carrier_mismatch.
Multirelation compose_mr(LiftKind kind, const Multirelation& alpha, const Multirelation& beta);

bool is_up_closed(const Multirelation& alpha);
Multirelation up_closure(const Multirelation& alpha);

bool is_union_closed(const Multirelation& gamma);
Multirelation union_closure(const Multirelation& gamma);

}  // namespace multirel
