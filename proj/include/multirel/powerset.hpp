#pragma once

#include <cstddef>

#include "multirel/carrier.hpp"
#include "multirel/relation.hpp"

namespace multirel {

/// Largest base carrier a powerset may be built over: 2^6 = 64 subsets, so a
/// subset family over the powerset fits one machine word.
inline constexpr std::size_t kDefaultPowersetCap = 6;

/// All subsets of base in ascending mask order. Throws carrier_too_large.
Carrier pow_carrier(const Carrier& base, std::size_t cap = kDefaultPowersetCap);

/// Membership P(Y) -> Y: (B, y) iff y in B.
Relation membership(const Carrier& y);

/// Power transpose X -> P(Y): each x goes to its row image as one subset.
Relation power_transpose(const Relation& alpha);

/// Existential image P(X) -> P(Y) of alpha.
Relation pow_functor(const Relation& alpha);

/// x |-> {x}.
Relation singleton_map(const Carrier& x);

/// Subset order on P(Y).
Relation order_relation(const Carrier& y);

/// Subidentity on P(Y) keeping the subsets all of whose members v keeps.
/// Throws not_subidentity when v is not below the identity.
Relation power_subidentity(const Relation& v);

/// Bit mask of row i treated as a subset of the target (target size <= 64).
inline Word row_mask(const Relation& alpha, std::size_t i) { return alpha.row_word(i); }

}  // namespace multirel
