#pragma once

#include <cstdint>
#include <random>

#include "multirel/liftings.hpp"

namespace multirel {

/// Number of matrix bits of a multirelation src -> P(base).
std::uint64_t multirelation_bits(const Carrier& src, const Carrier& base);

/// The multirelation whose matrix, read row-major with columns in mask order,
/// has bit p set iff bit p of index is set. Requires multirelation_bits <= 64.
Multirelation multirelation_at(const Carrier& src, const Carrier& base, std::uint64_t index);

/// Uniform draw over all matrices src -> P(base).
Multirelation random_multirelation(const Carrier& src, const Carrier& base, std::mt19937_64& rng);

/// Every subidentity on c, in mask order of the kept elements.
std::vector<Relation> all_subidentities(const Carrier& c);

/// Every relation src -> tgt (src.size() * tgt.size() <= 20).
std::vector<Relation> all_relations(const Carrier& src, const Carrier& tgt);

/// Every multirelation src -> P(base) (multirelation_bits <= 20).
std::vector<Multirelation> all_multirelations(const Carrier& src, const Carrier& base);

}  // namespace multirel
