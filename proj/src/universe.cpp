#include "multirel/universe.hpp"

#include "multirel/error.hpp"

namespace multirel {

std::uint64_t multirelation_bits(const Carrier& src, const Carrier& base) {
  return src.size() * (std::uint64_t{1} << base.size());
}

Multirelation multirelation_at(const Carrier& src, const Carrier& base, std::uint64_t index) {
  const std::uint64_t bits = multirelation_bits(src, base);
  if (bits > 64) {
    throw Error(ErrorCode::universe_too_large, "multirelation index space exceeds 64 bits");
  }
  Multirelation out(src, base);
  const std::size_t width = out.cols();
  const Word row_bits = width == 64 ? ~Word{0} : (Word{1} << width) - 1;
  for (std::size_t i = 0; i < out.rows(); ++i) {
    out.row(i)[0] = (index >> (i * width)) & row_bits;
  }
  return out;
}

Multirelation random_multirelation(const Carrier& src, const Carrier& base, std::mt19937_64& rng) {
  Multirelation out(src, base);
  const std::size_t width = out.cols();
  const Word row_bits = width == 64 ? ~Word{0} : (Word{1} << width) - 1;
  for (std::size_t i = 0; i < out.rows(); ++i) out.row(i)[0] = rng() & row_bits;
  return out;
}

std::vector<Relation> all_subidentities(const Carrier& c) {
  std::vector<Relation> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << c.size()); ++mask) {
    Relation v(c, c);
    for (std::size_t i = 0; i < c.size(); ++i) {
      if ((mask >> i) & 1U) v.set(i, i);
    }
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<Relation> all_relations(const Carrier& src, const Carrier& tgt) {
  const std::size_t bits = src.size() * tgt.size();
  if (bits > 20) throw Error(ErrorCode::universe_too_large, "too many relations to list");
  std::vector<Relation> out;
  out.reserve(std::size_t{1} << bits);
  for (std::size_t index = 0; index < (std::size_t{1} << bits); ++index) {
    Relation r(src, tgt);
    for (std::size_t p = 0; p < bits; ++p) {
      if ((index >> p) & 1U) r.set(p / tgt.size(), p % tgt.size());
    }
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<Multirelation> all_multirelations(const Carrier& src, const Carrier& base) {
  const std::uint64_t bits = multirelation_bits(src, base);
  if (bits > 20) throw Error(ErrorCode::universe_too_large, "too many multirelations to list");
  std::vector<Multirelation> out;
  out.reserve(std::size_t{1} << bits);
  for (std::uint64_t index = 0; index < (std::uint64_t{1} << bits); ++index) {
    out.push_back(multirelation_at(src, base, index));
  }
  return out;
}

}  // namespace multirel
