#include "multirel/powerset.hpp"

#include "multirel/error.hpp"

namespace multirel {

namespace {

// Carriers that can appear as a powerset base while keeping a subset in one word.
void require_maskable(const Carrier& c) {
  if (c.size() > kWordBits) {
    throw Error(ErrorCode::carrier_too_large,
                "carrier '" + c.name() + "' is too large for subset masks");
  }
}

}  // namespace

Carrier pow_carrier(const Carrier& base, std::size_t cap) {
  if (base.size() > cap || base.size() >= kWordBits) {
    throw Error(ErrorCode::carrier_too_large,
                "powerset of '" + base.name() + "' (size " + std::to_string(base.size()) +
                    ") exceeds cap " + std::to_string(cap));
  }
  return detail_powerset_of(base);
}

Relation membership(const Carrier& y) {
  Relation out(pow_carrier(y), y);
  for (std::size_t mask = 0; mask < out.rows(); ++mask) out.row(mask)[0] = mask;
  return out;
}

Relation power_transpose(const Relation& alpha) {
  require_maskable(alpha.target());
  Relation out(alpha.source(), pow_carrier(alpha.target()));
  for (std::size_t i = 0; i < alpha.rows(); ++i) out.set(i, row_mask(alpha, i));
  return out;
}

Relation pow_functor(const Relation& alpha) {
  require_maskable(alpha.target());
  const Carrier from = pow_carrier(alpha.source());
  Relation out(from, pow_carrier(alpha.target()));
  for (std::size_t mask = 0; mask < from.size(); ++mask) {
    Word image = 0;
    for (std::size_t a = 0; a < alpha.rows(); ++a) {
      if ((mask >> a) & 1U) image |= row_mask(alpha, a);
    }
    out.set(mask, image);
  }
  return out;
}

Relation singleton_map(const Carrier& x) {
  Relation out(x, pow_carrier(x));
  for (std::size_t i = 0; i < x.size(); ++i) out.set(i, std::size_t{1} << i);
  return out;
}

Relation order_relation(const Carrier& y) {
  const Carrier p = pow_carrier(y);
  Relation out(p, p);
  for (std::size_t a = 0; a < p.size(); ++a) {
    for (std::size_t b = 0; b < p.size(); ++b) {
      if ((a & ~b) == 0) out.set(a, b);
    }
  }
  return out;
}

Relation power_subidentity(const Relation& v) {
  if (!is_subidentity(v)) {
    throw Error(ErrorCode::not_subidentity, "power_subidentity: argument is not below id");
  }
  Word kept = 0;
  for (std::size_t i = 0; i < v.rows(); ++i) {
    if (v.test(i, i)) kept |= Word{1} << i;
  }
  const Carrier p = pow_carrier(v.source());
  Relation out(p, p);
  for (std::size_t mask = 0; mask < p.size(); ++mask) {
    if ((mask & ~kept) == 0) out.set(mask, mask);
  }
  return out;
}

}  // namespace multirel
