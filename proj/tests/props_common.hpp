#pragma once

#include <array>
#include <random>
#include <string>
#include <utility>

#include "multirel/law_engine.hpp"
#include "multirel/powerset.hpp"
#include "multirel/universe.hpp"
#include "properties.hpp"

namespace multirel::props {

inline Relation operator*(const Relation& a, const Relation& b) { return compose(a, b); }
inline Relation operator&(const Relation& a, const Relation& b) { return meet(a, b); }
inline Relation operator|(const Relation& a, const Relation& b) { return join(a, b); }
inline bool operator<=(const Relation& a, const Relation& b) { return includes(a, b); }
inline Relation cv(const Relation& a) { return converse(a); }
inline Relation id(const Carrier& c) { return identity(c); }
inline Relation nabla(const Carrier& a, const Carrier& b) { return universal(a, b); }
inline Relation zero(const Carrier& a, const Carrier& b) { return empty(a, b); }

/// Base carriers of size 1, 2 and 3 with distinct names.
inline const std::array<Carrier, 3>& small() {
  static const std::array<Carrier, 3> cs = {standard_carrier(1, "S1"), standard_carrier(2, "S2"),
                                            standard_carrier(3, "S3")};
  return cs;
}
inline std::array<Carrier, 2> upto2() { return {small()[0], small()[1]}; }

inline std::string show() { return {}; }
template <class First, class... Rest>
std::string show(const First& first, const Rest&... rest) {
  std::string tail = show(rest...);
  return to_string(static_cast<const Relation&>(first)) + (tail.empty() ? "" : " ; " + tail);
}

class Tally {
 public:
  explicit Tally(std::string name) { out_.name = std::move(name); }

  template <class Describe>
  void operator()(bool ok, Describe&& describe) {
    ++out_.checked;
    if (!ok && !out_.failure) out_.failure = describe();
  }

  Outcome done() { return std::move(out_); }

 private:
  Outcome out_;
};

inline std::vector<Multirelation> pfns_of(const Carrier& y, const Carrier& z) {
  std::vector<Multirelation> out;
  for (auto& m : all_multirelations(y, z)) {
    if (is_pfn(m)) out.push_back(std::move(m));
  }
  return out;
}

inline std::vector<Relation> tfns_of(const Carrier& x, const Carrier& y) {
  std::vector<Relation> out;
  for (auto& r : all_relations(x, y)) {
    if (is_tfn(r)) out.push_back(std::move(r));
  }
  return out;
}

inline Relation join_all(const std::vector<Relation>& rs, const Carrier& src, const Carrier& tgt) {
  Relation acc = empty(src, tgt);
  for (const auto& r : rs) acc = join(acc, r);
  return acc;
}

std::span<const Property> relation_properties();
std::span<const Property> powerset_properties();
std::span<const Property> lifting_properties();
std::span<const Property> peleg_properties();
std::span<const Property> engine_properties();

}  // namespace multirel::props
