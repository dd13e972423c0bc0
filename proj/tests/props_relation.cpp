// Relation-calculus invariants, checked over every relation between carriers
// of size 1 and 2.
#include <vector>

#include "props_common.hpp"

namespace multirel::props {

namespace {

template <class F>
void each2(F&& f) {
  for (const auto& x : upto2())
    for (const auto& y : upto2()) f(x, y);
}

template <class F>
void each3(F&& f) {
  for (const auto& x : upto2())
    for (const auto& y : upto2())
      for (const auto& z : upto2()) f(x, y, z);
}

template <class F>
void each4(F&& f) {
  for (const auto& x : upto2())
    for (const auto& y : upto2())
      for (const auto& z : upto2())
        for (const auto& w : upto2()) f(x, y, z, w);
}

Outcome compose_associative() {
  Tally t("compose-associative");
  each4([&](const Carrier& x, const Carrier& y, const Carrier& z, const Carrier& w) {
    const auto as = all_relations(x, y), bs = all_relations(y, z), cs = all_relations(z, w);
    for (const auto& a : as)
      for (const auto& b : bs)
        for (const auto& c : cs) t((a * b) * c == a * (b * c), [&] { return show(a, b, c); });
  });
  return t.done();
}

Outcome converse_laws() {
  Tally t("converse-involution-antidistributes");
  each3([&](const Carrier& x, const Carrier& y, const Carrier& z) {
    const auto bs = all_relations(y, z);
    for (const auto& a : all_relations(x, y)) {
      t(cv(cv(a)) == a, [&] { return show(a); });
      for (const auto& b : bs) t(cv(a * b) == cv(b) * cv(a), [&] { return show(a, b); });
    }
  });
  return t.done();
}

Outcome residual_adjunctions() {
  Tally t("residual-adjunctions");
  each3([&](const Carrier& x, const Carrier& y, const Carrier& z) {
    const auto as = all_relations(x, y), bs = all_relations(y, z), ds = all_relations(x, z);
    for (const auto& a : as)
      for (const auto& b : bs) {
        const Relation l = left_residual(a, b), r = right_residual(a, b);
        for (const auto& d : ds) {
          t((d <= l) == (d * cv(b) <= a), [&] { return "left " + show(a, b, d); });
          t((d <= r) == (cv(a) * d <= b), [&] { return "right " + show(a, b, d); });
        }
      }
  });
  return t.done();
}

Outcome residual_conversion() {
  Tally t("residuals-related-by-conversion");
  each3([&](const Carrier& x, const Carrier& y, const Carrier& z) {
    const auto bs = all_relations(y, z);
    for (const auto& a : all_relations(x, y))
      for (const auto& b : bs)
        t(left_residual(a, b) == cv(right_residual(cv(b), cv(a))), [&] { return show(a, b); });
  });
  return t.done();
}

Outcome dedekind() {
  Tally t("dedekind-formulas");
  each3([&](const Carrier& x, const Carrier& y, const Carrier& z) {
    const auto bs = all_relations(y, z), gs = all_relations(x, z);
    for (const auto& a : all_relations(x, y))
      for (const auto& b : bs)
        for (const auto& g : gs) {
          const Relation lhs = (a * b) & g;
          t(lhs <= a * (b & (cv(a) * g)), [&] { return "DF " + show(a, b, g); });
          t(lhs <= (a & (g * cv(b))) * (b & (cv(a) * g)), [&] { return "DF* " + show(a, b, g); });
        }
  });
  return t.done();
}

Outcome nabla_domain_identity() {
  Tally t("nabla-meet-identity");
  each3([&](const Carrier& x, const Carrier& y, const Carrier& z) {
    for (const auto& a : all_relations(x, y)) {
      t(nabla(z, y) * ((nabla(y, x) * a) & id(y)) == nabla(z, x) * a, [&] { return show(a); });
    }
  });
  return t.done();
}

Outcome lhd_basic() {
  Tally t("residual-laws");
  each4([&](const Carrier& x, const Carrier& y, const Carrier& z, const Carrier& w) {
    const auto as = all_relations(x, y), bs = all_relations(y, z), gs = all_relations(z, w);
    for (const auto& a : as)
      for (const auto& b : bs) {
        const Relation ar = right_residual(a, b), al = left_residual(a, b);
        if (w == small()[0]) {
          // (a) monotonicity, (c) join distribution, (d) meet distribution
          for (const auto& a2 : as) {
            if (a2 <= a) t(ar <= right_residual(a2, b), [&] { return "monotone " + show(a, a2, b); });
            if (a <= a2) t(al <= left_residual(a2, b), [&] { return "monotone " + show(a, a2, b); });
            t(right_residual(a | a2, b) == (ar & right_residual(a2, b)),
              [&] { return "join " + show(a, a2, b); });
            t(left_residual(a & a2, b) == (al & left_residual(a2, b)),
              [&] { return "meet " + show(a, a2, b); });
          }
          for (const auto& b2 : bs) {
            if (b <= b2) t(ar <= right_residual(a, b2), [&] { return "monotone " + show(a, b, b2); });
            if (b2 <= b) t(al <= left_residual(a, b2), [&] { return "monotone " + show(a, b, b2); });
            t(left_residual(a, b | b2) == (al & left_residual(a, b2)),
              [&] { return "join " + show(a, b, b2); });
            t(right_residual(a, b & b2) == (ar & right_residual(a, b2)),
              [&] { return "meet " + show(a, b, b2); });
          }
          // (e) tfn absorption
          if (is_tfn(a)) t(ar == a * b, [&] { return "tfn " + show(a, b); });
          if (is_tfn(cv(b))) t(al == a * b, [&] { return "tfn " + show(a, b); });
        }
        for (const auto& g : gs) {
          t(right_residual(a * b, g) == right_residual(a, right_residual(b, g)),
            [&] { return "currying " + show(a, b, g); });
          t(left_residual(a, b * g) == left_residual(al, g),
            [&] { return "currying " + show(a, b, g); });
          const Relation f1l = a * left_residual(b, g), f1r = left_residual(a * b, g);
          const Relation f2l = ar * g, f2r = right_residual(a, b * g);
          t(f1l <= f1r, [&] { return "mixed " + show(a, b, g); });
          t(f2l <= f2r, [&] { return "mixed " + show(a, b, g); });
          if (is_tfn(a)) t(f1l == f1r, [&] { return "mixed tfn " + show(a, b, g); });
          if (is_tfn(cv(g))) t(f2l == f2r, [&] { return "mixed tfn " + show(a, b, g); });
          t(left_residual(ar, g) == right_residual(a, left_residual(b, g)),
            [&] { return "exchange " + show(a, b, g); });
        }
      }
  });
  return t.done();
}

Outcome domain_basic() {
  Tally t("domain-laws");
  each3([&](const Carrier& x, const Carrier& y, const Carrier& z) {
    const auto as = all_relations(x, y), bs = all_relations(y, z);
    const auto vs = all_subidentities(x);
    for (const auto& a : as) {
      const Relation da = domain(a);
      t(a == da * a, [&] { return "restriction " + show(a); });
      t(nabla(x, x) * da == nabla(x, y) * cv(a), [&] { return "nabla " + show(a); });
      t(da == ((a * cv(a)) & id(x)), [&] { return "definition " + show(a); });
      for (const auto& v : vs) t(domain(v * a) == v * da, [&] { return "subidentity " + show(a, v); });
      if (z == small()[0]) {
        for (const auto& a2 : as)
          t(domain(a & a2) == ((a * cv(a2)) & id(x)), [&] { return "meet " + show(a, a2); });
      }
      for (const auto& b : bs) {
        const Relation dab = domain(a * b);
        t(dab <= da && dab == domain(a * domain(b)), [&] { return "composite " + show(a, b); });
        if (is_total(b)) t(dab == da, [&] { return "total " + show(a, b); });
      }
    }
  });
  return t.done();
}

Outcome pfn_basic() {
  Tally t("pfn-laws");
  each2([&](const Carrier& x, const Carrier& y) {
    const auto rs = all_relations(x, y);
    const auto vs = all_subidentities(y);
    for (const auto& b : rs) {
      if (!is_pfn(b)) continue;
      for (const auto& a : rs) {
        if (!(a <= b)) continue;
        if (domain(a) == domain(b)) t(a == b, [&] { return "equal domain " + show(a, b); });
        t(a == domain(a) * b, [&] { return "restriction " + show(a, b); });
      }
      for (const auto& v : vs) {
        t(b * v == domain(b * v) * b, [&] { return "subidentity " + show(b, v); });
        t((b == b * v) == (domain(cv(b)) <= v), [&] { return "image " + show(b, v); });
      }
    }
  });
  return t.done();
}

Outcome nabla_basic() {
  Tally t("subidentity-nabla-laws");
  each2([&](const Carrier& x, const Carrier& y) {
    const auto vs = all_subidentities(y);
    for (const auto& v : vs) {
      for (const auto& a : all_relations(x, y))
        t((a & (nabla(x, y) * v)) == a * v, [&] { return "meet " + show(a, v); });
      for (const auto& v2 : vs) {
        const Relation n = nabla(y, y) * v, n2 = nabla(y, y) * v2;
        t((v <= v2) == (n <= n2), [&] { return "order " + show(v, v2); });
        t((v == v2) == (n == n2), [&] { return "equality " + show(v, v2); });
      }
    }
  });
  return t.done();
}

Outcome function_predicates() {
  Tally t("pfn-tfn-definitions");
  each2([&](const Carrier& x, const Carrier& y) {
    for (const auto& a : all_relations(x, y)) {
      const bool univalent = cv(a) * a <= id(y);
      const bool total = id(x) <= a * cv(a);
      t(is_pfn(a) == univalent && is_tfn(a) == (univalent && total) && is_total(a) == total,
        [&] { return show(a); });
    }
  });
  return t.done();
}

constexpr Property kRelationProperties[] = {
    {"relation", "compose-associative", compose_associative},
    {"relation", "converse-involution-antidistributes", converse_laws},
    {"relation", "residual-adjunctions", residual_adjunctions},
    {"relation", "residuals-related-by-conversion", residual_conversion},
    {"relation", "dedekind-formulas", dedekind},
    {"relation", "nabla-meet-identity", nabla_domain_identity},
    {"relation", "residual-laws", lhd_basic},
    {"relation", "domain-laws", domain_basic},
    {"relation", "pfn-laws", pfn_basic},
    {"relation", "subidentity-nabla-laws", nabla_basic},
    {"relation", "pfn-tfn-definitions", function_predicates},
};

}  // namespace

std::span<const Property> relation_properties() { return kRelationProperties; }

}  // namespace multirel::props
