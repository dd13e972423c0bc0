#include "multirel/liftings.hpp"

#include "multirel/error.hpp"

namespace multirel {

namespace {

Relation checked_powerset_relation(Relation rel) {
  if (!rel.target().is_powerset()) {
    throw Error(ErrorCode::not_multirelation,
                "target '" + rel.target().name() + "' is not a powerset carrier");
  }
  return rel;
}

template <class F>
void for_each_bit(Word bits, F&& f) {
  while (bits) {
    f(static_cast<std::size_t>(std::countr_zero(bits)));
    bits &= bits - 1;
  }
}

}  // namespace

Multirelation::Multirelation(Relation rel) : Relation(checked_powerset_relation(std::move(rel))) {}

Multirelation::Multirelation(const Carrier& src, const Carrier& base)
    : Relation(src, pow_carrier(base)) {}

Multirelation mk_multirelation(const Carrier& src, const Carrier& base,
                               std::initializer_list<std::pair<std::string, std::string>> pairs) {
  return Multirelation(mk_relation(src, pow_carrier(base), pairs));
}

std::string_view to_string(LiftKind kind) {
  switch (kind) {
    case LiftKind::kleisli: return "kleisli";
    case LiftKind::parikh: return "parikh";
    case LiftKind::peleg: return "peleg";
  }
  return "?";
}

LiftKind parse_lift_kind(std::string_view text) {
  for (LiftKind k : kAllLiftKinds) {
    if (to_string(k) == text) return k;
  }
  throw Error(ErrorCode::invalid_argument, "unknown lifting kind '" + std::string(text) + "'");
}

Relation kleisli_lift(const Multirelation& beta) {
  const Carrier from = pow_carrier(beta.source());
  Relation out(from, beta.target());
  // Union of every subset in row b.
  std::vector<Word> row_union(beta.rows(), 0);
  for (std::size_t b = 0; b < beta.rows(); ++b) {
    for_each_bit(beta.family(b), [&](std::size_t c) { row_union[b] |= c; });
  }
  for (std::size_t mask = 0; mask < from.size(); ++mask) {
    Word image = 0;
    for_each_bit(mask, [&](std::size_t b) { image |= row_union[b]; });
    out.set(mask, image);
  }
  return out;
}

Relation parikh_lift(const Multirelation& beta) {
  return right_residual(membership(beta.source()), beta);
}

Relation peleg_lift(const Multirelation& beta) {
  const Carrier from = pow_carrier(beta.source());
  Relation out(from, beta.target());
  // reach[B] = family of unions achievable by one choice per b in B.
  std::vector<Word> reach(from.size(), 0);
  reach[0] = Word{1};  // only the empty union
  for (std::size_t mask = 1; mask < from.size(); ++mask) {
    const auto b = static_cast<std::size_t>(std::countr_zero(mask));
    const Word prev = reach[mask & (mask - 1)];
    Word next = 0;
    for_each_bit(prev, [&](std::size_t u) {
      for_each_bit(beta.family(b), [&](std::size_t c) { next |= Word{1} << (u | c); });
    });
    reach[mask] = next;
  }
  for (std::size_t mask = 0; mask < from.size(); ++mask) out.row(mask)[0] = reach[mask];
  return out;
}

Relation peleg_lift_by_choices(const Multirelation& beta, std::uint64_t cap) {
  const Relation hat = power_subidentity(domain(beta));
  Relation out(pow_carrier(beta.source()), beta.target());
  for (const auto& f : enumerate_pfns_c(beta, cap)) {
    out = join(out, compose(hat, kleisli_lift(f)));
  }
  return out;
}

Relation lift(LiftKind kind, const Multirelation& beta) {
  switch (kind) {
    case LiftKind::kleisli: return kleisli_lift(beta);
    case LiftKind::parikh: return parikh_lift(beta);
    case LiftKind::peleg: return peleg_lift(beta);
  }
  throw Error(ErrorCode::invalid_argument, "unknown lifting kind");
}

std::vector<Multirelation> enumerate_pfns_c(const Multirelation& beta, std::uint64_t cap) {
  std::vector<std::size_t> rows;
  std::vector<std::vector<std::size_t>> choices;
  std::uint64_t total = 1;
  for (std::size_t b = 0; b < beta.rows(); ++b) {
    if (beta.family(b) == 0) continue;
    rows.push_back(b);
    auto& opts = choices.emplace_back();
    for_each_bit(beta.family(b), [&](std::size_t c) { opts.push_back(c); });
    total *= opts.size();
    if (total > cap) {
      throw Error(ErrorCode::enumeration_cap_exceeded,
                  "choice functions exceed cap " + std::to_string(cap));
    }
  }
  std::vector<Multirelation> out;
  out.reserve(static_cast<std::size_t>(total));
  std::vector<std::size_t> pick(rows.size(), 0);
  for (std::uint64_t n = 0; n < total; ++n) {
    Multirelation f(beta.source(), beta.target_base());
    for (std::size_t r = 0; r < rows.size(); ++r) f.set(rows[r], choices[r][pick[r]]);
    out.push_back(std::move(f));
    // Odometer, last row fastest.
    for (std::size_t r = rows.size(); r-- > 0;) {
      if (++pick[r] < choices[r].size()) break;
      pick[r] = 0;
    }
  }
  return out;
}

Multirelation compose_mr(LiftKind kind, const Multirelation& alpha, const Multirelation& beta) {
  if (!(alpha.target_base() == beta.source())) {
    throw Error(ErrorCode::carrier_mismatch,
                "compose_mr: " + alpha.target().name() + " does not match P(" +
                    beta.source().name() + ")");
  }
  return Multirelation(compose(alpha, lift(kind, beta)));
}

bool is_up_closed(const Multirelation& alpha) { return up_closure(alpha) == alpha; }

Multirelation up_closure(const Multirelation& alpha) {
  return Multirelation(compose(alpha, order_relation(alpha.target_base())));
}

namespace {

Word close_under_union(Word family) {
  for (;;) {
    Word next = family;
    for_each_bit(family, [&](std::size_t a) {
      for_each_bit(family, [&](std::size_t b) { next |= Word{1} << (a | b); });
    });
    if (next == family) return family;
    family = next;
  }
}

}  // namespace

bool is_union_closed(const Multirelation& gamma) {
  for (std::size_t i = 0; i < gamma.rows(); ++i) {
    const Word fam = gamma.family(i);
    bool closed = true;
    for_each_bit(fam, [&](std::size_t a) {
      for_each_bit(fam, [&](std::size_t b) {
        if (!((fam >> (a | b)) & 1U)) closed = false;
      });
    });
    if (!closed) return false;
  }
  return true;
}

Multirelation union_closure(const Multirelation& gamma) {
  Multirelation out = gamma;
  for (std::size_t i = 0; i < out.rows(); ++i) out.row(i)[0] = close_under_union(gamma.family(i));
  return out;
}

}  // namespace multirel
