#include "multirel/relation.hpp"

#include <algorithm>

#include "multirel/error.hpp"

namespace multirel {

namespace {

std::size_t words_for(std::size_t cols) { return cols == 0 ? 1 : (cols + kWordBits - 1) / kWordBits; }

void require_same_type(const Relation& a, const Relation& b, std::string_view op) {
  if (!(a.source() == b.source()) || !(a.target() == b.target())) {
    throw Error(ErrorCode::carrier_mismatch,
                std::string(op) + ": " + a.source().name() + "->" + a.target().name() +
                    " vs " + b.source().name() + "->" + b.target().name());
  }
}

void require_composable(const Relation& a, const Relation& b, std::string_view op) {
  if (!(a.target() == b.source())) {
    throw Error(ErrorCode::carrier_mismatch, std::string(op) + ": target " + a.target().name() +
                                                 " does not match source " + b.source().name());
  }
}

// Mask of the valid bits in word w of a row with `cols` columns.
Word tail_mask(std::size_t cols, std::size_t w) {
  const std::size_t lo = w * kWordBits;
  if (cols >= lo + kWordBits) return ~Word{0};
  if (cols <= lo) return 0;
  return (Word{1} << (cols - lo)) - 1;
}

bool row_subset(std::span<const Word> a, std::span<const Word> b) {
  for (std::size_t w = 0; w < a.size(); ++w) {
    if (a[w] & ~b[w]) return false;
  }
  return true;
}

}  // namespace

Relation::Relation(Carrier src, Carrier tgt)
    : src_(std::move(src)),
      tgt_(std::move(tgt)),
      wpr_(words_for(tgt_.size())),
      bits_(src_.size() * wpr_, 0) {}

bool Relation::row_empty(std::size_t i) const noexcept {
  const auto r = row(i);
  return std::all_of(r.begin(), r.end(), [](Word w) { return w == 0; });
}

std::size_t Relation::row_count(std::size_t i) const noexcept {
  std::size_t n = 0;
  for (Word w : row(i)) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

std::size_t Relation::count() const noexcept {
  std::size_t n = 0;
  for (Word w : bits_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

bool Relation::is_empty() const noexcept {
  return std::all_of(bits_.begin(), bits_.end(), [](Word w) { return w == 0; });
}

std::vector<std::pair<std::size_t, std::size_t>> Relation::pairs() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < rows(); ++i) {
    for_each_in_row(i, [&](std::size_t j) { out.emplace_back(i, j); });
  }
  return out;
}

bool operator==(const Relation& lhs, const Relation& rhs) {
  return lhs.bits_ == rhs.bits_ && lhs.src_ == rhs.src_ && lhs.tgt_ == rhs.tgt_;
}

Relation mk_relation(const Carrier& src, const Carrier& tgt,
                     std::span<const std::pair<std::string, std::string>> pairs) {
  Relation out(src, tgt);
  for (const auto& [x, y] : pairs) {
    const auto i = src.index_of(x);
    if (!i) throw Error(ErrorCode::unknown_element, "'" + x + "' is not in " + src.name());
    const auto j = tgt.index_of(y);
    if (!j) throw Error(ErrorCode::unknown_element, "'" + y + "' is not in " + tgt.name());
    out.set(*i, *j);
  }
  return out;
}

Relation mk_relation(const Carrier& src, const Carrier& tgt,
                     std::initializer_list<std::pair<std::string, std::string>> pairs) {
  return mk_relation(src, tgt, std::span(pairs.begin(), pairs.size()));
}

Relation empty(const Carrier& src, const Carrier& tgt) { return Relation(src, tgt); }

Relation universal(const Carrier& src, const Carrier& tgt) {
  Relation out(src, tgt);
  for (std::size_t i = 0; i < out.rows(); ++i) {
    auto r = out.row(i);
    for (std::size_t w = 0; w < r.size(); ++w) r[w] = tail_mask(out.cols(), w);
  }
  return out;
}

Relation identity(const Carrier& carrier) {
  Relation out(carrier, carrier);
  for (std::size_t i = 0; i < carrier.size(); ++i) out.set(i, i);
  return out;
}

Relation compose(const Relation& alpha, const Relation& beta) {
  require_composable(alpha, beta, "compose");
  Relation out(alpha.source(), beta.target());
  for (std::size_t i = 0; i < alpha.rows(); ++i) {
    auto dst = out.row(i);
    alpha.for_each_in_row(i, [&](std::size_t k) {
      const auto src = beta.row(k);
      for (std::size_t w = 0; w < dst.size(); ++w) dst[w] |= src[w];
    });
  }
  return out;
}

Relation converse(const Relation& alpha) {
  Relation out(alpha.target(), alpha.source());
  for (std::size_t i = 0; i < alpha.rows(); ++i) {
    alpha.for_each_in_row(i, [&](std::size_t j) { out.set(j, i); });
  }
  return out;
}

Relation meet(const Relation& alpha, const Relation& beta) {
  require_same_type(alpha, beta, "meet");
  Relation out(alpha.source(), alpha.target());
  for (std::size_t i = 0; i < out.rows(); ++i) {
    auto d = out.row(i);
    auto a = alpha.row(i);
    auto b = beta.row(i);
    for (std::size_t w = 0; w < d.size(); ++w) d[w] = a[w] & b[w];
  }
  return out;
}

Relation join(const Relation& alpha, const Relation& beta) {
  require_same_type(alpha, beta, "join");
  Relation out(alpha.source(), alpha.target());
  for (std::size_t i = 0; i < out.rows(); ++i) {
    auto d = out.row(i);
    auto a = alpha.row(i);
    auto b = beta.row(i);
    for (std::size_t w = 0; w < d.size(); ++w) d[w] = a[w] | b[w];
  }
  return out;
}

bool includes(const Relation& alpha, const Relation& beta) {
  require_same_type(alpha, beta, "includes");
  for (std::size_t i = 0; i < alpha.rows(); ++i) {
    if (!row_subset(alpha.row(i), beta.row(i))) return false;
  }
  return true;
}

Relation left_residual(const Relation& alpha, const Relation& beta) {
  require_composable(alpha, beta, "left_residual");
  // Column z of beta is a set of y's; it must lie inside row x of alpha.
  const Relation columns = converse(beta);
  Relation out(alpha.source(), beta.target());
  for (std::size_t x = 0; x < alpha.rows(); ++x) {
    for (std::size_t z = 0; z < columns.rows(); ++z) {
      if (row_subset(columns.row(z), alpha.row(x))) out.set(x, z);
    }
  }
  return out;
}

Relation right_residual(const Relation& alpha, const Relation& beta) {
  require_composable(alpha, beta, "right_residual");
  // Row x of alpha must lie inside column z of beta.
  const Relation columns = converse(beta);
  Relation out(alpha.source(), beta.target());
  for (std::size_t x = 0; x < alpha.rows(); ++x) {
    for (std::size_t z = 0; z < columns.rows(); ++z) {
      if (row_subset(alpha.row(x), columns.row(z))) out.set(x, z);
    }
  }
  return out;
}

Relation domain(const Relation& alpha) {
  Relation out(alpha.source(), alpha.source());
  for (std::size_t i = 0; i < alpha.rows(); ++i) {
    if (!alpha.row_empty(i)) out.set(i, i);
  }
  return out;
}

bool is_univalent(const Relation& alpha) {
  for (std::size_t i = 0; i < alpha.rows(); ++i) {
    if (alpha.row_count(i) > 1) return false;
  }
  return true;
}

bool is_total(const Relation& alpha) {
  for (std::size_t i = 0; i < alpha.rows(); ++i) {
    if (alpha.row_empty(i)) return false;
  }
  return true;
}

bool is_tfn(const Relation& alpha) { return is_univalent(alpha) && is_total(alpha); }

bool is_subidentity(const Relation& alpha) {
  if (!(alpha.source() == alpha.target())) return false;
  for (std::size_t i = 0; i < alpha.rows(); ++i) {
    bool ok = true;
    alpha.for_each_in_row(i, [&](std::size_t j) { ok = ok && j == i; });
    if (!ok) return false;
  }
  return true;
}

std::string to_string(const Relation& alpha) {
  std::string out = "{";
  bool first = true;
  for (const auto& [i, j] : alpha.pairs()) {
    if (!first) out += ',';
    out += '(';
    out += alpha.source().label(i);
    out += ',';
    out += alpha.target().label(j);
    out += ')';
    first = false;
  }
  out += '}';
  return out;
}

}  // namespace multirel
