#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "multirel/carrier.hpp"

namespace multirel {

using Word = std::uint64_t;
inline constexpr std::size_t kWordBits = 64;

/// Boolean matrix between two carriers, rows packed into 64-bit words.
///
/// Bits beyond the last column of each row are always zero, so rows can be
/// compared and counted word by word.
class Relation {
 public:
  /// The empty relation src -> tgt.
  Relation(Carrier src, Carrier tgt);

  const Carrier& source() const noexcept { return src_; }
  const Carrier& target() const noexcept { return tgt_; }
  std::size_t rows() const noexcept { return src_.size(); }
  std::size_t cols() const noexcept { return tgt_.size(); }
  std::size_t words_per_row() const noexcept { return wpr_; }

  bool test(std::size_t i, std::size_t j) const noexcept {
    return (bits_[i * wpr_ + j / kWordBits] >> (j % kWordBits)) & 1U;
  }
  void set(std::size_t i, std::size_t j, bool value = true) noexcept {
    Word& w = bits_[i * wpr_ + j / kWordBits];
    const Word m = Word{1} << (j % kWordBits);
    w = value ? (w | m) : (w & ~m);
  }

  std::span<const Word> row(std::size_t i) const noexcept {
    return {bits_.data() + i * wpr_, wpr_};
  }
  std::span<Word> row(std::size_t i) noexcept { return {bits_.data() + i * wpr_, wpr_}; }

  /// First word of row i; the whole row when cols() <= 64.
  Word row_word(std::size_t i) const noexcept { return bits_[i * wpr_]; }

  bool row_empty(std::size_t i) const noexcept;
  std::size_t row_count(std::size_t i) const noexcept;
  std::size_t count() const noexcept;
  bool is_empty() const noexcept;

  /// Calls f(j) for every column set in row i, ascending.
  template <class F>
  void for_each_in_row(std::size_t i, F&& f) const {
    for (std::size_t w = 0; w < wpr_; ++w) {
      Word bits = bits_[i * wpr_ + w];
      while (bits) {
        const auto b = static_cast<std::size_t>(std::countr_zero(bits));
        f(w * kWordBits + b);
        bits &= bits - 1;
      }
    }
  }

  /// Set entries sorted by row then column.
  std::vector<std::pair<std::size_t, std::size_t>> pairs() const;

  friend bool operator==(const Relation& lhs, const Relation& rhs);

 private:
  Carrier src_;
  Carrier tgt_;
  std::size_t wpr_;
  std::vector<Word> bits_;
};

/// Relation holding exactly at the listed label pairs. Throws unknown_element.
Relation mk_relation(const Carrier& src, const Carrier& tgt,
                     std::span<const std::pair<std::string, std::string>> pairs);
Relation mk_relation(const Carrier& src, const Carrier& tgt,
                     std::initializer_list<std::pair<std::string, std::string>> pairs);

Relation empty(const Carrier& src, const Carrier& tgt);
Relation universal(const Carrier& src, const Carrier& tgt);
Relation identity(const Carrier& carrier);

/// Relational composition alpha;beta. Throws carrier_mismatch.
Relation compose(const Relation& alpha, const Relation& beta);
Relation converse(const Relation& alpha);

Relation meet(const Relation& alpha, const Relation& beta);
Relation join(const Relation& alpha, const Relation& beta);
/// alpha is contained in beta. Note the argument order: includes(a, b) is a <= b.
bool includes(const Relation& alpha, const Relation& beta);

/// (x,z) iff every y with (y,z) in beta has (x,y) in alpha.
Relation left_residual(const Relation& alpha, const Relation& beta);
/// (x,z) iff every y with (x,y) in alpha has (y,z) in beta.
Relation right_residual(const Relation& alpha, const Relation& beta);

/// Subidentity on the source picking the rows that are nonempty.
Relation domain(const Relation& alpha);

bool is_univalent(const Relation& alpha);
bool is_total(const Relation& alpha);
inline bool is_pfn(const Relation& alpha) { return is_univalent(alpha); }
bool is_tfn(const Relation& alpha);
bool is_subidentity(const Relation& alpha);

/// "{(a,{b,c}),(b,{})}"; pairs ordered by row then column.
std::string to_string(const Relation& alpha);

}  // namespace multirel
