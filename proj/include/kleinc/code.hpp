#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "kleinc/word.hpp"

namespace kleinc {

/// A linear code over K of length n: a GF(2)-subspace of the 2n-bit vectors,
/// stored as its reduced row-echelon basis. Coordinates are ordered
/// position-major with the p bit before the q bit, so two generator sets of
/// the same code always produce identical bases.
class KCode {
 public:
  /// Refuse full codeword enumeration above this many GF(2) dimensions
  /// unless a caller opts in explicitly.
  static constexpr int enumeration_limit = 24;

  KCode() = default;
  /// The zero code of length n.
  explicit KCode(int n);

  static KCode span(int n, std::span<const KWord> generators);
  /// Span of a nonempty generator list; the length is taken from the words.
  static KCode span(std::span<const KWord> generators);
  static KCode span(std::initializer_list<KWord> generators) {
    return span(std::span<const KWord>(generators.begin(), generators.size()));
  }
  static KCode full(int n);

  int length() const { return n_; }
  /// GF(2) dimension; the K-dimension is dim2()/2.
  int dim2() const { return static_cast<int>(rows_.size()); }
  /// "k" as a half integer, e.g. "5/2".
  std::string dimension_str() const;
  const std::vector<KWord>& basis() const { return rows_; }
  /// Pivot coordinate (2*pos + plane) of each basis row.
  const std::vector<int>& pivots() const { return pivots_; }

  bool contains(const KWord& x) const;
  /// The unique member of x + C whose pivot coordinates are all zero.
  KWord reduce(const KWord& x) const;

  /// Visits every codeword once (Gray-code order, starting with 0).
  template <class F>
  void for_each_codeword(F&& f) const {
    require_enumerable(true);
    KWord w(n_);
    f(static_cast<const KWord&>(w));
    const std::uint64_t count = std::uint64_t{1} << rows_.size();
    for (std::uint64_t i = 1; i < count; ++i) {
      w ^= rows_[static_cast<std::size_t>(std::countr_zero(i))];
      f(static_cast<const KWord&>(w));
    }
  }
  std::vector<KWord> codewords() const;

  /// Adds a generator; returns false when it was already in the code.
  bool insert(const KWord& x);

  friend bool operator==(const KCode&, const KCode&) = default;
  friend std::strong_ordering operator<=>(const KCode& x, const KCode& y);

  /// Compact byte string identifying the code (length + basis).
  std::string key() const;

  /// Throws above 2^24 words (or 2^62 with `allow_large`).
  void require_enumerable(bool allow_large = false) const;

 private:
  int n_ = 0;
  std::vector<KWord> rows_;
  std::vector<int> pivots_;
};

struct KCodeHash {
  std::size_t operator()(const KCode& c) const noexcept;
};

KCode dual(const KCode& c);
/// The even-weight codewords. They always form a subcode of a
/// self-orthogonal code; for other codes std::domain_error is thrown when
/// they do not.
KCode even_subcode(const KCode& c);
KCode direct_sum(const KCode& c, const KCode& d);
/// Span of the union.
KCode code_sum(const KCode& c, const KCode& d);

/// Minimum nonzero weight by full enumeration. Throws for the zero code and
/// for codes above the enumeration limit unless `allow_large` is set.
int min_weight(const KCode& c, bool allow_large = false);

bool is_subcode(const KCode& sub, const KCode& c);
bool is_self_orthogonal(const KCode& c);
bool is_self_dual(const KCode& c);
bool is_even(const KCode& c);

/// Codewords of c that vanish at `pos`, with that position removed.
KCode shorten(const KCode& c, int pos);
/// Restriction of c to the positions not in `removed` (bit mask).
KCode puncture(const KCode& c, std::uint64_t removed);

/// Codewords whose symbol at `pos` lies in {0, x}, with `pos` deleted. For an
/// even self-dual code this is the child attached to the glue class of x.
KCode section(const KCode& c, int pos, Symbol x);

/// Repeatedly splits off weight-1 codewords of a self-orthogonal code:
/// returns the code with all gamma_1 factors removed and their count.
struct SplitResult {
  KCode reduced;
  int gamma_count = 0;
};
SplitResult split_weight_one(const KCode& c);

}  // namespace kleinc
