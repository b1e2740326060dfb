#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "kleinc/poly.hpp"

namespace kleinc {

/// A binary word of length m <= 256.
class BinWord {
 public:
  static constexpr int max_length = 256;

  BinWord() = default;
  explicit BinWord(int m);
  static BinWord parse(std::string_view bits);

  int length() const { return m_; }
  bool get(int i) const { return (w_[static_cast<std::size_t>(i >> 6)] >> (i & 63)) & 1u; }
  void set(int i, bool v = true);
  void flip(int i) { w_[static_cast<std::size_t>(i >> 6)] ^= std::uint64_t{1} << (i & 63); }
  int weight() const;
  bool is_zero() const { return w_ == std::array<std::uint64_t, 4>{}; }
  /// Lowest index of a set bit, or -1.
  int lowest() const;

  BinWord& operator^=(const BinWord& o);
  friend BinWord operator^(BinWord x, const BinWord& y) { return x ^= y; }
  friend bool operator==(const BinWord&, const BinWord&) = default;
  /// Orders by the lowest differing index; a set bit there is larger.
  friend std::strong_ordering operator<=>(const BinWord& x, const BinWord& y);

  std::string str() const;

 private:
  int m_ = 0;
  std::array<std::uint64_t, 4> w_{};
};

/// Standard dot product mod 2.
unsigned dot(const BinWord& x, const BinWord& y);

/// A binary linear code stored as its reduced row-echelon basis.
class BinaryCode {
 public:
  explicit BinaryCode(int m = 0);
  static BinaryCode span(int m, const std::vector<BinWord>& gens);

  int length() const { return m_; }
  int dim() const { return static_cast<int>(rows_.size()); }
  const std::vector<BinWord>& basis() const { return rows_; }

  bool insert(const BinWord& x);
  BinWord reduce(const BinWord& x) const;
  bool contains(const BinWord& x) const { return reduce(x).is_zero(); }

  /// Gray-code walk over all 2^dim codewords (dim <= 32).
  template <class F>
  void for_each_codeword(F&& f) const {
    require_enumerable();
    BinWord w(m_);
    f(static_cast<const BinWord&>(w));
    const std::uint64_t count = std::uint64_t{1} << rows_.size();
    for (std::uint64_t i = 1; i < count; ++i) {
      w ^= rows_[static_cast<std::size_t>(std::countr_zero(i))];
      f(static_cast<const BinWord&>(w));
    }
  }

  friend bool operator==(const BinaryCode&, const BinaryCode&) = default;

 private:
  void require_enumerable() const;

  int m_ = 0;
  std::vector<BinWord> rows_;
  std::vector<int> pivots_;
};

/// W(x,y) = sum A_i x^(m-i) y^i.
IntPoly binary_we(const BinaryCode& c);
int binary_min_weight(const BinaryCode& c);
BinaryCode binary_dual(const BinaryCode& c);
bool is_self_orthogonal(const BinaryCode& c);
bool is_self_dual(const BinaryCode& c);
/// Every codeword has even weight.
bool is_even(const BinaryCode& c);
/// Every codeword has weight divisible by 4.
bool is_doubly_even(const BinaryCode& c);

/// One word of {0,1} per line; blank lines and '#' comments are skipped.
/// A `# length M` header fixes the length for the zero code.
BinaryCode parse_binary_code(std::string_view text);
std::string format_binary_code(const BinaryCode& c);

}  // namespace kleinc
