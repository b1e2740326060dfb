#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace kleinc {

/// A symbol of the Klein four-group K = Z2 x Z2, stored as the bit pair (p, q):
/// 0 = (0,0), a = (1,0), b = (0,1), c = (1,1). Addition is XOR of the pairs.
enum class Symbol : std::uint8_t { zero = 0, a = 1, b = 2, c = 3 };

constexpr Symbol operator+(Symbol x, Symbol y) {
  return static_cast<Symbol>(static_cast<unsigned>(x) ^ static_cast<unsigned>(y));
}

constexpr unsigned p_bit(Symbol s) { return static_cast<unsigned>(s) & 1u; }
constexpr unsigned q_bit(Symbol s) { return static_cast<unsigned>(s) >> 1; }

/// The symmetric form on K: 1 iff both symbols are nonzero and distinct.
/// In bit-pair coordinates this is the symplectic form p_x q_y + q_x p_y.
constexpr unsigned dot(Symbol x, Symbol y) {
  return (p_bit(x) & q_bit(y)) ^ (q_bit(x) & p_bit(y));
}

char to_char(Symbol s);
Symbol symbol_from_char(char ch);  // throws std::invalid_argument

/// A word of K^n, n <= 64, held as two bit planes: bit i of `p`/`q` is the
/// p/q bit of position i (position 0 is the leftmost symbol).
class KWord {
 public:
  static constexpr int max_length = 64;

  KWord() = default;
  explicit KWord(int n) : n_(n) { check_length(n); }
  KWord(int n, std::uint64_t p, std::uint64_t q) : n_(n), p_(p), q_(q) {
    check_length(n);
    const auto m = mask();
    p_ &= m;
    q_ &= m;
  }

  /// Parses a string over {0,a,b,c}.
  static KWord parse(std::string_view text);
  static KWord constant(int n, Symbol s);
  /// The word with symbol `s` at position `pos` and zeros elsewhere.
  static KWord unit(int n, int pos, Symbol s);

  int length() const { return n_; }
  std::uint64_t p() const { return p_; }
  std::uint64_t q() const { return q_; }
  std::uint64_t support() const { return p_ | q_; }
  std::uint64_t mask() const { return n_ == 64 ? ~0ull : ((1ull << n_) - 1); }

  int weight() const { return std::popcount(p_ | q_); }
  bool is_zero() const { return (p_ | q_) == 0; }

  Symbol at(int pos) const {
    return static_cast<Symbol>(((p_ >> pos) & 1u) | (((q_ >> pos) & 1u) << 1));
  }
  void set(int pos, Symbol s) {
    const std::uint64_t bit = 1ull << pos;
    p_ = (p_ & ~bit) | (p_bit(s) ? bit : 0);
    q_ = (q_ & ~bit) | (q_bit(s) ? bit : 0);
  }

  /// Coordinate bit c of the 2n-bit GF(2) vector: c = 2*pos + plane.
  unsigned coord(int c) const {
    return static_cast<unsigned>((((c & 1) ? q_ : p_) >> (c >> 1)) & 1u);
  }
  /// Smallest coordinate index with a set bit, or -1 for the zero word.
  int leading_coord() const {
    const std::uint64_t s = p_ | q_;
    if (s == 0) return -1;
    const int pos = std::countr_zero(s);
    return 2 * pos + (((p_ >> pos) & 1u) ? 0 : 1);
  }

  KWord& operator^=(const KWord& o) {
    p_ ^= o.p_;
    q_ ^= o.q_;
    return *this;
  }
  KWord& operator+=(const KWord& o) { return *this ^= o; }
  friend KWord operator^(KWord x, const KWord& y) { return x ^= y; }
  friend KWord operator+(KWord x, const KWord& y) { return x ^= y; }

  friend bool operator==(const KWord&, const KWord&) = default;
  /// Position-major comparison on the 2n-bit vector: the word whose first
  /// differing coordinate is 0 compares less.
  friend std::strong_ordering operator<=>(const KWord& x, const KWord& y);

  std::string str() const;

  /// Concatenation (this word followed by `tail`).
  KWord concat(const KWord& tail) const;
  /// Positions [from, from+len).
  KWord sub(int from, int len) const;

 private:
  static void check_length(int n) {
    if (n < 0 || n > max_length) throw std::invalid_argument("KWord length must be in [0, 64]");
  }

  int n_ = 0;
  std::uint64_t p_ = 0;
  std::uint64_t q_ = 0;
};

/// Scalar product sum_i dot(x_i, y_i) mod 2.
unsigned inner(const KWord& x, const KWord& y);

/// Lexicographic order with 0 < a < b < c and the leftmost position most
/// significant (the order used for lexicodes and orbit representatives).
/// This differs from operator<=>, which follows the row-echelon coordinates.
std::strong_ordering lex_compare(const KWord& x, const KWord& y);
inline bool lex_less(const KWord& x, const KWord& y) { return lex_compare(x, y) < 0; }

/// Hamming distance wt(x - y).
inline int distance(const KWord& x, const KWord& y) { return (x ^ y).weight(); }

struct KWordHash {
  std::size_t operator()(const KWord& w) const noexcept {
    std::uint64_t h = w.p() * 0x9E3779B97F4A7C15ull ^ (w.q() + 0x632BE59BD9B4E019ull + (w.p() << 6));
    h ^= static_cast<std::uint64_t>(w.length()) << 58;
    h ^= h >> 31;
    return static_cast<std::size_t>(h * 0xBF58476D1CE4E5B9ull);
  }
};

}  // namespace kleinc
