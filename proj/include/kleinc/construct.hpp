#pragma once

#include <array>
#include <map>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "kleinc/binary.hpp"
#include "kleinc/code.hpp"
#include "kleinc/enumerators.hpp"
#include "kleinc/group.hpp"

namespace kleinc {

enum class Construction { A, B };

/// Blockwise 0 -> 0000, a -> 1100, b -> 1010, c -> 0110.
BinWord hat(const KWord& x);

/// hat(C) + d4^n, where d4 = {0000, 1111} in every block.
BinaryCode rho_a(const KCode& c);
/// hat(C) + (d4^n)_0 together with its translate by the shift vector
/// 1000...1000 (n = 0 mod 4) or 1000...1000 0111 (n = 2 mod 4). Requires n even.
///
/// The outcome depends on the representative of C. The shift is orthogonal
/// to hat(x) iff x is orthogonal to c^n, so rho_B(C) is self-dual iff c^n is
/// in C. The enumerator identities for construction B hold iff every
/// codeword has an even number of c entries, i.e. iff c^n lies in the shadow
/// of C. Both hold at once exactly for even codes; see normalize_for_b.
BinaryCode rho_b(const KCode& c);

enum class BTarget {
  /// Relabel a full-weight codeword to c^n (rho_B becomes self-dual).
  Codeword,
  /// Relabel a full-weight shadow word to c^n (the B identities hold).
  Shadow,
};

/// An equivalent code prepared for construction B: the first full-weight
/// word v of C (or of its shadow) becomes c^n by swapping v_i and c at each
/// position with v_i != c. Requires C self-dual of even length; throws when
/// no such word exists.
struct BNormalized {
  KCode code;
  GroupElement relabel;
};
BNormalized normalize_for_b(const KCode& c, BTarget target);

BinaryCode rho(const KCode& c, Construction mode);

/// Binary weight enumerator of rho_A(C) or rho_B(C) predicted from W_C alone.
IntPoly predicted_we(const WeightEnum& w, Construction mode);

/// A vector of nonzero symbols, one per position.
struct Marking {
  std::vector<Symbol> m;
  static Marking parse(std::string_view text);
  static Marking standard(int n);
};

/// The pairing of {1..4n} attached to a marking, 1-based, two pairs per block.
std::vector<std::pair<int, int>> marking_intervals(const Marking& m);

/// Marked enumerator: key (i, j, k) counts the pairs reading 00, 11 and 01/10.
struct MarkedSmwe {
  int pairs = 0;
  std::map<std::array<int, 3>, BigInt> terms;
  friend bool operator==(const MarkedSmwe&, const MarkedSmwe&) = default;
};

/// Requires `pairs` to partition the coordinates (1-based).
MarkedSmwe bin_smwe(const BinaryCode& b, const std::vector<std::pair<int, int>>& pairs);

/// Marked enumerator of rho_X(C) under the standard marking, from swe_C.
MarkedSmwe predicted_smwe(const SymWE& s, Construction mode);

/// Sparse polynomial in three variables with rational coefficients.
struct TriPoly {
  std::map<std::array<int, 3>, Rational> c;

  static TriPoly monomial(int i, int j, int k, Rational coeff = 1);
  TriPoly& operator+=(const TriPoly& o);
  friend TriPoly operator+(TriPoly x, const TriPoly& y) { return x += y; }
  friend TriPoly operator*(const TriPoly& x, const TriPoly& y);
  TriPoly& operator*=(const Rational& s);
  TriPoly pow(int e) const;
  void prune();
  friend bool operator==(const TriPoly&, const TriPoly&) = default;
};

/// The generators of the ring that holds swe of even self-dual codes,
/// in variables (x, y, z) = (count of 0, count of b or c, count of a):
/// p2 = x^2+2y^2+z^2, q2 = x^2+4yz-z^2, p4 = x^4+8y^4+6x^2z^2+z^4, and p6.
TriPoly ring_p2();
TriPoly ring_q2();
TriPoly ring_p4();
TriPoly ring_p6();

/// swe_C as a TriPoly in the variable order used by the ring generators.
TriPoly swe_as_ring_poly(const SymWE& s);

/// Coordinates of swe_C in the monomials p2^i q2^j p4^e p6^l (e <= 1) of
/// total degree n, listed with exponents; nullopt when swe_C lies outside
/// their span.
struct RingMonomial {
  int i = 0, j = 0, e = 0, l = 0;
  Rational coeff;
};
std::optional<std::vector<RingMonomial>> swe_ring_coordinates(const SymWE& s);

}  // namespace kleinc
