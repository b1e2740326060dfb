#pragma once

#include <array>
#include <map>
#include <vector>

#include "kleinc/code.hpp"
#include "kleinc/poly.hpp"

namespace kleinc {

/// Hamming weight enumerator W_C(u,v) = sum A_i u^(n-i) v^i.
using WeightEnum = IntPoly;
/// Enumerator with exact rational coefficients (shadows, hypothetical codes).
using RationalWE = RatPoly;

/// cwe_C(p,q,r,s): key (i,j,k,l) counts the symbols 0, a, b, c.
struct CompleteWE {
  int n = 0;
  std::map<std::array<int, 4>, BigInt> terms;
  friend bool operator==(const CompleteWE&, const CompleteWE&) = default;
};

/// swe_C(U,V,W) = cwe_C(U,V,W,W): key (i,j,k) counts 0, a, and {b,c}.
struct SymWE {
  int n = 0;
  std::map<std::array<int, 3>, BigInt> terms;
  friend bool operator==(const SymWE&, const SymWE&) = default;
};

WeightEnum hamming_we(const KCode& c);
CompleteWE complete_we(const KCode& c);
SymWE swe(const KCode& c);

/// cwe(u,v,v,v).
WeightEnum collapse(const CompleteWE& w);
/// cwe(U,V,W,W).
SymWE symmetrize(const CompleteWE& w);
/// swe(u,v,v).
WeightEnum collapse(const SymWE& w);

/// Number of codewords encoded by an enumerator.
BigInt total(const WeightEnum& w);

/// (1/|C|) W(u+3v, u-v). Throws std::domain_error if the result is not integral.
WeightEnum macwilliams(const WeightEnum& w, const BigInt& size);
/// (1/|C|) cwe(p+q+r+s, p+q-r-s, p-q+r-s, p-q-r+s). Throws std::domain_error
/// if the result is not integral.
CompleteWE macwilliams_complete(const CompleteWE& w, const BigInt& size);

/// (u+v)^(n-2i) (v(u-v))^i.
RationalWE odd_gleason_basis(int n, int i);
/// (u^2+3v^2)^((n-6b)/2) (v^2(u^2-v^2)^2)^b.
RationalWE even_gleason_basis(int n, int b);

/// Coefficients a_0..a_floor(n/2) with W = sum a_i (u+v)^(n-2i) (v(u-v))^i.
/// Throws std::domain_error if W is not in the span.
std::vector<Rational> gleason_odd(const RationalWE& w);
std::vector<Rational> gleason_odd(const WeightEnum& w);
/// Coefficients c_0..c_floor(n/6) in the even basis; n must be even.
std::vector<Rational> gleason_even(const RationalWE& w);
std::vector<Rational> gleason_even(const WeightEnum& w);

/// (1/|C|) W(u+3v, v-u), the enumerator of the shadow of a self-dual code.
RationalWE shadow_we(const RationalWE& w, const Rational& size);
RationalWE shadow_we(const WeightEnum& w, const BigInt& size);

/// The cosets of the even subcode C0 inside its dual. For a non-even
/// self-dual C: C = C0 + {0, r1}, and the shadow is (C0 + r2) u (C0 + r3) with
/// r3 = r1 + r2. For an even C, C0 = C and the shadow is C itself.
struct ShadowSet {
  KCode c0;
  bool even = false;
  KWord r1, r2, r3;

  /// Calls f on every shadow word.
  template <class F>
  void for_each_shadow_word(F&& f) const {
    if (even) {
      c0.for_each_codeword(f);
      return;
    }
    for (const KWord* r : {&r2, &r3}) c0.for_each_codeword([&](const KWord& w) { f(w ^ *r); });
  }
  /// Distribution of the shadow words by weight.
  WeightEnum weight_enumerator() const;
  /// Minimal weight of a shadow word.
  int min_weight() const;
};

/// Requires C self-dual; throws std::invalid_argument otherwise.
ShadowSet shadow(const KCode& c);

}  // namespace kleinc
