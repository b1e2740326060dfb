#pragma once

#include <optional>
#include <vector>

#include "kleinc/code.hpp"
#include "kleinc/enumerators.hpp"

namespace kleinc {

/// Upper bound on the minimal weight: [n/2] + 1 for self-dual codes, and
/// 2[n/6] + 2 for even self-dual codes (n even).
int dmax_bound(int n, bool even);

struct ExtremalSolve {
  int n = 0;
  bool even = false;
  /// Coefficients in the Gleason basis: (u+v)^(n-2i)(v(u-v))^i for the odd
  /// case, (u^2+3v^2)^((n-6b)/2)(v^2(u^2-v^2)^2)^b for the even case.
  std::vector<Rational> a;
  /// The resulting enumerator, coefficients A_0..A_n.
  RationalWE A;
  /// Number of forced zeros after A_0: [n/2] (odd case) or 2[n/6] (even case).
  int m = 0;
};

/// The unique enumerator in the Gleason ring with A_0 = 1 and the longest
/// forced run of zero coefficients.
ExtremalSolve extremal_we(int n, bool even);

enum class CertKind { ShadowFractional, ShadowNegative, ANegative };
const char* to_string(CertKind k);

struct NonexistenceCert {
  int n = 0;
  bool even = false;
  CertKind kind = CertKind::ANegative;
  /// Exponent of v of the offending coefficient and its exact value.
  int index = 0;
  Rational coefficient;
  /// For shadow certificates: the first nonzero shadow coefficient.
  int leading_index = 0;
  Rational leading;
};

/// Odd case: shadow certificate for 7 <= n <= 11, negative A_{m+2} for n >= 12,
/// nothing for n <= 6. Even case: the first negative coefficient of the even
/// extremal enumerator, if any.
std::optional<NonexistenceCert> nonexistence_certificate(int n, bool even);

/// Coefficient of phi^k in the expansion of (1+v)^(-n) in powers of
/// phi = v(1-v)/(1+v)^2, computed by the Lagrange inversion formula.
Rational burmann_bk(int n, int k);

/// Minimal weight of the code meets [n/2] + 1.
bool is_extremal(const KCode& c);

struct ShadowReport {
  int n = 0;
  /// Minimal weight of the shadow.
  int h = 0;
  bool h_equals_n = false;
  /// C is equivalent to gamma_1^n.
  bool is_gamma_power = false;
  bool a1_zero = false;
  BigInt a2;
  /// A_1 = 0 and A_2 = (n/2)(5-n).
  bool meets_weight2_bound = false;
  /// Shadow words of weight n-2 (when n >= 2).
  BigInt shadow_count_n_minus_2;
};

/// Requires C self-dual.
ShadowReport shadow_extremal_check(const KCode& c);

}  // namespace kleinc
