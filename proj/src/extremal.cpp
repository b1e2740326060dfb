#include "kleinc/extremal.hpp"

#include <stdexcept>

#include "kleinc/canon.hpp"

namespace kleinc {

int dmax_bound(int n, bool even) {
  if (n < 1) throw std::invalid_argument("dmax_bound: n must be >= 1");
  if (even) {
    if (n % 2 != 0) throw std::invalid_argument("dmax_bound: even codes need even length");
    return 2 * (n / 6) + 2;
  }
  return n / 2 + 1;
}

ExtremalSolve extremal_we(int n, bool even) {
  if (n < 1) throw std::invalid_argument("extremal_we: n must be >= 1");
  if (even && n % 2 != 0) throw std::invalid_argument("extremal_we: even codes need even length");
  ExtremalSolve s;
  s.n = n;
  s.even = even;
  s.A = RatPoly(n);
  std::vector<RatPoly> basis;
  std::vector<int> pivot;
  if (even) {
    for (int b = 0; 6 * b <= n; ++b) {
      basis.push_back(even_gleason_basis(n, b));
      pivot.push_back(2 * b);
    }
    s.m = 2 * (n / 6);
  } else {
    for (int i = 0; 2 * i <= n; ++i) {
      basis.push_back(odd_gleason_basis(n, i));
      pivot.push_back(i);
    }
    s.m = n / 2;
  }
  // target: 1 at v^0, zeros at the remaining pivots
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const Rational target = i == 0 ? Rational(1) : Rational(0);
    const Rational coeff = target - s.A[pivot[i]];
    s.a.push_back(coeff);
    s.A += basis[i] * coeff;
  }
  return s;
}

const char* to_string(CertKind k) {
  switch (k) {
    case CertKind::ShadowFractional: return "shadow-fractional";
    case CertKind::ShadowNegative: return "shadow-negative";
    case CertKind::ANegative: return "A-negative";
  }
  return "?";
}

std::optional<NonexistenceCert> nonexistence_certificate(int n, bool even) {
  const ExtremalSolve s = extremal_we(n, even);
  NonexistenceCert cert;
  cert.n = n;
  cert.even = even;
  if (even) {
    for (int i = 0; i <= n; ++i)
      if (s.A[i] < 0) {
        cert.kind = CertKind::ANegative;
        cert.index = i;
        cert.coefficient = s.A[i];
        return cert;
      }
    return std::nullopt;
  }
  if (n <= 6) return std::nullopt;
  if (n <= 11) {
    const RationalWE sh = shadow_we(s.A, Rational(BigInt(1) << n));
    bool have_leading = false;
    for (int i = 0; i <= n; ++i) {
      if (sh[i] == 0) continue;
      if (!have_leading) {
        have_leading = true;
        cert.leading_index = i;
        cert.leading = sh[i];
      }
      if (denominator(sh[i]) != 1 || sh[i] < 0) {
        cert.kind = denominator(sh[i]) != 1 ? CertKind::ShadowFractional : CertKind::ShadowNegative;
        cert.index = i;
        cert.coefficient = sh[i];
        return cert;
      }
    }
    return std::nullopt;
  }
  const int idx = s.m + 2;
  if (s.A[idx] < 0) {
    cert.kind = CertKind::ANegative;
    cert.index = idx;
    cert.coefficient = s.A[idx];
    return cert;
  }
  return std::nullopt;
}

Rational burmann_bk(int n, int k) {
  if (k < 0) throw std::invalid_argument("burmann_bk: k must be >= 0");
  if (k == 0) return 1;
  // b_k = (1/k) [v^(k-1)] H'(v) g(v)^k with H = (1+v)^(-n), g = (1+v)^2/(1-v).
  const int deg = k - 1;
  std::vector<BigInt> hprime(static_cast<std::size_t>(deg) + 1), gk(static_cast<std::size_t>(deg) + 1);
  for (int j = 0; j <= deg; ++j) {
    // d/dv (1+v)^(-n) = -n (1+v)^(-n-1) = -n sum_j (-1)^j C(n+j, j) v^j
    BigInt c = binomial(n + j, j) * n;
    hprime[static_cast<std::size_t>(j)] = (j % 2 == 0) ? BigInt(-c) : c;
  }
  // (1+v)^(2k) (1-v)^(-k)
  std::vector<BigInt> up(static_cast<std::size_t>(deg) + 1), down(static_cast<std::size_t>(deg) + 1);
  for (int j = 0; j <= deg; ++j) {
    up[static_cast<std::size_t>(j)] = binomial(2 * k, j);
    down[static_cast<std::size_t>(j)] = binomial(k + j - 1, j);
  }
  for (int j = 0; j <= deg; ++j)
    for (int i = 0; i <= j; ++i) gk[static_cast<std::size_t>(j)] += up[static_cast<std::size_t>(i)] * down[static_cast<std::size_t>(j - i)];
  BigInt coeff = 0;
  for (int i = 0; i <= deg; ++i) coeff += hprime[static_cast<std::size_t>(i)] * gk[static_cast<std::size_t>(deg - i)];
  return Rational(coeff, k);
}

bool is_extremal(const KCode& c) {
  return is_self_dual(c) && c.dim2() > 0 && min_weight(c) == dmax_bound(c.length(), false);
}

ShadowReport shadow_extremal_check(const KCode& c) {
  if (!is_self_dual(c)) throw std::invalid_argument("shadow_extremal_check: code is not self-dual");
  const int n = c.length();
  ShadowReport r;
  r.n = n;
  const ShadowSet s = shadow(c);
  const WeightEnum sw = s.weight_enumerator();
  r.h = s.min_weight();
  r.h_equals_n = r.h == n;
  KCode g(n);
  for (int i = 0; i < n; ++i) g.insert(KWord::unit(n, i, Symbol::a));
  r.is_gamma_power = equivalent(c, g).has_value();
  const WeightEnum w = hamming_we(c);
  r.a1_zero = n >= 1 && w[1] == 0;
  r.a2 = n >= 2 ? w[2] : BigInt(0);
  r.meets_weight2_bound = r.a1_zero && n >= 2 && 2 * r.a2 == BigInt(n) * (5 - n);
  r.shadow_count_n_minus_2 = n >= 2 ? sw[n - 2] : BigInt(0);
  return r;
}

}  // namespace kleinc
