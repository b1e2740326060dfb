#include "kleinc/enumerators.hpp"

#include <stdexcept>

namespace kleinc {

WeightEnum hamming_we(const KCode& c) {
  c.require_enumerable();
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(c.length()) + 1);
  c.for_each_codeword([&](const KWord& w) { ++counts[static_cast<std::size_t>(w.weight())]; });
  WeightEnum out(c.length());
  for (int i = 0; i <= c.length(); ++i) out[i] = counts[static_cast<std::size_t>(i)];
  return out;
}

CompleteWE complete_we(const KCode& c) {
  c.require_enumerable();
  CompleteWE out{c.length(), {}};
  std::map<std::array<int, 4>, std::uint64_t> counts;
  c.for_each_codeword([&](const KWord& w) {
    const int na = std::popcount(w.p() & ~w.q());
    const int nb = std::popcount(w.q() & ~w.p());
    const int nc = std::popcount(w.p() & w.q());
    ++counts[{c.length() - na - nb - nc, na, nb, nc}];
  });
  for (const auto& [k, v] : counts) out.terms[k] = v;
  return out;
}

SymWE symmetrize(const CompleteWE& w) {
  SymWE out{w.n, {}};
  for (const auto& [k, v] : w.terms) out.terms[{k[0], k[1], k[2] + k[3]}] += v;
  return out;
}

SymWE swe(const KCode& c) { return symmetrize(complete_we(c)); }

WeightEnum collapse(const CompleteWE& w) {
  WeightEnum out(w.n);
  for (const auto& [k, v] : w.terms) out[w.n - k[0]] += v;
  return out;
}

WeightEnum collapse(const SymWE& w) {
  WeightEnum out(w.n);
  for (const auto& [k, v] : w.terms) out[w.n - k[0]] += v;
  return out;
}

BigInt total(const WeightEnum& w) {
  BigInt s = 0;
  for (const auto& x : w.c) s += x;
  return s;
}

WeightEnum macwilliams(const WeightEnum& w, const BigInt& size) {
  if (size <= 0) throw std::invalid_argument("macwilliams: size must be positive");
  RatPoly r = to_rational(w).substitute(RatPoly::linear(1, 3), RatPoly::linear(1, -1));
  r *= Rational(1, size);
  return to_integer(r);
}

namespace {

using Mono4 = std::array<int, 4>;
using Poly4 = std::map<Mono4, BigInt>;

Poly4 mul(const Poly4& x, const Poly4& y) {
  Poly4 r;
  for (const auto& [kx, vx] : x)
    for (const auto& [ky, vy] : y) {
      const Mono4 k{kx[0] + ky[0], kx[1] + ky[1], kx[2] + ky[2], kx[3] + ky[3]};
      r[k] += vx * vy;
    }
  return r;
}

// Rows give the images of p, q, r, s as signed sums of the four variables.
constexpr int kHadamard[4][4] = {{1, 1, 1, 1}, {1, 1, -1, -1}, {1, -1, 1, -1}, {1, -1, -1, 1}};

}  // namespace

CompleteWE macwilliams_complete(const CompleteWE& w, const BigInt& size) {
  if (size <= 0) throw std::invalid_argument("macwilliams_complete: size must be positive");
  std::array<std::vector<Poly4>, 4> pw;
  for (int v = 0; v < 4; ++v) {
    Poly4 lin;
    for (int t = 0; t < 4; ++t) {
      Mono4 k{0, 0, 0, 0};
      k[static_cast<std::size_t>(t)] = 1;
      lin[k] = kHadamard[v][t];
    }
    pw[static_cast<std::size_t>(v)].push_back(Poly4{{Mono4{0, 0, 0, 0}, BigInt(1)}});
    for (int e = 1; e <= w.n; ++e) pw[static_cast<std::size_t>(v)].push_back(mul(pw[static_cast<std::size_t>(v)].back(), lin));
  }
  Poly4 acc;
  for (const auto& [k, coeff] : w.terms) {
    Poly4 term = pw[0][static_cast<std::size_t>(k[0])];
    for (int v = 1; v < 4; ++v) term = mul(term, pw[static_cast<std::size_t>(v)][static_cast<std::size_t>(k[static_cast<std::size_t>(v)])]);
    for (const auto& [m, x] : term) acc[m] += x * coeff;
  }
  CompleteWE out{w.n, {}};
  for (const auto& [m, x] : acc) {
    if (x == 0) continue;
    if (x % size != 0) throw std::domain_error("macwilliams_complete: non-integral coefficient");
    out.terms[m] = x / size;
  }
  return out;
}

RationalWE odd_gleason_basis(int n, int i) {
  if (i < 0 || 2 * i > n) throw std::invalid_argument("odd_gleason_basis: index out of range");
  const RatPoly f = RatPoly::linear(1, 1);
  const RatPoly g(2, {0, 1, -1});  // v(u - v) = uv - v^2
  return f.pow(n - 2 * i) * g.pow(i);
}

RationalWE even_gleason_basis(int n, int b) {
  if (n % 2 != 0 || b < 0 || 6 * b > n) throw std::invalid_argument("even_gleason_basis: index out of range");
  const RatPoly p(2, {1, 0, 3});                 // u^2 + 3v^2
  const RatPoly g(6, {0, 0, 1, 0, -2, 0, 1});   // v^2 (u^2 - v^2)^2
  return p.pow((n - 6 * b) / 2) * g.pow(b);
}

namespace {

// Unitriangular solve: basis[i] has valuation pivot[i] in v with coefficient 1.
std::vector<Rational> triangular_solve(const RatPoly& w, const std::vector<RatPoly>& basis, const std::vector<int>& pivot,
                                       const char* what) {
  RatPoly residual = w;
  std::vector<Rational> a;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const Rational coeff = residual[pivot[i]];
    a.push_back(coeff);
    if (coeff != 0) residual -= basis[i] * coeff;
  }
  if (!residual.is_zero()) throw std::domain_error(std::string(what) + ": enumerator is not in the invariant ring");
  return a;
}

}  // namespace

std::vector<Rational> gleason_odd(const RationalWE& w) {
  std::vector<RatPoly> basis;
  std::vector<int> pivot;
  for (int i = 0; 2 * i <= w.n; ++i) {
    basis.push_back(odd_gleason_basis(w.n, i));
    pivot.push_back(i);
  }
  return triangular_solve(w, basis, pivot, "gleason_odd");
}

std::vector<Rational> gleason_odd(const WeightEnum& w) { return gleason_odd(to_rational(w)); }

std::vector<Rational> gleason_even(const RationalWE& w) {
  if (w.n % 2 != 0) throw std::invalid_argument("gleason_even: degree must be even");
  std::vector<RatPoly> basis;
  std::vector<int> pivot;
  for (int b = 0; 6 * b <= w.n; ++b) {
    basis.push_back(even_gleason_basis(w.n, b));
    pivot.push_back(2 * b);
  }
  return triangular_solve(w, basis, pivot, "gleason_even");
}

std::vector<Rational> gleason_even(const WeightEnum& w) { return gleason_even(to_rational(w)); }

RationalWE shadow_we(const RationalWE& w, const Rational& size) {
  if (size <= 0) throw std::invalid_argument("shadow_we: size must be positive");
  RatPoly r = w.substitute(RatPoly::linear(1, 3), RatPoly::linear(-1, 1));
  r *= Rational(1) / size;
  return r;
}

RationalWE shadow_we(const WeightEnum& w, const BigInt& size) { return shadow_we(to_rational(w), Rational(size)); }

ShadowSet shadow(const KCode& c) {
  if (!is_self_dual(c)) throw std::invalid_argument("shadow: code is not self-dual");
  ShadowSet s;
  s.c0 = even_subcode(c);
  s.even = s.c0.dim2() == c.dim2();
  const int n = c.length();
  s.r1 = s.r2 = s.r3 = KWord(n);
  if (s.even) return s;
  for (const auto& r : c.basis())
    if (!s.c0.contains(r)) {
      s.r1 = r;
      break;
    }
  const KCode d = dual(s.c0);
  for (const auto& r : d.basis())
    if (!c.contains(r)) {
      s.r2 = r;
      break;
    }
  s.r3 = s.r1 ^ s.r2;
  return s;
}

WeightEnum ShadowSet::weight_enumerator() const {
  WeightEnum out(c0.length());
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(c0.length()) + 1);
  for_each_shadow_word([&](const KWord& w) { ++counts[static_cast<std::size_t>(w.weight())]; });
  for (int i = 0; i <= c0.length(); ++i) out[i] = counts[static_cast<std::size_t>(i)];
  return out;
}

int ShadowSet::min_weight() const {
  int best = c0.length() + 1;
  for_each_shadow_word([&](const KWord& w) { best = std::min(best, w.weight()); });
  return best;
}

}  // namespace kleinc
