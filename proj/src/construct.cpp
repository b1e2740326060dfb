#include "kleinc/construct.hpp"

#include <stdexcept>

namespace kleinc {
namespace {

constexpr std::array<const char*, 4> hat_blocks = {"0000", "1100", "1010", "0110"};

void set_block(BinWord& w, int block, const char* bits) {
  for (int i = 0; i < 4; ++i)
    if (bits[i] == '1') w.set(4 * block + i);
}

BinWord d4_block(int n, int block) {
  BinWord w(4 * n);
  set_block(w, block, "1111");
  return w;
}


}  // namespace

BinWord hat(const KWord& x) {
  const int n = x.length();
  if (4 * n > BinWord::max_length) throw std::invalid_argument("hat: length exceeds 64");
  BinWord w(4 * n);
  for (int i = 0; i < n; ++i) set_block(w, i, hat_blocks[static_cast<std::size_t>(x.at(i))]);
  return w;
}

BinaryCode rho_a(const KCode& c) {
  const int n = c.length();
  BinaryCode b(4 * n);
  for (const auto& r : c.basis()) b.insert(hat(r));
  for (int i = 0; i < n; ++i) b.insert(d4_block(n, i));
  return b;
}

BinaryCode rho_b(const KCode& c) {
  const int n = c.length();
  if (n % 2 != 0) throw std::invalid_argument("rho_b: length must be even");
  BinaryCode b(4 * n);
  for (const auto& r : c.basis()) b.insert(hat(r));
  // (d4^n)_0: an even number of 1111 blocks
  for (int i = 0; i + 1 < n; ++i) b.insert(d4_block(n, i) ^ d4_block(n, i + 1));
  BinWord s(4 * n);
  for (int i = 0; i < n; ++i) set_block(s, i, (n % 4 == 2 && i == n - 1) ? "0111" : "1000");
  b.insert(s);
  return b;
}

BNormalized normalize_for_b(const KCode& c, BTarget target) {
  const int n = c.length();
  if (n % 2 != 0) throw std::invalid_argument("normalize_for_b: length must be even");
  std::optional<KWord> full;
  auto pick = [&](const KWord& w) {
    if (!full && w.weight() == n) full = w;
  };
  if (target == BTarget::Codeword)
    c.for_each_codeword(pick);
  else
    shadow(c).for_each_shadow_word(pick);
  if (!full)
    throw std::invalid_argument(target == BTarget::Codeword ? "normalize_for_b: code has no word of full weight"
                                                            : "normalize_for_b: shadow has no word of full weight");
  std::vector<int> sigma(static_cast<std::size_t>(n));
  std::vector<SymbolPerm> tau(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    sigma[static_cast<std::size_t>(i)] = i;
    SymbolPerm t = {Symbol::zero, Symbol::a, Symbol::b, Symbol::c};
    const Symbol v = full->at(i);
    if (v != Symbol::c) std::swap(t[static_cast<std::size_t>(v)], t[static_cast<std::size_t>(Symbol::c)]);
    tau[static_cast<std::size_t>(i)] = t;
  }
  GroupElement g(std::move(sigma), std::move(tau));
  KCode out = g.apply(c);
  return {std::move(out), std::move(g)};
}

BinaryCode rho(const KCode& c, Construction mode) { return mode == Construction::A ? rho_a(c) : rho_b(c); }

IntPoly predicted_we(const WeightEnum& w, Construction mode) {
  const int n = w.n;
  // x^4 + y^4 and 2 x^2 y^2 as degree-4 forms
  RatPoly u(4), v(4);
  u[0] = 1;
  u[4] = 1;
  v[2] = 2;
  RatPoly a = to_rational(w).substitute(u, v);
  if (mode == Construction::A) return to_integer(a);
  if (n % 2 != 0) throw std::invalid_argument("predicted_we: construction B needs even length");
  // x^4 - y^4, x^3 y + x y^3, x^3 y - x y^3
  RatPoly d(4), e(4), f(4);
  d[0] = 1;
  d[4] = -1;
  e[1] = 1;
  e[3] = 1;
  f[1] = 1;
  f[3] = -1;
  const Rational half(1, 2);
  const Rational big = Rational(BigInt(1) << n) / 2;
  const Rational sign = (n / 2) % 2 == 0 ? Rational(1) : Rational(-1);
  RatPoly r = a * half + d.pow(n) * half + (e.pow(n) + f.pow(n) * sign) * big;
  return to_integer(r);
}

Marking Marking::parse(std::string_view text) {
  const KWord w = KWord::parse(text);
  Marking m;
  for (int i = 0; i < w.length(); ++i) {
    if (w.at(i) == Symbol::zero) throw std::invalid_argument("marking: zero entry at position " + std::to_string(i + 1));
    m.m.push_back(w.at(i));
  }
  return m;
}

Marking Marking::standard(int n) { return Marking{std::vector<Symbol>(static_cast<std::size_t>(n), Symbol::a)}; }

std::vector<std::pair<int, int>> marking_intervals(const Marking& m) {
  std::vector<std::pair<int, int>> out;
  for (std::size_t idx = 0; idx < m.m.size(); ++idx) {
    const int i = static_cast<int>(idx) + 1;
    switch (m.m[idx]) {
      case Symbol::a:
        out.push_back({4 * i - 3, 4 * i - 2});
        out.push_back({4 * i - 1, 4 * i});
        break;
      case Symbol::b:
        out.push_back({4 * i - 3, 4 * i - 1});
        out.push_back({4 * i - 2, 4 * i});
        break;
      case Symbol::c:
        out.push_back({4 * i - 3, 4 * i});
        out.push_back({4 * i - 1, 4 * i - 2});
        break;
      default: throw std::invalid_argument("marking: zero entry");
    }
  }
  return out;
}

MarkedSmwe bin_smwe(const BinaryCode& b, const std::vector<std::pair<int, int>>& pairs) {
  const int m = b.length();
  std::vector<int> seen(static_cast<std::size_t>(m), 0);
  for (const auto& [i, j] : pairs) {
    if (i < 1 || j < 1 || i > m || j > m || i == j) throw std::invalid_argument("bin_smwe: bad pair");
    ++seen[static_cast<std::size_t>(i - 1)];
    ++seen[static_cast<std::size_t>(j - 1)];
  }
  for (int s : seen)
    if (s != 1) throw std::invalid_argument("bin_smwe: pairs must partition the coordinates");
  MarkedSmwe out;
  out.pairs = static_cast<int>(pairs.size());
  b.for_each_codeword([&](const BinWord& w) {
    std::array<int, 3> key{0, 0, 0};
    for (const auto& [i, j] : pairs) {
      const bool x = w.get(i - 1), y = w.get(j - 1);
      ++key[x == y ? (x ? 1 : 0) : 2];
    }
    out.terms[key] += 1;
  });
  return out;
}

TriPoly TriPoly::monomial(int i, int j, int k, Rational coeff) {
  TriPoly p;
  if (coeff != 0) p.c[{i, j, k}] = coeff;
  return p;
}

TriPoly& TriPoly::operator+=(const TriPoly& o) {
  for (const auto& [k, v] : o.c) c[k] += v;
  prune();
  return *this;
}

TriPoly operator*(const TriPoly& x, const TriPoly& y) {
  TriPoly r;
  for (const auto& [kx, vx] : x.c)
    for (const auto& [ky, vy] : y.c) r.c[{kx[0] + ky[0], kx[1] + ky[1], kx[2] + ky[2]}] += vx * vy;
  r.prune();
  return r;
}

TriPoly& TriPoly::operator*=(const Rational& s) {
  for (auto& [k, v] : c) v *= s;
  prune();
  return *this;
}

TriPoly TriPoly::pow(int e) const {
  TriPoly r = monomial(0, 0, 0), b = *this;
  for (; e > 0; e >>= 1) {
    if (e & 1) r = r * b;
    if (e > 1) b = b * b;
  }
  return r;
}

void TriPoly::prune() {
  for (auto it = c.begin(); it != c.end();) it = it->second == 0 ? c.erase(it) : std::next(it);
}

MarkedSmwe predicted_smwe(const SymWE& s, Construction mode) {
  const int n = s.n;
  // U -> x^2 + y^2, V -> 2xy, W -> 2z^2 (x: 00 pairs, y: 11 pairs, z: mixed)
  const TriPoly U = TriPoly::monomial(2, 0, 0) + TriPoly::monomial(0, 2, 0);
  const TriPoly V = TriPoly::monomial(1, 1, 0, 2);
  const TriPoly W = TriPoly::monomial(0, 0, 2, 2);
  TriPoly p;
  for (const auto& [k, cnt] : s.terms) {
    TriPoly t = U.pow(k[0]) * V.pow(k[1]) * W.pow(k[2]);
    t *= Rational(cnt);
    p += t;
  }
  if (mode == Construction::B) {
    if (n % 2 != 0) throw std::invalid_argument("predicted_smwe: construction B needs even length");
    p *= Rational(1, 2);
    TriPoly d = TriPoly::monomial(2, 0, 0) + TriPoly::monomial(0, 2, 0, -1);
    d = d.pow(n);
    d *= Rational(1, 2);
    TriPoly plus = (TriPoly::monomial(1, 0, 0) + TriPoly::monomial(0, 1, 0)).pow(n);
    TriPoly minus = (TriPoly::monomial(1, 0, 0) + TriPoly::monomial(0, 1, 0, -1)).pow(n);
    minus *= Rational((n / 2) % 2 == 0 ? 1 : -1);
    TriPoly tail = (plus + minus) * TriPoly::monomial(0, 0, n);
    tail *= Rational(BigInt(1) << n) / 2;
    p += d;
    p += tail;
  }
  MarkedSmwe out;
  out.pairs = 2 * n;
  for (const auto& [k, v] : p.c) {
    if (denominator(v) != 1) throw std::domain_error("predicted_smwe: non-integral coefficient");
    out.terms[k] = numerator(v);
  }
  return out;
}

TriPoly ring_p2() {
  return TriPoly::monomial(2, 0, 0) + TriPoly::monomial(0, 2, 0, 2) + TriPoly::monomial(0, 0, 2);
}

TriPoly ring_q2() {
  return TriPoly::monomial(2, 0, 0) + TriPoly::monomial(0, 1, 1, 4) + TriPoly::monomial(0, 0, 2, -1);
}

TriPoly ring_p4() {
  return TriPoly::monomial(4, 0, 0) + TriPoly::monomial(0, 4, 0, 8) + TriPoly::monomial(2, 0, 2, 6) +
         TriPoly::monomial(0, 0, 4);
}

TriPoly ring_p6() {
  TriPoly p;
  for (const auto& [e, coeff] : std::vector<std::pair<std::array<int, 3>, int>>{
           {{6, 0, 0}, 1},
           {{2, 4, 0}, 6},
           {{0, 6, 0}, 4},
           {{2, 3, 1}, 24},
           {{2, 2, 2}, 12},
           {{0, 4, 2}, 6},
           {{0, 3, 3}, 8},
           {{2, 0, 4}, 3}})
    p += TriPoly::monomial(e[0], e[1], e[2], coeff);
  return p;
}

TriPoly swe_as_ring_poly(const SymWE& s) {
  TriPoly p;
  for (const auto& [k, cnt] : s.terms) p += TriPoly::monomial(k[0], k[2], k[1], Rational(cnt));
  return p;
}

std::optional<std::vector<RingMonomial>> swe_ring_coordinates(const SymWE& s) {
  const int n = s.n;
  std::vector<RingMonomial> mons;
  std::vector<TriPoly> polys;
  if (n % 2 == 0) {
    const TriPoly p2 = ring_p2(), q2 = ring_q2(), p4 = ring_p4(), p6 = ring_p6();
    for (int l = 0; 6 * l <= n; ++l)
      for (int e = 0; e <= 1 && 6 * l + 4 * e <= n; ++e) {
        const int rest = (n - 6 * l - 4 * e) / 2;
        for (int j = 0; j <= rest; ++j) {
          const int i = rest - j;
          mons.push_back({i, j, e, l, 0});
          polys.push_back(p2.pow(i) * q2.pow(j) * p4.pow(e) * p6.pow(l));
        }
      }
  }
  const TriPoly target = swe_as_ring_poly(s);
  // Gaussian elimination on the coefficient columns.
  std::map<std::array<int, 3>, std::size_t> row_of;
  for (const auto& p : polys)
    for (const auto& [k, v] : p.c) row_of.emplace(k, 0);
  for (const auto& [k, v] : target.c) row_of.emplace(k, 0);
  std::size_t rows = 0;
  for (auto& [k, idx] : row_of) idx = rows++;
  const std::size_t cols = polys.size();
  std::vector<std::vector<Rational>> mat(rows, std::vector<Rational>(cols + 1));
  for (std::size_t j = 0; j < cols; ++j)
    for (const auto& [k, v] : polys[j].c) mat[row_of[k]][j] = v;
  for (const auto& [k, v] : target.c) mat[row_of[k]][cols] = v;
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t col = 0; col < cols && r < rows; ++col) {
    std::size_t sel = r;
    while (sel < rows && mat[sel][col] == 0) ++sel;
    if (sel == rows) continue;
    std::swap(mat[sel], mat[r]);
    const Rational inv = 1 / mat[r][col];
    for (auto& x : mat[r]) x *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || mat[i][col] == 0) continue;
      const Rational f = mat[i][col];
      for (std::size_t c = col; c <= cols; ++c) mat[i][c] -= f * mat[r][c];
    }
    pivot_col.push_back(col);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i)
    if (mat[i][cols] != 0) return std::nullopt;
  for (std::size_t i = 0; i < pivot_col.size(); ++i) mons[pivot_col[i]].coeff = mat[i][cols];
  return mons;
}

}  // namespace kleinc
