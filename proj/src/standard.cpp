#include "kleinc/standard.hpp"

#include <array>
#include <stdexcept>

namespace kleinc {
namespace {

// F4 = {0, 1, w, w^2} encoded as the symbols 0, a, b, c; addition is XOR.
using F4 = unsigned;

F4 f4_mul(F4 x, F4 y) {
  if (x == 0 || y == 0) return 0;
  static constexpr std::array<unsigned, 4> log = {0, 0, 1, 2};
  static constexpr std::array<F4, 3> exp = {1, 2, 3};
  return exp[(log[x] + log[y]) % 3];
}

F4 f4_inv(F4 x) {
  if (x == 0) throw std::domain_error("F4 inverse of zero");
  static constexpr std::array<F4, 4> inv = {0, 1, 3, 2};
  return inv[x];
}

KWord word_from_f4(const std::vector<F4>& v) {
  KWord w(static_cast<int>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i) w.set(static_cast<int>(i), static_cast<Symbol>(v[i]));
  return w;
}

// Null space basis of an F4 matrix (rows x cols).
std::vector<std::vector<F4>> f4_null_space(std::vector<std::vector<F4>> mat, std::size_t cols) {
  std::vector<std::size_t> pivot_cols;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < mat.size(); ++col) {
    std::size_t sel = row;
    while (sel < mat.size() && mat[sel][col] == 0) ++sel;
    if (sel == mat.size()) continue;
    std::swap(mat[sel], mat[row]);
    const F4 inv = f4_inv(mat[row][col]);
    for (auto& x : mat[row]) x = f4_mul(x, inv);
    for (std::size_t r = 0; r < mat.size(); ++r) {
      if (r == row || mat[r][col] == 0) continue;
      const F4 f = mat[r][col];
      for (std::size_t c = 0; c < cols; ++c) mat[r][c] ^= f4_mul(f, mat[row][c]);
    }
    pivot_cols.push_back(col);
    ++row;
  }
  std::vector<std::vector<F4>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    bool is_pivot = false;
    for (auto pc : pivot_cols) is_pivot = is_pivot || pc == free;
    if (is_pivot) continue;
    std::vector<F4> v(cols, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivot_cols.size(); ++r) v[pivot_cols[r]] = mat[r][free];  // char 2: -x = x
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<std::vector<F4>> hamming_f4_basis(int m) {
  if (m < 2) throw std::invalid_argument("hamming: m must be >= 2");
  std::size_t len = 1;
  for (int i = 0; i < m; ++i) len *= 4;
  len = (len - 1) / 3;
  if (len + 1 > static_cast<std::size_t>(KWord::max_length)) throw std::invalid_argument("hamming: length exceeds 64");
  // columns: projective points of PG(m-1, 4), normalised so the first nonzero entry is 1
  std::vector<std::vector<F4>> h(static_cast<std::size_t>(m));
  std::size_t total = 1;
  for (int i = 0; i < m; ++i) total *= 4;
  for (std::size_t v = 1; v < total; ++v) {
    std::vector<F4> col(static_cast<std::size_t>(m));
    std::size_t t = v;
    for (int i = m - 1; i >= 0; --i) {
      col[static_cast<std::size_t>(i)] = static_cast<F4>(t % 4);
      t /= 4;
    }
    F4 first = 0;
    for (auto x : col)
      if (x != 0) {
        first = x;
        break;
      }
    if (first != 1) continue;
    for (int i = 0; i < m; ++i) h[static_cast<std::size_t>(i)].push_back(col[static_cast<std::size_t>(i)]);
  }
  return f4_null_space(h, len);
}

// GF(2) span of an F4-linear code: each F4 basis vector v contributes v and w*v.
KCode f4_span(const std::vector<std::vector<F4>>& basis, int n) {
  KCode c(n);
  for (const auto& v : basis) {
    c.insert(word_from_f4(v));
    std::vector<F4> wv(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) wv[i] = f4_mul(2, v[i]);
    c.insert(word_from_f4(wv));
  }
  return c;
}

KCode from_lines(std::initializer_list<const char*> lines) {
  std::vector<KWord> gens;
  for (const char* l : lines) gens.push_back(KWord::parse(l));
  return KCode::span(gens);
}

}  // namespace

KCode gamma1() { return from_lines({"a"}); }

KCode epsilon2() { return from_lines({"aa", "bb"}); }

KCode delta(int n) {
  if (n < 1) throw std::invalid_argument("delta: n must be >= 1");
  KCode c(n);
  for (int i = 0; i + 1 < n; ++i) c.insert(KWord::unit(n, i, Symbol::a) ^ KWord::unit(n, i + 1, Symbol::a));
  return c;
}

KCode delta_plus(int n) {
  KCode c = delta(n);
  c.insert(KWord::constant(n, Symbol::b));
  return c;
}

std::vector<KWord> hexacode_generators() {
  return {KWord::parse("a0a0bb"), KWord::parse("a0bba0"), KWord::parse("bba0a0"),
          KWord::parse("00aaaa"), KWord::parse("aa00aa"), KWord::parse("b0b0ca")};
}

KCode hexacode() {
  const auto g = hexacode_generators();
  return KCode::span(g);
}

KCode shorter_hexacode() { return section(hexacode(), 5, Symbol::a); }

// Found once by exhaustive search over the non-even self-dual [6,3] codes
// without words of weight 1 or 2; unique up to equivalence.
KCode odd_hexacode() { return from_lines({"a00aa0", "b0b0b0", "0a0a0a", "0bb00b", "00a0aa", "000bbb"}); }

KCode hamming(int m) {
  const auto basis = hamming_f4_basis(m);
  return f4_span(basis, static_cast<int>(basis.front().size()));
}

KCode extended_hamming(int m) {
  auto basis = hamming_f4_basis(m);
  for (auto& v : basis) {
    F4 parity = 0;
    for (auto x : v) parity ^= x;
    v.push_back(parity);
  }
  return f4_span(basis, static_cast<int>(basis.front().size()));
}

KCode extremal12() {
  return from_lines({"aaaaaa000000", "bbbbbb000000", "000000aaaaaa", "000000bbbbbb",
                     "a0bab0aaaa00", "abccbabbbb00", "caca00a0aaa0", "cca0a0b0bbb0",
                     "ccbaaba00aaa", "bccbaab00bbb", "caabcbaa00aa", "b0baa0bb00bb"});
}

KCode standard_code(std::string_view name, int param) {
  if (name == "gamma1" || name == "g1") return gamma1();
  if (name == "epsilon2" || name == "e2") return epsilon2();
  if (name == "delta" || name == "d") return delta(param);
  if (name == "delta+" || name == "d+") return delta_plus(param);
  if (name == "hexacode" || name == "C6") return hexacode();
  if (name == "shorter-hexacode" || name == "C5") return shorter_hexacode();
  if (name == "odd-hexacode" || name == "O6") return odd_hexacode();
  if (name == "hamming" || name == "H") return hamming(param);
  if (name == "ext-hamming" || name == "xH") return extended_hamming(param);
  if (name == "extremal12" || name == "X12") return extremal12();
  throw std::invalid_argument("unknown standard code '" + std::string(name) + "'");
}

std::vector<std::string> standard_code_names() {
  return {"gamma1", "epsilon2", "delta", "delta+", "hexacode", "shorter-hexacode",
          "odd-hexacode", "hamming", "ext-hamming", "extremal12"};
}

}  // namespace kleinc
