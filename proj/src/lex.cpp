#include "kleinc/lex.hpp"

#include <stdexcept>

#include "kleinc/canon.hpp"

namespace kleinc {
namespace {

constexpr int lex_limit = 13;

// Words are indexed by their rank in the lexicographic order: the symbol at
// position i is the base-4 digit of weight 4^(n-1-i). Because 0, a, b, c
// carry the digit values 0..3, XOR of indices is addition in K^n.
KWord word_at(int n, std::uint64_t t) {
  KWord w(n);
  for (int i = n - 1; i >= 0; --i, t >>= 2) w.set(i, static_cast<Symbol>(t & 3u));
  return w;
}


// Indices of all words of weight < d.
std::vector<std::uint64_t> ball(int n, int d) {
  std::vector<std::uint64_t> out;
  const std::uint64_t total = std::uint64_t{1} << (2 * n);
  for (std::uint64_t t = 0; t < total; ++t)
    if (word_at(n, t).weight() < d) out.push_back(t);
  return out;
}

void check_args(int n, int d) {
  if (n < 1 || n > lex_limit) throw std::invalid_argument("lexicode: n must be in [1, 13]");
  if (d < 1 || d > n) throw std::invalid_argument("lexicode: d must be in [1, n]");
}

LexTrace greedy(int n, int d, bool self_orthogonal) {
  check_args(n, d);
  const std::uint64_t total = std::uint64_t{1} << (2 * n);
  const auto err = ball(n, d);
  std::vector<bool> near(total, false);
  LexTrace tr;
  tr.n = n;
  tr.d = d;
  tr.code = KCode(n);
  std::vector<std::uint64_t> span{0};
  auto mark = [&](std::uint64_t w) {
    for (auto e : err) near[w ^ e] = true;
  };
  if (self_orthogonal) mark(0);
  for (std::uint64_t t = 0; t < total; ++t) {
    if (near[t]) continue;
    const KWord x = word_at(n, t);
    if (self_orthogonal) {
      bool orth = true;
      for (const auto& r : tr.code.basis()) orth = orth && inner(x, r) == 0;
      if (!orth) continue;
      const std::size_t old = span.size();
      for (std::size_t i = 0; i < old; ++i) {
        span.push_back(span[i] ^ t);
        mark(span.back());
      }
    } else {
      mark(t);
    }
    tr.words.push_back(x);
    tr.code.insert(x);
  }
  tr.linear = tr.code.dim2() < 63 && (std::uint64_t{1} << tr.code.dim2()) == tr.words.size();
  if (self_orthogonal) tr.linear = true;
  return tr;
}

}  // namespace

LexTrace lexicode(int n, int d) { return greedy(n, d, false); }

LexTrace so_lexicode_at(int n, int d) { return greedy(n, d, true); }

SoLexResult so_lexicode(int d, int n_max) {
  if (d < 1) throw std::invalid_argument("so_lexicode: d must be >= 1");
  if (n_max < d || n_max > lex_limit) throw std::invalid_argument("so_lexicode: n_max must be in [d, 13]");
  SoLexResult r;
  r.d = d;
  r.n_max = n_max;
  std::vector<KCode> codes{KCode(0)};
  for (int n = 1; n <= n_max; ++n) {
    if (n < d) {
      // no word of K^n has weight >= d
      LexTrace empty;
      empty.n = n;
      empty.d = d;
      empty.code = KCode(n);
      empty.linear = true;
      r.traces.push_back(empty);
    } else {
      r.traces.push_back(so_lexicode_at(n, d));
    }
    codes.push_back(r.traces.back().code);
  }
  for (int p = 1; 2 * p <= n_max && !r.period; ++p) {
    const KCode& e = codes[static_cast<std::size_t>(p)];
    if (e.dim2() == 0) continue;
    bool ok = true;
    for (int n = p + 1; n <= n_max && ok; ++n)
      ok = equivalent(direct_sum(codes[static_cast<std::size_t>(n - p)], e), codes[static_cast<std::size_t>(n)]).has_value();
    if (ok) {
      r.period = p;
      r.element = e;
    }
  }
  return r;
}

}  // namespace kleinc
