#pragma once
// Reference implementations used only by the tests. Words are plain strings
// over "0abc" and every operation goes through explicit symbol tables, so
// nothing here shares code with the bit-plane library.

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "kleinc/code.hpp"
#include "kleinc/group.hpp"

namespace oracle {

using Word = std::string;
using CodeSet = std::set<Word>;

inline int idx(char s) {
  switch (s) {
    case '0': return 0;
    case 'a': return 1;
    case 'b': return 2;
    default: return 3;
  }
}

// Cayley table of Z2 x Z2 with a + b = c.
inline char add(char x, char y) {
  static const char table[4][5] = {"0abc", "a0cb", "bc0a", "cba0"};
  return table[idx(x)][idx(y)];
}

// 1 exactly when both symbols are nonzero and distinct.
inline int dot(char x, char y) { return x != '0' && y != '0' && x != y ? 1 : 0; }

inline Word add(const Word& x, const Word& y) {
  Word r(x.size(), '0');
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = add(x[i], y[i]);
  return r;
}

inline int inner(const Word& x, const Word& y) {
  int s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) s ^= dot(x[i], y[i]);
  return s;
}

inline int weight(const Word& x) { return static_cast<int>(std::count_if(x.begin(), x.end(), [](char c) { return c != '0'; })); }

inline std::vector<Word> all_words(int n) {
  std::vector<Word> out{""};
  for (int i = 0; i < n; ++i) {
    std::vector<Word> next;
    for (const auto& w : out)
      for (char s : {'0', 'a', 'b', 'c'}) next.push_back(w + s);
    out = std::move(next);
  }
  return out;
}

// Closure of the generators under addition.
inline CodeSet span(const std::vector<Word>& gens, int n) {
  CodeSet c{Word(static_cast<std::size_t>(n), '0')};
  for (const auto& g : gens) {
    std::vector<Word> add_on;
    for (const auto& w : c) add_on.push_back(add(w, g));
    c.insert(add_on.begin(), add_on.end());
  }
  return c;
}

inline CodeSet span(const kleinc::KCode& c) {
  std::vector<Word> gens;
  for (const auto& r : c.basis()) gens.push_back(r.str());
  return span(gens, c.length());
}

inline CodeSet dual(const CodeSet& c, int n) {
  CodeSet out;
  for (const auto& y : all_words(n))
    if (std::all_of(c.begin(), c.end(), [&](const Word& x) { return inner(x, y) == 0; })) out.insert(y);
  return out;
}

inline std::vector<long long> we(const CodeSet& c, int n) {
  std::vector<long long> a(static_cast<std::size_t>(n) + 1, 0);
  for (const auto& w : c) ++a[static_cast<std::size_t>(weight(w))];
  return a;
}

inline int min_weight(const CodeSet& c) {
  int best = 1 << 30;
  for (const auto& w : c)
    if (weight(w) > 0) best = std::min(best, weight(w));
  return best;
}

// g acts by moving position i to sigma[i] and relabelling its symbol by tau[i].
inline Word apply(const kleinc::GroupElement& g, const Word& x) {
  Word y(x.size(), '0');
  for (std::size_t i = 0; i < x.size(); ++i) {
    const auto& t = g.tau()[i];
    y[static_cast<std::size_t>(g.sigma()[i])] = "0abc"[static_cast<unsigned>(t[static_cast<std::size_t>(idx(x[i]))])];
  }
  return y;
}

inline CodeSet apply(const kleinc::GroupElement& g, const CodeSet& c) {
  CodeSet out;
  for (const auto& w : c) out.insert(apply(g, w));
  return out;
}

inline kleinc::KWord random_word(int n, std::mt19937_64& rng) {
  const std::uint64_t m = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  return kleinc::KWord(n, rng() & m, rng() & m);
}

inline kleinc::KCode random_code(int n, int gens, std::mt19937_64& rng) {
  kleinc::KCode c(n);
  for (int i = 0; i < gens; ++i) c.insert(random_word(n, rng));
  return c;
}

// A random self-dual code grown one random dual vector at a time.
inline kleinc::KCode random_self_dual(int n, std::mt19937_64& rng) {
  kleinc::KCode c(n);
  while (c.dim2() < n) {
    const kleinc::KCode d = kleinc::dual(c);
    const auto& b = d.basis();
    kleinc::KWord x(n);
    for (const auto& r : b)
      if (rng() & 1u) x ^= r;
    if (!c.contains(x)) c.insert(x);
  }
  return c;
}

// Product formulas for the number of distinct self-dual codes.
inline kleinc::BigInt mass_product(int n, bool even) {
  kleinc::BigInt m = 1;
  if (even) {
    for (int i = 0; i <= n - 1; ++i) m *= (kleinc::BigInt(1) << i) + 1;
  } else {
    for (int i = 1; i <= n; ++i) m *= (kleinc::BigInt(1) << i) + 1;
  }
  return m;
}

// Every distinct self-dual code of length n (even ones only if asked), found
// by extending self-orthogonal codes one vector at a time. Codes are compared
// as explicit word sets.
inline std::set<CodeSet> all_self_dual(int n, bool even) {
  std::set<CodeSet> level{CodeSet{Word(static_cast<std::size_t>(n), '0')}};
  const auto words = all_words(n);
  for (int dim2 = 0; dim2 < n; ++dim2) {
    std::set<CodeSet> next;
    for (const auto& c : level) {
      for (const auto& x : words) {
        if (c.count(x) || (even && weight(x) % 2 != 0)) continue;
        if (!std::all_of(c.begin(), c.end(), [&](const Word& y) { return inner(x, y) == 0; })) continue;
        CodeSet grown = c;
        for (const auto& y : c) grown.insert(add(x, y));
        next.insert(std::move(grown));
      }
    }
    level = std::move(next);
  }
  return level;
}

}  // namespace oracle
