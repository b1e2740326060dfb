#include "kleinc/design.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace kleinc {

DesignSlice make_slice(int n, int k, std::vector<KWord> words) {
  if (k < 0 || k > n) throw std::invalid_argument("slice weight out of range");
  for (const auto& w : words) {
    if (w.length() != n) throw std::invalid_argument("slice: word length mismatch");
    if (w.weight() != k) throw std::invalid_argument("slice: word " + w.str() + " does not have weight " + std::to_string(k));
  }
  std::sort(words.begin(), words.end());
  if (std::adjacent_find(words.begin(), words.end()) != words.end())
    throw std::invalid_argument("slice: duplicate words");
  return DesignSlice{n, k, std::move(words)};
}

DesignSlice slice(const KCode& c, int w) {
  std::vector<KWord> out;
  c.for_each_codeword([&](const KWord& x) {
    if (x.weight() == w) out.push_back(x);
  });
  c.require_enumerable();
  return make_slice(c.length(), w, std::move(out));
}

bool covers(const KWord& x, const KWord& y) {
  if (x.length() != y.length()) throw std::invalid_argument("covers: length mismatch");
  return (((x.p() ^ y.p()) | (x.q() ^ y.q())) & x.support()) == 0;
}

DesignReport check_design(const DesignSlice& y, int t) {
  if (t < 0 || t > y.k) throw std::invalid_argument("check_design: need 0 <= t <= k");
  const int n = y.n;
  DesignReport r;
  r.t = t;
  r.xt_size = binomial(n, t) * boost::multiprecision::pow(BigInt(3), static_cast<unsigned>(t));
  std::optional<std::uint64_t> first;
  std::vector<int> pos(static_cast<std::size_t>(t));
  std::iota(pos.begin(), pos.end(), 0);
  std::vector<int> sym(static_cast<std::size_t>(t));
  bool done = false;
  while (!done) {
    std::fill(sym.begin(), sym.end(), 1);
    for (;;) {
      KWord x(n);
      for (int i = 0; i < t; ++i) x.set(pos[static_cast<std::size_t>(i)], static_cast<Symbol>(sym[static_cast<std::size_t>(i)]));
      const auto count = static_cast<std::uint64_t>(
          std::count_if(y.Y.begin(), y.Y.end(), [&](const KWord& b) { return covers(x, b); }));
      if (!first) {
        first = count;
      } else if (count != *first) {
        r.offending = x;
        r.offending_count = count;
        return r;
      }
      int i = t - 1;
      while (i >= 0 && sym[static_cast<std::size_t>(i)] == 3) sym[static_cast<std::size_t>(i--)] = 1;
      if (i < 0) break;
      ++sym[static_cast<std::size_t>(i)];
    }
    int i = t - 1;
    while (i >= 0 && pos[static_cast<std::size_t>(i)] == n - t + i) --i;
    if (i < 0) {
      done = true;
    } else {
      ++pos[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < t; ++j) pos[static_cast<std::size_t>(j)] = pos[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  r.is_design = true;
  r.mu = BigInt(first.value_or(0));
  return r;
}

BigInt fisher_bound(int n, int k) {
  if (k < 2 || k > n) throw std::invalid_argument("fisher_bound: need 2 <= k <= n");
  return k < n ? BigInt(3 * n) : BigInt(2 * n + 1);
}

BigInt fisher_divisibility_minimum(int n, int k) {
  const BigInt bound = fisher_bound(n, k);
  const BigInt blocks_per_mu = binomial(n, 2) * 9;
  const BigInt step = blocks_per_mu / boost::multiprecision::gcd(blocks_per_mu, binomial(k, 2));
  return (bound + step - 1) / step * step;
}

std::pair<int, int> johnson_relation(const KWord& x, const KWord& y) {
  if (x.length() != y.length()) throw std::invalid_argument("johnson_relation: length mismatch");
  if (x.weight() != y.weight()) throw std::invalid_argument("johnson_relation: words of different weight");
  const std::uint64_t both = x.support() & y.support();
  const std::uint64_t equal = ~((x.p() ^ y.p()) | (x.q() ^ y.q()));
  return {std::popcount(both & equal), std::popcount(both)};
}

}  // namespace kleinc
