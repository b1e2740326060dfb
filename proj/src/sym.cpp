#include "kleinc/sym.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace kleinc {
namespace {

std::uint64_t pack(const KWord& w) { return w.p() | (w.q() << w.length()); }

KWord unpack(int n, std::uint64_t k) {
  const std::uint64_t m = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  return KWord(n, k & m, k >> n);
}

struct UnionFind {
  std::vector<std::uint32_t> parent;
  explicit UnionFind(std::size_t size) : parent(size) { std::iota(parent.begin(), parent.end(), 0u); }
  std::uint32_t find(std::uint32_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

// Calls f for every word of weight w: position sets in lexicographic order,
// symbols at those positions counting through a, b, c.
template <class F>
void for_each_word_of_weight(int n, int w, F&& f) {
  std::vector<int> pos(static_cast<std::size_t>(w));
  std::iota(pos.begin(), pos.end(), 0);
  std::vector<int> sym(static_cast<std::size_t>(w));
  for (;;) {
    std::fill(sym.begin(), sym.end(), 1);
    for (;;) {
      KWord x(n);
      for (int i = 0; i < w; ++i) x.set(pos[static_cast<std::size_t>(i)], static_cast<Symbol>(sym[static_cast<std::size_t>(i)]));
      if (!f(x)) return;
      int i = w - 1;
      while (i >= 0 && sym[static_cast<std::size_t>(i)] == 3) sym[static_cast<std::size_t>(i--)] = 1;
      if (i < 0) break;
      ++sym[static_cast<std::size_t>(i)];
    }
    int i = w - 1;
    while (i >= 0 && pos[static_cast<std::size_t>(i)] == n - w + i) --i;
    if (i < 0) return;
    ++pos[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < w; ++j) pos[static_cast<std::size_t>(j)] = pos[static_cast<std::size_t>(j - 1)] + 1;
  }
}

}  // namespace

OrbitTable orbits(const KCode& c, std::optional<int> weight) {
  const int n = c.length();
  if (2 * n > 24) throw std::length_error("orbits: 4^n exceeds 2^24");
  if (weight && (*weight < 0 || *weight > n)) throw std::invalid_argument("orbits: weight out of range");
  const AutResult a = aut(c);
  const std::uint64_t total = std::uint64_t{1} << (2 * n);
  UnionFind uf(total);
  auto in_subset = [&](const KWord& w) { return !weight || w.weight() == *weight; };
  for (std::uint64_t k = 0; k < total; ++k) {
    const KWord x = unpack(n, k);
    if (!in_subset(x)) continue;
    for (const auto& g : a.generators) uf.unite(static_cast<std::uint32_t>(k), static_cast<std::uint32_t>(pack(g.apply(x))));
  }
  std::unordered_map<std::uint32_t, std::size_t> index;
  OrbitTable t;
  t.n = n;
  t.group_order = a.order;
  for (std::uint64_t k = 0; k < total; ++k) {
    const KWord x = unpack(n, k);
    if (!in_subset(x)) continue;
    const auto root = uf.find(static_cast<std::uint32_t>(k));
    auto [it, fresh] = index.emplace(root, t.orbits.size());
    if (fresh) t.orbits.push_back({x, 0, x.weight(), 0, 0});
    Orbit& o = t.orbits[it->second];
    ++o.size;
    if (lex_less(x, o.rep)) o.rep = x;
  }
  const auto words = c.codewords();
  for (auto& o : t.orbits) {
    o.distance = n + 1;
    for (const auto& cw : words) {
      const int d = distance(o.rep, cw);
      if (d < o.distance) {
        o.distance = d;
        o.nearest = 0;
      }
      if (d == o.distance) ++o.nearest;
    }
  }
  std::sort(t.orbits.begin(), t.orbits.end(), [](const Orbit& x, const Orbit& y) {
    if (x.weight != y.weight) return x.weight < y.weight;
    return lex_less(x.rep, y.rep);
  });
  return t;
}

CoveringResult covering_radius(const KCode& c) {
  const int n = c.length();
  const int cos_dim = 2 * n - c.dim2();
  if (cos_dim > 24) throw std::length_error("covering_radius: more than 2^24 cosets");
  const std::uint64_t cosets = std::uint64_t{1} << cos_dim;
  CoveringResult r;
  std::unordered_map<KWord, bool, KWordHash> seen;
  seen.reserve(cosets);
  for (int w = 0; w <= n && seen.size() < cosets; ++w) {
    r.count_by_weight.push_back(0);
    auto visit = [&](const KWord& x) {
      if (seen.emplace(c.reduce(x), true).second) {
        r.leaders.push_back({x, w});
        ++r.count_by_weight.back();
        r.radius = w;
      }
      return seen.size() < cosets;
    };
    if (w == 0)
      visit(KWord(n));
    else
      for_each_word_of_weight(n, w, visit);
  }
  return r;
}

DeepHoleStats deep_holes(const KCode& c) {
  const CoveringResult cov = covering_radius(c);
  DeepHoleStats st;
  st.radius = cov.radius;
  if (cov.radius == 0) return st;
  std::unordered_map<KWord, std::uint64_t, KWordHash> per_coset;
  for_each_word_of_weight(c.length(), cov.radius, [&](const KWord& x) {
    ++per_coset[c.reduce(x)];
    ++st.words;
    return true;
  });
  st.cosets = per_coset.size();
  for (const auto& [rep, count] : per_coset) ++st.group_sizes[count];
  return st;
}

}  // namespace kleinc
