#include "kleinc/canon.hpp"

#include <algorithm>
#include <numeric>

#include "kleinc/enumerators.hpp"

namespace kleinc {
namespace {

std::uint64_t mix(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int size) : parent(static_cast<std::size_t>(size)) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
  }
};

// Point permutations act on indices 3*pos + (symbol - 1).
using PointPerm = std::vector<int>;

PointPerm to_point_perm(const GroupElement& g) {
  const int n = g.length();
  PointPerm p(static_cast<std::size_t>(3 * n));
  for (int i = 0; i < n; ++i)
    for (int s = 1; s < 4; ++s)
      p[static_cast<std::size_t>(3 * i + s - 1)] =
          3 * g.sigma()[static_cast<std::size_t>(i)] + static_cast<int>(g.tau()[static_cast<std::size_t>(i)][static_cast<std::size_t>(s)]) - 1;
  return p;
}

GroupElement from_point_perm(int n, const PointPerm& p) {
  std::vector<int> sigma(static_cast<std::size_t>(n));
  std::vector<SymbolPerm> tau(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    sigma[static_cast<std::size_t>(i)] = p[static_cast<std::size_t>(3 * i)] / 3;
    tau[static_cast<std::size_t>(i)][0] = Symbol::zero;
    for (int s = 1; s < 4; ++s)
      tau[static_cast<std::size_t>(i)][static_cast<std::size_t>(s)] = static_cast<Symbol>(p[static_cast<std::size_t>(3 * i + s - 1)] % 3 + 1);
  }
  return GroupElement(std::move(sigma), std::move(tau));
}

class Searcher {
 public:
  Searcher(const KCode& code, const CanonOptions& opts) : code_(code), n_(code.length()), opts_(opts) { build_graph(); }

  CanonResult run() {
    std::vector<int> col(static_cast<std::size_t>(vcount_));
    for (int v = 0; v < vcount_; ++v) col[static_cast<std::size_t>(v)] = v < n_ ? 0 : (v < 4 * n_ ? n_ : 4 * n_);
    std::vector<int> path;
    dfs(std::move(col), path);

    CanonResult res;
    res.canonical = best_image_;
    res.labeling = best_g_;
    res.nodes = nodes_;
    BigInt order = 1;
    for (std::size_t k = 0; k < first_path_.size(); ++k) {
      const std::vector<int> prefix(first_path_.begin(), first_path_.begin() + static_cast<std::ptrdiff_t>(k));
      UnionFind uf = orbits_fixing(prefix);
      const int root = uf.find(first_path_[k]);
      int size = 0;
      for (int p = 0; p < 3 * n_; ++p) size += uf.find(p) == root;
      order *= size;
    }
    res.aut.order = order;
    for (const auto& g : gens_) res.aut.generators.push_back(from_point_perm(n_, g));
    return res;
  }

 private:
  void build_graph() {
    // Smallest weight bound whose codewords span the code.
    std::vector<KWord> words;
    if (code_.dim2() > 0) {
      std::vector<std::vector<KWord>> by_weight(static_cast<std::size_t>(n_) + 1);
      code_.for_each_codeword([&](const KWord& w) {
        if (!w.is_zero()) by_weight[static_cast<std::size_t>(w.weight())].push_back(w);
      });
      KCode sp(n_);
      for (int w = 1; w <= n_ && sp.dim2() < code_.dim2(); ++w) {
        for (const auto& x : by_weight[static_cast<std::size_t>(w)]) {
          sp.insert(x);
          words.push_back(x);
        }
      }
    }
    vcount_ = 4 * n_ + static_cast<int>(words.size());
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(vcount_));
    auto link = [&](int a, int b) {
      adj[static_cast<std::size_t>(a)].push_back(b);
      adj[static_cast<std::size_t>(b)].push_back(a);
    };
    for (int i = 0; i < n_; ++i)
      for (int s = 1; s < 4; ++s) link(i, n_ + 3 * i + s - 1);
    for (std::size_t k = 0; k < words.size(); ++k) {
      const int v = 4 * n_ + static_cast<int>(k);
      std::uint64_t sup = words[k].support();
      while (sup) {
        const int i = std::countr_zero(sup);
        sup &= sup - 1;
        link(v, n_ + 3 * i + static_cast<int>(words[k].at(i)) - 1);
      }
    }
    offsets_.assign(static_cast<std::size_t>(vcount_) + 1, 0);
    for (int v = 0; v < vcount_; ++v)
      offsets_[static_cast<std::size_t>(v) + 1] = offsets_[static_cast<std::size_t>(v)] + static_cast<int>(adj[static_cast<std::size_t>(v)].size());
    nbrs_.reserve(static_cast<std::size_t>(offsets_.back()));
    for (const auto& a : adj) nbrs_.insert(nbrs_.end(), a.begin(), a.end());
    keys_.resize(static_cast<std::size_t>(vcount_));
  }

  // Colours are cell start indices, so splitting keeps cells in place.
  void refine(std::vector<int>& col) {
    int cells = count_cells(col);
    for (;;) {
      for (int v = 0; v < vcount_; ++v) {
        std::uint64_t h = 0;
        for (int e = offsets_[static_cast<std::size_t>(v)]; e < offsets_[static_cast<std::size_t>(v) + 1]; ++e)
          h += mix(static_cast<std::uint64_t>(col[static_cast<std::size_t>(nbrs_[static_cast<std::size_t>(e)])]));
        keys_[static_cast<std::size_t>(v)] = {col[static_cast<std::size_t>(v)], h, v};
      }
      std::sort(keys_.begin(), keys_.end());
      int start = 0;
      for (int i = 0; i < vcount_; ++i) {
        const auto& k = keys_[static_cast<std::size_t>(i)];
        if (i > 0) {
          const auto& prev = keys_[static_cast<std::size_t>(i) - 1];
          if (std::get<0>(k) != std::get<0>(prev) || std::get<1>(k) != std::get<1>(prev)) start = i;
        }
        col[static_cast<std::size_t>(std::get<2>(k))] = start;
      }
      const int now = count_cells(col);
      if (now == cells) return;
      cells = now;
    }
  }

  static int count_cells(const std::vector<int>& col) {
    std::vector<int> sorted(col);
    std::sort(sorted.begin(), sorted.end());
    return static_cast<int>(std::unique(sorted.begin(), sorted.end()) - sorted.begin());
  }

  UnionFind orbits_fixing(const std::vector<int>& fixed) const {
    UnionFind uf(3 * n_);
    for (const auto& g : gens_) {
      bool fixes = true;
      for (const int v : fixed) fixes = fixes && g[static_cast<std::size_t>(v)] == v;
      if (!fixes) continue;
      for (int p = 0; p < 3 * n_; ++p) uf.unite(p, g[static_cast<std::size_t>(p)]);
    }
    return uf;
  }

  void dfs(std::vector<int> col, std::vector<int>& path) {
    if (++nodes_ > opts_.node_limit) throw BudgetExceeded("canonical form search exceeded its node budget");
    refine(col);

    // target: smallest non-singleton point cell, first by colour on ties
    std::vector<int> size(static_cast<std::size_t>(vcount_), 0);
    for (int p = n_; p < 4 * n_; ++p) ++size[static_cast<std::size_t>(col[static_cast<std::size_t>(p)])];
    int target = -1;
    for (int c = n_; c < 4 * n_; ++c)
      if (size[static_cast<std::size_t>(c)] > 1 && (target < 0 || size[static_cast<std::size_t>(c)] < size[static_cast<std::size_t>(target)])) target = c;
    if (target < 0) {
      leaf(col, path);
      return;
    }
    std::vector<int> members;
    for (int p = n_; p < 4 * n_; ++p)
      if (col[static_cast<std::size_t>(p)] == target) members.push_back(p - n_);

    std::vector<int> explored;
    std::size_t gens_seen = static_cast<std::size_t>(-1);
    UnionFind uf(0);
    for (const int w : members) {
      if (!explored.empty()) {
        if (gens_seen != gens_.size()) {
          uf = orbits_fixing(path);
          gens_seen = gens_.size();
        }
        const int r = uf.find(w);
        if (std::any_of(explored.begin(), explored.end(), [&](int e) { return uf.find(e) == r; })) continue;
      }
      explored.push_back(w);
      std::vector<int> child = col;
      for (int p = n_; p < 4 * n_; ++p)
        if (p - n_ != w && child[static_cast<std::size_t>(p)] == target) child[static_cast<std::size_t>(p)] = target + 1;
      for (int v = 4 * n_; v < vcount_; ++v)
        if (child[static_cast<std::size_t>(v)] == target) child[static_cast<std::size_t>(v)] = target + 1;
      path.push_back(w);
      dfs(std::move(child), path);
      path.pop_back();
      if (jump_level_ >= 0) {
        if (static_cast<int>(path.size()) > jump_level_) return;
        jump_level_ = -1;
      }
    }
  }

  void leaf(const std::vector<int>& col, const std::vector<int>& path) {
    std::vector<int> label(static_cast<std::size_t>(3 * n_));
    for (int p = 0; p < 3 * n_; ++p) label[static_cast<std::size_t>(p)] = col[static_cast<std::size_t>(n_ + p)] - n_;
    // blocks ordered by their smallest point label
    std::vector<int> order(static_cast<std::size_t>(n_));
    std::iota(order.begin(), order.end(), 0);
    auto min_label = [&](int i) {
      return std::min({label[static_cast<std::size_t>(3 * i)], label[static_cast<std::size_t>(3 * i + 1)], label[static_cast<std::size_t>(3 * i + 2)]});
    };
    std::sort(order.begin(), order.end(), [&](int x, int y) { return min_label(x) < min_label(y); });
    std::vector<int> sigma(static_cast<std::size_t>(n_));
    for (int k = 0; k < n_; ++k) sigma[static_cast<std::size_t>(order[static_cast<std::size_t>(k)])] = k;
    std::vector<SymbolPerm> tau(static_cast<std::size_t>(n_));
    std::string cert(static_cast<std::size_t>(3 * n_), '\0');
    for (int i = 0; i < n_; ++i) {
      std::array<int, 3> s{1, 2, 3};
      std::sort(s.begin(), s.end(), [&](int x, int y) { return label[static_cast<std::size_t>(3 * i + x - 1)] < label[static_cast<std::size_t>(3 * i + y - 1)]; });
      tau[static_cast<std::size_t>(i)][0] = Symbol::zero;
      for (int r = 0; r < 3; ++r) {
        tau[static_cast<std::size_t>(i)][static_cast<std::size_t>(s[static_cast<std::size_t>(r)])] = static_cast<Symbol>(r + 1);
        cert[static_cast<std::size_t>(label[static_cast<std::size_t>(3 * i + s[static_cast<std::size_t>(r)] - 1)])] =
            static_cast<char>(sigma[static_cast<std::size_t>(i)]);
      }
    }
    GroupElement g(std::move(sigma), std::move(tau));
    KCode image = g.apply(code_);
    cert += image.key();

    if (!have_first_) {
      have_first_ = true;
      first_cert_ = best_cert_ = cert;
      first_label_ = best_label_ = label;
      first_path_ = path;
      best_image_ = std::move(image);
      best_g_ = std::move(g);
      return;
    }
    if (cert == first_cert_) {
      add_automorphism(label, first_label_);
      std::size_t k = 0;
      while (k < path.size() && k < first_path_.size() && path[k] == first_path_[k]) ++k;
      jump_level_ = static_cast<int>(k);
      return;
    }
    if (cert == best_cert_) {
      add_automorphism(label, best_label_);
      return;
    }
    if (cert < best_cert_) {
      best_cert_ = std::move(cert);
      best_label_ = std::move(label);
      best_image_ = std::move(image);
      best_g_ = std::move(g);
    }
  }

  // The automorphism sending the point labelled l at this leaf to the point
  // labelled l at the reference leaf.
  void add_automorphism(const std::vector<int>& label, const std::vector<int>& ref_label) {
    std::vector<int> by_label(static_cast<std::size_t>(3 * n_));
    for (int p = 0; p < 3 * n_; ++p) by_label[static_cast<std::size_t>(ref_label[static_cast<std::size_t>(p)])] = p;
    PointPerm g(static_cast<std::size_t>(3 * n_));
    bool identity = true;
    for (int p = 0; p < 3 * n_; ++p) {
      g[static_cast<std::size_t>(p)] = by_label[static_cast<std::size_t>(label[static_cast<std::size_t>(p)])];
      identity = identity && g[static_cast<std::size_t>(p)] == p;
    }
    if (!identity) gens_.push_back(std::move(g));
  }

  const KCode& code_;
  int n_;
  CanonOptions opts_;
  int vcount_ = 0;
  std::vector<int> offsets_, nbrs_;
  std::vector<std::tuple<int, std::uint64_t, int>> keys_;

  std::uint64_t nodes_ = 0;
  bool have_first_ = false;
  std::string first_cert_, best_cert_;
  std::vector<int> first_label_, best_label_, first_path_;
  KCode best_image_;
  GroupElement best_g_;
  std::vector<PointPerm> gens_;
  int jump_level_ = -1;
};

}  // namespace

CanonResult canonical_form(const KCode& c, const CanonOptions& opts) {
  if (c.length() == 0) return CanonResult{c, GroupElement::identity(0), AutResult{1, {}}, 0};
  return Searcher(c, opts).run();
}

KCode canonical(const KCode& c) { return canonical_form(c).canonical; }

AutResult aut(const KCode& c) { return canonical_form(c).aut; }

std::optional<GroupElement> equivalent(const KCode& c, const KCode& d) {
  if (c.length() != d.length()) throw std::invalid_argument("equivalent: length mismatch");
  if (c.dim2() != d.dim2()) return std::nullopt;
  if (invariant_key(c) != invariant_key(d)) return std::nullopt;
  const CanonResult rc = canonical_form(c);
  const CanonResult rd = canonical_form(d);
  if (rc.canonical != rd.canonical) return std::nullopt;
  return rd.labeling.inverse() * rc.labeling;
}

std::string invariant_key(const KCode& c) {
  const int n = c.length();
  std::vector<std::array<std::uint32_t, 3>> cols(static_cast<std::size_t>(n), {0, 0, 0});
  std::vector<std::uint32_t> weights(static_cast<std::size_t>(n) + 1, 0);
  c.for_each_codeword([&](const KWord& w) {
    ++weights[static_cast<std::size_t>(w.weight())];
    std::uint64_t s = w.support();
    while (s) {
      const int i = std::countr_zero(s);
      s &= s - 1;
      ++cols[static_cast<std::size_t>(i)][static_cast<std::size_t>(w.at(i)) - 1];
    }
  });
  for (auto& col : cols) std::sort(col.begin(), col.end());
  std::sort(cols.begin(), cols.end());
  std::string key = std::to_string(n) + "|";
  for (const auto w : weights) key += std::to_string(w) + ",";
  key += "|";
  for (const auto& col : cols) key += std::to_string(col[0]) + "." + std::to_string(col[1]) + "." + std::to_string(col[2]) + ";";
  return key;
}

std::vector<int> point_orbits(int n, const std::vector<GroupElement>& gens) {
  UnionFind uf(3 * n);
  for (const auto& g : gens) {
    const auto p = to_point_perm(g);
    for (int i = 0; i < 3 * n; ++i) uf.unite(i, p[static_cast<std::size_t>(i)]);
  }
  std::vector<int> rep(static_cast<std::size_t>(3 * n));
  for (int i = 0; i < 3 * n; ++i) rep[static_cast<std::size_t>(i)] = uf.find(i);
  return rep;
}

}  // namespace kleinc
