#include "kleinc/classify.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <thread>
#include <unordered_map>

#include "kleinc/standard.hpp"

namespace kleinc {

BigInt mass(int n, bool even) {
  if (n < 0) throw std::invalid_argument("mass: negative length");
  if (even && n % 2 != 0) throw std::invalid_argument("mass: even self-dual codes need even length");
  BigInt m = 1;
  if (even) {
    for (int i = 0; i < n; ++i) m *= (BigInt(1) << i) + 1;
  } else {
    for (int i = 1; i <= n; ++i) m *= (BigInt(1) << i) + 1;
  }
  return m;
}

RationalWE average_we(int n, bool even) {
  const RatPoly u = RatPoly::linear(1, 0);
  const RatPoly up3v = RatPoly::linear(1, 3);
  if (!even) {
    const Rational two_n(BigInt(1) << n);
    RatPoly bracket = u.pow(n) * two_n + up3v.pow(n);
    return bracket * (Rational(mass(n, false)) / (two_n + 1));
  }
  const Rational two_n1(BigInt(1) << (n - 1));
  const RatPoly um3v = RatPoly::linear(1, -3);
  RatPoly bracket = u.pow(n) * two_n1 + (up3v.pow(n) + um3v.pow(n)) * Rational(1, 2);
  return bracket * (Rational(mass(n, true)) / (two_n1 + 1));
}

std::string Skeleton::str() const {
  if (empty()) return "-";
  std::string s;
  auto part = [&](const std::string& name, int mult) {
    if (mult == 0) return;
    if (!s.empty()) s += ' ';
    s += name;
    if (mult > 1) s += "^" + std::to_string(mult);
  };
  for (auto it = delta.rbegin(); it != delta.rend(); ++it) part("d" + std::to_string(it->first), it->second);
  part("e2", epsilon2);
  part("g1", gamma1);
  return s;
}

Skeleton skeleton(const KCode& c) {
  if (!is_self_orthogonal(c)) throw std::invalid_argument("skeleton: code is not self-orthogonal");
  Skeleton sk;
  const SplitResult split = split_weight_one(c);
  sk.gamma1 = split.gamma_count;
  const KCode& r = split.reduced;
  const int n = r.length();
  std::vector<KWord> w2;
  r.for_each_codeword([&](const KWord& w) {
    if (w.weight() == 2) w2.push_back(w);
  });
  std::vector<int> comp(static_cast<std::size_t>(n));
  std::iota(comp.begin(), comp.end(), 0);
  auto root = [&](int x) {
    while (comp[static_cast<std::size_t>(x)] != x) x = comp[static_cast<std::size_t>(x)];
    return x;
  };
  std::vector<bool> covered(static_cast<std::size_t>(n));
  for (const auto& w : w2) {
    const int i = std::countr_zero(w.support());
    const int j = 63 - std::countl_zero(w.support());
    covered[static_cast<std::size_t>(i)] = covered[static_cast<std::size_t>(j)] = true;
    comp[static_cast<std::size_t>(root(i))] = root(j);
  }
  std::map<int, std::vector<int>> members;
  for (int i = 0; i < n; ++i)
    if (covered[static_cast<std::size_t>(i)]) members[root(i)].push_back(i);
  for (const auto& [rt, pos] : members) {
    // two different nonzero symbols at one position mark an epsilon_2
    bool mixed = false;
    for (const int p : pos) {
      unsigned seen = 0;
      for (const auto& w : w2)
        if ((w.support() >> p) & 1u) seen |= 1u << static_cast<unsigned>(w.at(p));
      mixed = mixed || std::popcount(seen) > 1;
    }
    if (mixed) {
      if (pos.size() != 2) throw std::logic_error("skeleton: mixed weight-2 component of size != 2");
      ++sk.epsilon2;
    } else {
      ++sk.delta[static_cast<int>(pos.size())];
    }
  }
  sk.free_positions = static_cast<int>(std::count(covered.begin(), covered.end(), false));
  return sk;
}

std::vector<ChildInfo> children(const KCode& c, const AutResult* aut_in) {
  if (!is_self_dual(c) || !is_even(c)) throw std::invalid_argument("children: code must be even self-dual");
  AutResult local;
  if (aut_in == nullptr) local = aut(c);
  const AutResult& a = aut_in ? *aut_in : local;
  const int n = c.length();
  const std::vector<int> rep = point_orbits(n, a.generators);
  std::vector<ChildInfo> out;
  for (int p = 0; p < 3 * n; ++p) {
    if (rep[static_cast<std::size_t>(p)] != p) continue;
    ChildInfo ci;
    ci.position = p / 3;
    ci.glue = static_cast<Symbol>(p % 3 + 1);
    ci.orbit_size = static_cast<int>(std::count(rep.begin(), rep.end(), p));
    ci.child = section(c, ci.position, ci.glue);
    const SplitResult s = split_weight_one(ci.child);
    ci.primitive = s.reduced;
    ci.gamma_count = s.gamma_count;
    out.push_back(std::move(ci));
  }
  return out;
}

KCode parent(const KCode& d, int k) {
  if (k < 1) throw std::invalid_argument("parent: k must be >= 1");
  if (!is_self_dual(d)) throw std::invalid_argument("parent: code must be self-dual");
  const int m = d.length();
  const KWord zd(m), zk(k);
  KCode out(m + k);
  const KCode dk = delta(k);
  for (const auto& r : dk.basis()) out.insert(zd.concat(r));
  const KWord a_k = KWord::unit(k, 0, Symbol::a);
  const KWord b_k = KWord::constant(k, Symbol::b);
  if (is_even(d)) {
    if (k % 2 != 0) throw std::invalid_argument("parent: an even code needs an even k");
    for (const auto& r : d.basis()) out.insert(r.concat(zk));
    out.insert(zd.concat(b_k));
    return out;
  }
  const ShadowSet s = shadow(d);
  for (const auto& r : s.c0.basis()) out.insert(r.concat(zk));
  out.insert(s.r1.concat(a_k));
  out.insert(s.r2.concat(b_k));
  return out;
}

std::pair<KCode, KCode> neighbors(const KCode& d) {
  if (d.length() % 2 != 0) throw std::invalid_argument("neighbors: length must be even");
  const ShadowSet s = shadow(d);
  if (s.even) throw std::invalid_argument("neighbors: code must be non-even");
  KCode x = s.c0, y = s.c0;
  x.insert(s.r2);
  y.insert(s.r3);
  return {x, y};
}

int Classification::find(const KCode& c) const {
  const auto it = index.find(canonical(c).key());
  return it == index.end() ? -1 : it->second;
}

Classification make_classification(int n, bool even_only, const std::vector<CanonResult>& reps) {
  Classification out;
  out.n = n;
  out.even_only = even_only;
  out.mass_expected = mass(n, even_only);
  for (const auto& r : reps) {
    ClassRecord rec;
    rec.rep = r.canonical;
    rec.aut_order = r.aut.order;
    rec.aut_generators = r.aut.generators;
    rec.we = hamming_we(r.canonical);
    rec.skel = skeleton(r.canonical);
    rec.even = is_even(r.canonical);
    out.classes.push_back(std::move(rec));
  }
  std::sort(out.classes.begin(), out.classes.end(), [](const ClassRecord& x, const ClassRecord& y) {
    for (int i = 1; i <= x.we.n; ++i)
      if (x.we[i] != y.we[i]) return x.we[i] > y.we[i];
    if (x.aut_order != y.aut_order) return x.aut_order < y.aut_order;
    return x.rep < y.rep;
  });
  const BigInt group = BigInt(pow(BigInt(6), static_cast<unsigned>(n))) * factorial(n);
  Rational sum = 0;
  for (std::size_t i = 0; i < out.classes.size(); ++i) {
    sum += Rational(group, out.classes[i].aut_order);
    out.index[out.classes[i].rep.key()] = static_cast<int>(i);
  }
  out.mass_sum = denominator(sum) == 1 ? numerator(sum) : BigInt(-1);
  return out;
}

namespace {

// One orbit representative of Aut(C) on each nonzero class of C-perp / C that
// may extend C (even weight only when `even_only`).
std::vector<KWord> extension_candidates(const KCode& c, const std::vector<GroupElement>& gens, bool even_only) {
  const int n = c.length();
  const KCode d = dual(c);
  KCode q(n);
  for (const auto& r : d.basis()) q.insert(c.reduce(r));
  const int dq = q.dim2();
  if (dq > 26) throw std::length_error("extension_candidates: quotient too large");
  const std::size_t size = std::size_t{1} << dq;
  const auto& qrows = q.basis();
  const auto& qpiv = q.pivots();
  auto index_of = [&](const KWord& y) {
    std::size_t idx = 0;
    for (int k = 0; k < dq; ++k)
      if (y.coord(qpiv[static_cast<std::size_t>(k)])) idx |= std::size_t{1} << k;
    return idx;
  };
  std::vector<KWord> elem(size, KWord(n));
  for (std::size_t i = 1; i < size; ++i) {
    const int low = std::countr_zero(i);
    elem[i] = elem[i & (i - 1)] ^ qrows[static_cast<std::size_t>(low)];
  }
  std::vector<std::uint32_t> parent(size);
  std::iota(parent.begin(), parent.end(), 0u);
  auto find = [&](std::uint32_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  for (const auto& g : gens) {
    for (std::size_t i = 1; i < size; ++i) {
      const std::size_t j = index_of(c.reduce(g.apply(elem[i])));
      std::uint32_t a = find(static_cast<std::uint32_t>(i)), b = find(static_cast<std::uint32_t>(j));
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  std::vector<KWord> out;
  for (std::size_t i = 1; i < size; ++i) {
    if (find(static_cast<std::uint32_t>(i)) != i) continue;
    if (even_only && elem[i].weight() % 2 != 0) continue;
    out.push_back(elem[i]);
  }
  return out;
}

// Canonical form whose automorphism generators act on the canonical code.
CanonResult canonical_form_of_rep(const KCode& c) {
  CanonResult r = canonical_form(c);
  const GroupElement inv = r.labeling.inverse();
  for (auto& g : r.aut.generators) g = r.labeling * g * inv;
  return r;
}

void run_jobs(int jobs, std::size_t count, const std::function<void(std::size_t)>& work) {
  jobs = std::max(1, std::min<int>(jobs, static_cast<int>(count)));
  if (jobs == 1) {
    for (std::size_t i = 0; i < count; ++i) work(i);
    return;
  }
  std::vector<std::thread> pool;
  std::exception_ptr error;
  std::mutex error_mutex;
  for (int t = 0; t < jobs; ++t)
    pool.emplace_back([&, t] {
      try {
        for (std::size_t i = static_cast<std::size_t>(t); i < count; i += static_cast<std::size_t>(jobs)) work(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    });
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

// Deduplicates per-job results in job order so the outcome does not depend
// on thread scheduling.
std::vector<CanonResult> merge_unique(std::vector<std::vector<CanonResult>>& parts) {
  std::unordered_map<std::string, std::size_t> seen;
  std::vector<CanonResult> out;
  for (auto& part : parts)
    for (auto& r : part) {
      const std::string key = r.canonical.key();
      if (seen.emplace(key, out.size()).second) out.push_back(std::move(r));
    }
  return out;
}

}  // namespace

Classification classify(int n, bool even_only, const ClassifyOptions& opts) {
  if (n < 1) throw std::invalid_argument("classify: n must be >= 1");
  if (even_only && n % 2 != 0) throw std::invalid_argument("classify: even self-dual codes need even length");
  std::vector<CanonResult> level{canonical_form_of_rep(KCode(n))};
  for (int dim = 0; dim < n; ++dim) {
    std::vector<std::vector<CanonResult>> parts(level.size());
    run_jobs(opts.jobs, level.size(), [&](std::size_t i) {
      const CanonResult& base = level[i];
      std::unordered_map<std::string, bool> local;
      for (const auto& x : extension_candidates(base.canonical, base.aut.generators, even_only)) {
        KCode ext = base.canonical;
        ext.insert(x);
        CanonResult r = canonical_form_of_rep(ext);
        if (local.emplace(r.canonical.key(), true).second) parts[i].push_back(std::move(r));
      }
    });
    level = merge_unique(parts);
    if (opts.progress)
      opts.progress("n=" + std::to_string(n) + " dim2=" + std::to_string(dim + 1) + ": " + std::to_string(level.size()) +
                    " classes");
  }
  return make_classification(n, even_only, level);
}

Classification classify_via_children(const Classification& even_classes, const ClassifyOptions& opts) {
  if (!even_classes.even_only) throw std::invalid_argument("classify_via_children: needs an even classification");
  std::vector<std::vector<CanonResult>> parts(even_classes.classes.size());
  run_jobs(opts.jobs, even_classes.classes.size(), [&](std::size_t i) {
    const ClassRecord& rec = even_classes.classes[i];
    const AutResult a{rec.aut_order, rec.aut_generators};
    for (const auto& ch : children(rec.rep, &a)) parts[i].push_back(canonical_form_of_rep(ch.child));
  });
  return make_classification(even_classes.n - 1, false, merge_unique(parts));
}

int NeighGraph::loop_count() const {
  return static_cast<int>(std::count_if(edges.begin(), edges.end(), [](const Edge& e) { return e.loop(); }));
}

int NeighGraph::proper_edge_count() const { return static_cast<int>(edges.size()) - loop_count(); }

bool NeighGraph::connected() const {
  if (vertices.empty()) return true;
  std::vector<int> comp(vertices.size());
  std::iota(comp.begin(), comp.end(), 0);
  auto root = [&](int x) {
    while (comp[static_cast<std::size_t>(x)] != x) x = comp[static_cast<std::size_t>(x)];
    return x;
  };
  for (const auto& e : edges) comp[static_cast<std::size_t>(root(e.u))] = root(e.v);
  const int r0 = root(0);
  for (std::size_t i = 0; i < vertices.size(); ++i)
    if (root(static_cast<int>(i)) != r0) return false;
  return true;
}

NeighGraph neighborhood_graph(const Classification& all) {
  if (all.even_only) throw std::invalid_argument("neighborhood_graph: needs the classification of all self-dual codes");
  if (all.n % 2 != 0) throw std::invalid_argument("neighborhood_graph: length must be even");
  NeighGraph g;
  g.n = all.n;
  std::map<int, int> vertex_of;
  for (std::size_t i = 0; i < all.classes.size(); ++i)
    if (all.classes[i].even) {
      vertex_of[static_cast<int>(i)] = static_cast<int>(g.vertices.size());
      g.vertices.push_back(static_cast<int>(i));
    }
  for (std::size_t i = 0; i < all.classes.size(); ++i) {
    if (all.classes[i].even) continue;
    const auto [x, y] = neighbors(all.classes[i].rep);
    const int cx = all.find(x), cy = all.find(y);
    if (cx < 0 || cy < 0) throw std::logic_error("neighborhood_graph: neighbour missing from classification");
    g.edges.push_back({vertex_of.at(cx), vertex_of.at(cy), static_cast<int>(i)});
  }
  return g;
}

}  // namespace kleinc
