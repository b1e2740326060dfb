#include "kleinc/search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace kleinc {
namespace {

using Clock = std::chrono::steady_clock;

// Words of length n <= 13 packed as p | q << n.
struct Packing {
  int n;
  std::uint64_t mask;

  int weight(std::uint64_t k) const { return std::popcount((k | (k >> n)) & mask); }
  bool orthogonal(std::uint64_t x, std::uint64_t y) const {
    const std::uint64_t px = x & mask, qx = x >> n, py = y & mask, qy = y >> n;
    return (std::popcount((px & qy) ^ (qx & py)) & 1) == 0;
  }
  KWord word(std::uint64_t k) const { return KWord(n, k & mask, k >> n); }
  std::uint64_t key(const KWord& w) const { return w.p() | (w.q() << n); }
};

constexpr int table_limit = 13;

struct Shared {
  Clock::time_point start;
  double budget = 0;
  std::uint64_t node_limit = 0;
  bool exhaustive = false;
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<std::uint64_t> solutions{0};
  std::atomic<bool> out_of_budget{false};
  // index of the earliest task that produced a witness
  std::atomic<std::size_t> best_task{std::numeric_limits<std::size_t>::max()};
  std::mutex mu;
  std::optional<KCode> witness;
  std::size_t witness_task = std::numeric_limits<std::size_t>::max();

  bool budget_hit() {
    if (out_of_budget.load(std::memory_order_relaxed)) return true;
    const auto k = nodes.load(std::memory_order_relaxed);
    if (node_limit != 0 && k >= node_limit) {
      out_of_budget = true;
      return true;
    }
    if (budget > 0 && (k & 1023) == 0) {
      const double el = std::chrono::duration<double>(Clock::now() - start).count();
      if (el > budget) {
        out_of_budget = true;
        return true;
      }
    }
    return false;
  }

  void record(std::size_t task, const KCode& c) {
    solutions.fetch_add(1, std::memory_order_relaxed);
    std::lock_guard lock(mu);
    if (task < witness_task) {
      witness_task = task;
      witness = c;
      std::size_t cur = best_task.load();
      while (task < cur && !best_task.compare_exchange_weak(cur, task)) {
      }
    }
  }
};

// One subtree: the first two generators are fixed, the rest come from the
// table of good cosets.
struct TableTask {
  std::uint64_t x1, x2;
  int w;
};

class TableSearcher {
 public:
  TableSearcher(const Packing& pk, bool even, Shared& sh, std::size_t task)
      : pk_(pk), even_(even), sh_(sh), task_(task) {}

  // Returns true when the search should stop.
  bool run(const TableTask& t) {
    const int n = pk_.n;
    std::vector<std::uint64_t> basis{t.x1, t.x2};
    if (n == 2) return leaf(basis);
    const std::uint64_t p1 = std::uint64_t{1} << std::countr_zero(t.x1);
    const std::uint64_t p2 = std::uint64_t{1} << std::countr_zero(t.x2);
    const std::uint64_t x12 = t.x1 ^ t.x2;
    std::vector<std::uint64_t> table;
    const std::uint64_t total = std::uint64_t{1} << (2 * n);
    for (std::uint64_t y = 1; y < total; ++y) {
      if (y & (p1 | p2)) continue;
      if (even_ && (pk_.weight(y) & 1)) continue;
      if (pk_.weight(y) < t.w || pk_.weight(y ^ t.x1) < t.w || pk_.weight(y ^ t.x2) < t.w ||
          pk_.weight(y ^ x12) < t.w)
        continue;
      if (!pk_.orthogonal(y, t.x1) || !pk_.orthogonal(y, t.x2)) continue;
      table.push_back(y);
    }
    return dfs(basis, table);
  }

 private:
  bool stop() const {
    if (sh_.out_of_budget.load(std::memory_order_relaxed)) return true;
    return !sh_.exhaustive && sh_.best_task.load(std::memory_order_relaxed) <= task_;
  }

  bool leaf(const std::vector<std::uint64_t>& basis) {
    KCode c(pk_.n);
    for (auto k : basis) c.insert(pk_.word(k));
    sh_.record(task_, c);
    return !sh_.exhaustive;
  }

  bool dfs(std::vector<std::uint64_t>& basis, const std::vector<std::uint64_t>& table) {
    const int n = pk_.n;
    const int dim2 = static_cast<int>(basis.size());
    if (dim2 == n) return leaf(basis);
    const std::size_t need = (std::size_t{1} << (n - dim2)) - 1;
    if (table.size() < need) return false;
    std::vector<char> alive(table.size(), 1);
    std::size_t remaining = table.size();
    std::vector<std::uint64_t> next;
    for (std::size_t i = 0; i < table.size(); ++i) {
      if (remaining < need) break;
      sh_.nodes.fetch_add(1, std::memory_order_relaxed);
      if (sh_.budget_hit() || stop()) return true;
      const std::uint64_t x = table[i];
      const std::uint64_t pbit = std::uint64_t{1} << std::countr_zero(x);
      next.clear();
      for (std::size_t j = i + 1; j < table.size(); ++j) {
        const std::uint64_t y = table[j];
        if (!alive[j] || (y & pbit) || !pk_.orthogonal(x, y)) continue;
        const std::uint64_t z = y ^ x;
        const auto it = std::lower_bound(table.begin(), table.end(), z);
        if (it == table.end() || *it != z || !alive[static_cast<std::size_t>(it - table.begin())]) continue;
        next.push_back(y);
      }
      if (next.size() + 1 >= need) {
        basis.push_back(x);
        const std::vector<std::uint64_t> child = next;
        const bool done = dfs(basis, child);
        basis.pop_back();
        if (done) return true;
      }
      alive[i] = 0;
      --remaining;
    }
    return false;
  }

  const Packing& pk_;
  bool even_;
  Shared& sh_;
  std::size_t task_;
};

std::vector<TableTask> table_tasks(const Packing& pk, bool even, int d) {
  const int n = pk.n;
  std::vector<TableTask> tasks;
  for (int w = std::max(d, 1); w <= n; ++w) {
    if (even && w % 2 != 0) continue;
    const std::uint64_t x1 = (std::uint64_t{1} << w) - 1;  // a^w 0^(n-w)
    for (int nbc = 0; nbc <= w; nbc += 2)
      for (int na = 0; na + nbc <= w; ++na) {
        const int n0 = w - na - nbc;
        if (n0 < na) continue;
        for (int t = 0; t <= n - w; ++t) {
          KWord y(n);
          for (int i = n0; i < n0 + na; ++i) y.set(i, Symbol::a);
          for (int i = n0 + na; i < w; ++i) y.set(i, Symbol::b);
          for (int i = w; i < w + t; ++i) y.set(i, Symbol::a);
          std::uint64_t x2 = pk.key(y);
          if (x2 & 1u) x2 ^= x1;  // reduce against the pivot of x1
          if (x2 == 0) continue;
          if (pk.weight(x2) < w || pk.weight(x2 ^ x1) < w) continue;
          if (even && pk.weight(x2) % 2 != 0) continue;
          tasks.push_back({x1, x2, w});
        }
      }
  }
  return tasks;
}

void run_table(const Packing& pk, bool even, int d, int jobs, Shared& sh) {
  const int n = pk.n;
  if (n == 1) {
    // only gamma_1, weight 1
    if (!even && d <= 1) {
      KCode c(1);
      c.insert(KWord::parse("a"));
      sh.record(0, c);
    }
    return;
  }
  const auto tasks = table_tasks(pk, even, d);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= tasks.size()) return;
      if (sh.out_of_budget) return;
      if (!sh.exhaustive && sh.best_task.load() < i) continue;
      TableSearcher(pk, even, sh, i).run(tasks[i]);
    }
  };
  const int threads = std::max(1, jobs);
  if (threads == 1) {
    worker();
    return;
  }
  std::vector<std::thread> pool;
  for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
}

// Lengths beyond the table: walk C-perp/C lazily and test each coset by
// enumerating it. Complete in principle, hopeless without a budget.
class LazySearcher {
 public:
  LazySearcher(int n, bool even, int w, Shared& sh) : n_(n), even_(even), w_(w), sh_(sh) {}

  bool dfs(const KCode& c) {
    if (c.dim2() == n_) {
      sh_.record(0, c);
      return !sh_.exhaustive;
    }
    const KCode d = dual(c);
    std::vector<KWord> comp;
    KCode acc = c;
    for (const auto& r : d.basis())
      if (acc.insert(r)) comp.push_back(c.reduce(r));
    const std::uint64_t count = comp.size() >= 63 ? std::numeric_limits<std::uint64_t>::max()
                                                  : (std::uint64_t{1} << comp.size());
    KWord x(n_);
    for (std::uint64_t i = 1; i < count; ++i) {
      x ^= comp[static_cast<std::size_t>(std::countr_zero(i))];
      sh_.nodes.fetch_add(1, std::memory_order_relaxed);
      if (sh_.budget_hit()) return true;
      if (even_ && x.weight() % 2 != 0) continue;
      bool good = true;
      c.for_each_codeword([&](const KWord& cw) { good = good && (cw ^ x).weight() >= w_; });
      if (!good) continue;
      KCode child = c;
      child.insert(x);
      if (dfs(child)) return true;
    }
    return false;
  }

 private:
  int n_;
  bool even_;
  int w_;
  Shared& sh_;
};

}  // namespace

const char* to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::Found: return "found";
    case SearchStatus::ProvenAbsent: return "proven-absent";
    case SearchStatus::BudgetExhausted: return "budget-exhausted";
  }
  return "?";
}

SearchResult search(int n, bool even, int d_target, const SearchOptions& opts) {
  if (n < 1 || n > KWord::max_length) throw std::invalid_argument("search: length must be in [1, 64]");
  if (even && n % 2 != 0) throw std::invalid_argument("search: even self-dual codes need even length");
  if (n > table_limit && opts.budget_seconds <= 0 && opts.node_limit == 0)
    throw std::invalid_argument("search: lengths above 13 require a budget");
  Shared sh;
  sh.start = Clock::now();
  sh.budget = opts.budget_seconds;
  sh.node_limit = opts.node_limit;
  sh.exhaustive = opts.exhaustive;

  if (n <= table_limit) {
    const Packing pk{n, (std::uint64_t{1} << n) - 1};
    run_table(pk, even, d_target, opts.jobs, sh);
  } else {
    for (int w = std::max(d_target, 1); w <= n && !sh.out_of_budget; ++w) {
      if (even && w % 2 != 0) continue;
      KCode c(n);
      KWord x1(n);
      for (int i = 0; i < w; ++i) x1.set(i, Symbol::a);
      c.insert(x1);
      if (LazySearcher(n, even, w, sh).dfs(c)) break;
    }
  }

  SearchResult r;
  r.nodes = sh.nodes.load();
  r.solutions = sh.solutions.load();
  r.code = sh.witness;
  r.seconds = std::chrono::duration<double>(Clock::now() - sh.start).count();
  if (r.code)
    r.status = SearchStatus::Found;
  else
    r.status = sh.out_of_budget ? SearchStatus::BudgetExhausted : SearchStatus::ProvenAbsent;
  return r;
}

}  // namespace kleinc
