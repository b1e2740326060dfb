#include "kleinc/code.hpp"

#include <algorithm>
#include <stdexcept>

namespace kleinc {
namespace {

KWord with_coord(KWord w, int c) {
  const int pos = c >> 1;
  const Symbol s = w.at(pos);
  const unsigned v = static_cast<unsigned>(s) ^ ((c & 1) ? 2u : 1u);
  w.set(pos, static_cast<Symbol>(v));
  return w;
}

KWord swap_planes(const KWord& w) { return KWord(w.length(), w.q(), w.p()); }

// Drops the positions in `removed` and closes up the gaps.
KWord compress(const KWord& w, std::uint64_t removed) {
  const int n = w.length();
  KWord out(n - std::popcount(removed & w.mask()));
  int j = 0;
  for (int i = 0; i < n; ++i) {
    if ((removed >> i) & 1u) continue;
    out.set(j++, w.at(i));
  }
  return out;
}

}  // namespace

KCode::KCode(int n) : n_(n) {
  if (n < 0 || n > KWord::max_length) throw std::invalid_argument("KCode length must be in [0, 64]");
}

KCode KCode::span(int n, std::span<const KWord> generators) {
  KCode c(n);
  for (const auto& g : generators) {
    if (g.length() != n) throw std::invalid_argument("span: generator length mismatch");
    c.insert(g);
  }
  return c;
}

KCode KCode::span(std::span<const KWord> generators) {
  if (generators.empty()) throw std::invalid_argument("span: empty generator list with unspecified length");
  return span(generators.front().length(), generators);
}

KCode KCode::full(int n) {
  KCode c(n);
  for (int i = 0; i < n; ++i) {
    c.insert(KWord::unit(n, i, Symbol::a));
    c.insert(KWord::unit(n, i, Symbol::b));
  }
  return c;
}

std::string KCode::dimension_str() const {
  const int d = dim2();
  return d % 2 == 0 ? std::to_string(d / 2) : std::to_string(d) + "/2";
}

KWord KCode::reduce(const KWord& x) const {
  if (x.length() != n_) throw std::invalid_argument("reduce: length mismatch");
  KWord r = x;
  for (std::size_t i = 0; i < rows_.size(); ++i)
    if (r.coord(pivots_[i])) r ^= rows_[i];
  return r;
}

bool KCode::contains(const KWord& x) const { return reduce(x).is_zero(); }

bool KCode::insert(const KWord& x) {
  KWord r = reduce(x);
  if (r.is_zero()) return false;
  const int piv = r.leading_coord();
  for (auto& row : rows_)
    if (row.coord(piv)) row ^= r;
  const auto it = std::lower_bound(pivots_.begin(), pivots_.end(), piv);
  const auto idx = it - pivots_.begin();
  pivots_.insert(it, piv);
  rows_.insert(rows_.begin() + idx, r);
  return true;
}

std::vector<KWord> KCode::codewords() const {
  require_enumerable();
  std::vector<KWord> out;
  out.reserve(std::size_t{1} << rows_.size());
  for_each_codeword([&](const KWord& w) { out.push_back(w); });
  return out;
}

std::strong_ordering operator<=>(const KCode& x, const KCode& y) {
  if (auto c = x.n_ <=> y.n_; c != 0) return c;
  if (auto c = x.rows_.size() <=> y.rows_.size(); c != 0) return c;
  for (std::size_t i = 0; i < x.rows_.size(); ++i)
    if (auto c = x.rows_[i] <=> y.rows_[i]; c != 0) return c;
  return std::strong_ordering::equal;
}

std::string KCode::key() const {
  std::string k;
  k.reserve(2 + 16 * rows_.size());
  k.push_back(static_cast<char>(n_));
  k.push_back(static_cast<char>(rows_.size()));
  for (const auto& r : rows_) {
    for (const std::uint64_t v : {r.p(), r.q()})
      for (int b = 0; b < 8; ++b) k.push_back(static_cast<char>((v >> (8 * b)) & 0xff));
  }
  return k;
}

void KCode::require_enumerable(bool allow_large) const {
  if (dim2() > 62) throw std::length_error("code too large to enumerate");
  if (!allow_large && dim2() > enumeration_limit)
    throw std::length_error("code has 2^" + std::to_string(dim2()) +
                            " words; enumeration above 2^24 requires explicit opt-in");
}

std::size_t KCodeHash::operator()(const KCode& c) const noexcept {
  std::size_t h = static_cast<std::size_t>(c.length()) * 1315423911u;
  KWordHash wh;
  for (const auto& r : c.basis()) h = (h ^ wh(r)) * 0x100000001B3ull;
  return h;
}

KCode dual(const KCode& c) {
  const int n = c.length();
  std::vector<KWord> swapped;
  swapped.reserve(c.basis().size());
  for (const auto& r : c.basis()) swapped.push_back(swap_planes(r));
  const KCode m = KCode::span(n, swapped);
  const auto& piv = m.pivots();
  KCode out(n);
  for (int f = 0; f < 2 * n; ++f) {
    if (std::binary_search(piv.begin(), piv.end(), f)) continue;
    KWord v = with_coord(KWord(n), f);
    for (std::size_t i = 0; i < piv.size(); ++i)
      if (m.basis()[i].coord(f)) v = with_coord(v, piv[i]);
    out.insert(v);
  }
  return out;
}

KCode even_subcode(const KCode& c) {
  if (is_self_orthogonal(c)) {
    // weight parity is additive on a self-orthogonal code
    KCode out(c.length());
    const KWord* odd = nullptr;
    for (const auto& r : c.basis()) {
      if (r.weight() % 2 == 0) {
        out.insert(r);
      } else if (odd == nullptr) {
        odd = &r;
      } else {
        out.insert(r ^ *odd);
      }
    }
    return out;
  }
  // without self-orthogonality the even words need not be closed under addition
  c.require_enumerable();
  KCode out(c.length());
  std::uint64_t even_words = 0;
  c.for_each_codeword([&](const KWord& w) {
    if (w.weight() % 2 == 0) {
      out.insert(w);
      ++even_words;
    }
  });
  if (even_words != (std::uint64_t{1} << out.dim2()))
    throw std::domain_error("even_subcode: the even-weight codewords do not form a subcode");
  return out;
}

KCode direct_sum(const KCode& c, const KCode& d) {
  KCode out(c.length() + d.length());
  const KWord zc(c.length()), zd(d.length());
  for (const auto& r : c.basis()) out.insert(r.concat(zd));
  for (const auto& r : d.basis()) out.insert(zc.concat(r));
  return out;
}

KCode code_sum(const KCode& c, const KCode& d) {
  if (c.length() != d.length()) throw std::invalid_argument("code_sum: length mismatch");
  KCode out = c;
  for (const auto& r : d.basis()) out.insert(r);
  return out;
}

int min_weight(const KCode& c, bool allow_large) {
  if (c.dim2() == 0) throw std::invalid_argument("min_weight of the zero code is undefined");
  c.require_enumerable(allow_large);
  int best = c.length() + 1;
  c.for_each_codeword([&](const KWord& w) {
    const int wt = w.weight();
    if (wt != 0 && wt < best) best = wt;
  });
  return best;
}

bool is_subcode(const KCode& sub, const KCode& c) {
  if (sub.length() != c.length()) return false;
  return std::all_of(sub.basis().begin(), sub.basis().end(), [&](const KWord& r) { return c.contains(r); });
}

bool is_self_orthogonal(const KCode& c) {
  const auto& b = c.basis();
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = i + 1; j < b.size(); ++j)
      if (inner(b[i], b[j])) return false;
  return true;
}

bool is_self_dual(const KCode& c) { return c.dim2() == c.length() && is_self_orthogonal(c); }

bool is_even(const KCode& c) {
  if (is_self_orthogonal(c)) {
    return std::all_of(c.basis().begin(), c.basis().end(), [](const KWord& r) { return r.weight() % 2 == 0; });
  }
  c.require_enumerable();
  bool even = true;
  c.for_each_codeword([&](const KWord& w) { even = even && (w.weight() % 2 == 0); });
  return even;
}

KCode shorten(const KCode& c, int pos) {
  if (pos < 0 || pos >= c.length()) throw std::out_of_range("shorten: position");
  std::vector<KWord> rows = c.basis();
  for (const int coord : {2 * pos, 2 * pos + 1}) {
    auto it = std::find_if(rows.begin(), rows.end(), [&](const KWord& r) { return r.coord(coord) != 0; });
    if (it == rows.end()) continue;
    const KWord piv = *it;
    rows.erase(it);
    for (auto& r : rows)
      if (r.coord(coord)) r ^= piv;
  }
  std::vector<KWord> out;
  out.reserve(rows.size());
  for (const auto& r : rows) out.push_back(compress(r, std::uint64_t{1} << pos));
  return KCode::span(c.length() - 1, out);
}

KCode puncture(const KCode& c, std::uint64_t removed) {
  removed &= KWord(c.length()).mask();
  std::vector<KWord> out;
  out.reserve(c.basis().size());
  for (const auto& r : c.basis()) out.push_back(compress(r, removed));
  return KCode::span(c.length() - std::popcount(removed), out);
}

KCode section(const KCode& c, int pos, Symbol x) {
  if (pos < 0 || pos >= c.length()) throw std::out_of_range("section: position");
  if (x == Symbol::zero) throw std::invalid_argument("section: glue symbol must be nonzero");
  const KWord probe = KWord::unit(c.length(), pos, x);
  std::vector<KWord> rows = c.basis();
  auto it = std::find_if(rows.begin(), rows.end(), [&](const KWord& r) { return inner(r, probe) != 0; });
  if (it != rows.end()) {
    const KWord piv = *it;
    rows.erase(it);
    for (auto& r : rows)
      if (inner(r, probe)) r ^= piv;
  }
  std::vector<KWord> out;
  out.reserve(rows.size());
  for (const auto& r : rows) out.push_back(compress(r, std::uint64_t{1} << pos));
  return KCode::span(c.length() - 1, out);
}

SplitResult split_weight_one(const KCode& c) {
  SplitResult res{c, 0};
  for (;;) {
    const int n = res.reduced.length();
    int found = -1;
    for (int pos = 0; pos < n && found < 0; ++pos)
      for (const Symbol s : {Symbol::a, Symbol::b, Symbol::c})
        if (res.reduced.contains(KWord::unit(n, pos, s))) {
          found = pos;
          break;
        }
    if (found < 0) return res;
    res.reduced = shorten(res.reduced, found);
    ++res.gamma_count;
  }
}

}  // namespace kleinc
