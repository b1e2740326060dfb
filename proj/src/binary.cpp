#include "kleinc/binary.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

#include "kleinc/io.hpp"

namespace kleinc {

BinWord::BinWord(int m) : m_(m) {
  if (m < 0 || m > max_length) throw std::invalid_argument("BinWord length must be in [0, 256]");
}

BinWord BinWord::parse(std::string_view bits) {
  BinWord w(static_cast<int>(bits.size()));
  for (int i = 0; i < w.m_; ++i) {
    const char ch = bits[static_cast<std::size_t>(i)];
    if (ch != '0' && ch != '1') throw std::invalid_argument(std::string("invalid binary digit '") + ch + "'");
    w.set(i, ch == '1');
  }
  return w;
}

void BinWord::set(int i, bool v) {
  if (i < 0 || i >= m_) throw std::out_of_range("BinWord::set");
  auto& limb = w_[static_cast<std::size_t>(i >> 6)];
  const std::uint64_t bit = std::uint64_t{1} << (i & 63);
  limb = v ? (limb | bit) : (limb & ~bit);
}

int BinWord::weight() const {
  int s = 0;
  for (auto l : w_) s += std::popcount(l);
  return s;
}

int BinWord::lowest() const {
  for (std::size_t i = 0; i < w_.size(); ++i)
    if (w_[i]) return static_cast<int>(64 * i) + std::countr_zero(w_[i]);
  return -1;
}

BinWord& BinWord::operator^=(const BinWord& o) {
  if (o.m_ != m_) throw std::invalid_argument("BinWord: length mismatch");
  for (std::size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
  return *this;
}

std::strong_ordering operator<=>(const BinWord& x, const BinWord& y) {
  if (x.m_ != y.m_) return x.m_ <=> y.m_;
  const int i = (x ^ y).lowest();
  if (i < 0) return std::strong_ordering::equal;
  return x.get(i) <=> y.get(i);
}

std::string BinWord::str() const {
  std::string s(static_cast<std::size_t>(m_), '0');
  for (int i = 0; i < m_; ++i)
    if (get(i)) s[static_cast<std::size_t>(i)] = '1';
  return s;
}

unsigned dot(const BinWord& x, const BinWord& y) {
  if (x.length() != y.length()) throw std::invalid_argument("dot: length mismatch");
  int s = 0;
  for (int i = 0; i < x.length(); ++i) s += x.get(i) && y.get(i);
  return static_cast<unsigned>(s & 1);
}

BinaryCode::BinaryCode(int m) : m_(m) {
  if (m < 0 || m > BinWord::max_length) throw std::invalid_argument("BinaryCode length must be in [0, 256]");
}

BinaryCode BinaryCode::span(int m, const std::vector<BinWord>& gens) {
  BinaryCode c(m);
  for (const auto& g : gens) c.insert(g);
  return c;
}

BinWord BinaryCode::reduce(const BinWord& x) const {
  if (x.length() != m_) throw std::invalid_argument("BinaryCode::reduce: length mismatch");
  BinWord r = x;
  for (std::size_t i = 0; i < rows_.size(); ++i)
    if (r.get(pivots_[i])) r ^= rows_[i];
  return r;
}

bool BinaryCode::insert(const BinWord& x) {
  const BinWord r = reduce(x);
  if (r.is_zero()) return false;
  const int piv = r.lowest();
  for (auto& row : rows_)
    if (row.get(piv)) row ^= r;
  const auto it = std::lower_bound(pivots_.begin(), pivots_.end(), piv);
  const auto idx = it - pivots_.begin();
  pivots_.insert(it, piv);
  rows_.insert(rows_.begin() + idx, r);
  return true;
}

void BinaryCode::require_enumerable() const {
  if (rows_.size() > 32) throw std::length_error("binary code too large to enumerate");
}

IntPoly binary_we(const BinaryCode& c) {
  IntPoly w(c.length());
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(c.length()) + 1);
  c.for_each_codeword([&](const BinWord& x) { ++counts[static_cast<std::size_t>(x.weight())]; });
  for (int i = 0; i <= c.length(); ++i) w[i] = counts[static_cast<std::size_t>(i)];
  return w;
}

int binary_min_weight(const BinaryCode& c) {
  if (c.dim() == 0) throw std::invalid_argument("min weight of the zero code is undefined");
  int best = c.length() + 1;
  c.for_each_codeword([&](const BinWord& x) {
    const int w = x.weight();
    if (w != 0 && w < best) best = w;
  });
  return best;
}

BinaryCode binary_dual(const BinaryCode& c) {
  // null space of the RREF generator matrix
  const int m = c.length();
  std::vector<int> piv;
  for (const auto& r : c.basis()) piv.push_back(r.lowest());
  BinaryCode out(m);
  for (int f = 0; f < m; ++f) {
    if (std::find(piv.begin(), piv.end(), f) != piv.end()) continue;
    BinWord v(m);
    v.set(f);
    for (std::size_t i = 0; i < piv.size(); ++i)
      if (c.basis()[i].get(f)) v.set(piv[i]);
    out.insert(v);
  }
  return out;
}

bool is_self_orthogonal(const BinaryCode& c) {
  const auto& b = c.basis();
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = i; j < b.size(); ++j)
      if (dot(b[i], b[j])) return false;
  return true;
}

bool is_self_dual(const BinaryCode& c) { return 2 * c.dim() == c.length() && is_self_orthogonal(c); }

bool is_even(const BinaryCode& c) {
  return std::all_of(c.basis().begin(), c.basis().end(), [](const BinWord& r) { return r.weight() % 2 == 0; });
}

bool is_doubly_even(const BinaryCode& c) {
  // weights mod 4 are additive on a self-orthogonal code of even words
  if (is_self_orthogonal(c))
    return std::all_of(c.basis().begin(), c.basis().end(), [](const BinWord& r) { return r.weight() % 4 == 0; });
  bool ok = true;
  c.for_each_codeword([&](const BinWord& x) { ok = ok && x.weight() % 4 == 0; });
  return ok;
}

BinaryCode parse_binary_code(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  int m = -1;
  std::vector<BinWord> words;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    if (line[first] == '#') {
      std::istringstream hdr(line.substr(first + 1));
      std::string kw;
      int len = 0;
      if (hdr >> kw && kw == "length" && hdr >> len) {
        if (m >= 0 && m != len) throw ParseError(lineno, 1, "length header disagrees with earlier rows");
        m = len;
      }
      continue;
    }
    const auto last = line.find_last_not_of(" \t");
    const std::string body = line.substr(first, last - first + 1);
    for (std::size_t i = 0; i < body.size(); ++i)
      if (body[i] != '0' && body[i] != '1')
        throw ParseError(lineno, static_cast<int>(first + i) + 1, std::string("invalid binary digit '") + body[i] + "'");
    if (m >= 0 && static_cast<int>(body.size()) != m)
      throw ParseError(lineno, 1, "row has length " + std::to_string(body.size()) + ", expected " + std::to_string(m));
    m = static_cast<int>(body.size());
    words.push_back(BinWord::parse(body));
  }
  if (m < 0) throw ParseError(lineno, 1, "empty binary code file without length header");
  return BinaryCode::span(m, words);
}

std::string format_binary_code(const BinaryCode& c) {
  std::string out = "# length " + std::to_string(c.length()) + "\n";
  for (const auto& r : c.basis()) out += r.str() + "\n";
  return out;
}

}  // namespace kleinc
