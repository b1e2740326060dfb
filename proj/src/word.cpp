#include "kleinc/word.hpp"

namespace kleinc {

char to_char(Symbol s) {
  static constexpr char chars[] = {'0', 'a', 'b', 'c'};
  return chars[static_cast<unsigned>(s)];
}

Symbol symbol_from_char(char ch) {
  switch (ch) {
    case '0': return Symbol::zero;
    case 'a': return Symbol::a;
    case 'b': return Symbol::b;
    case 'c': return Symbol::c;
    default: throw std::invalid_argument(std::string("invalid symbol '") + ch + "'");
  }
}

KWord KWord::parse(std::string_view text) {
  KWord w(static_cast<int>(text.size()));
  for (int i = 0; i < w.n_; ++i) w.set(i, symbol_from_char(text[static_cast<std::size_t>(i)]));
  return w;
}

KWord KWord::constant(int n, Symbol s) {
  KWord w(n);
  const auto m = w.mask();
  w.p_ = p_bit(s) ? m : 0;
  w.q_ = q_bit(s) ? m : 0;
  return w;
}

KWord KWord::unit(int n, int pos, Symbol s) {
  KWord w(n);
  if (pos < 0 || pos >= n) throw std::out_of_range("KWord::unit position");
  w.set(pos, s);
  return w;
}

std::strong_ordering operator<=>(const KWord& x, const KWord& y) {
  if (x.n_ != y.n_) return x.n_ <=> y.n_;
  const std::uint64_t diff = (x.p_ ^ y.p_) | (x.q_ ^ y.q_);
  if (diff == 0) return std::strong_ordering::equal;
  const int pos = std::countr_zero(diff);
  // p bit is the more significant coordinate at a position
  const unsigned xp = (x.p_ >> pos) & 1u, yp = (y.p_ >> pos) & 1u;
  if (xp != yp) return xp <=> yp;
  return ((x.q_ >> pos) & 1u) <=> ((y.q_ >> pos) & 1u);
}

std::string KWord::str() const {
  std::string s(static_cast<std::size_t>(n_), '0');
  for (int i = 0; i < n_; ++i) s[static_cast<std::size_t>(i)] = to_char(at(i));
  return s;
}

KWord KWord::concat(const KWord& tail) const {
  if (n_ + tail.n_ > max_length) throw std::invalid_argument("concatenated word longer than 64");
  if (tail.n_ == 0) return *this;
  return KWord(n_ + tail.n_, p_ | (tail.p_ << n_), q_ | (tail.q_ << n_));
}

KWord KWord::sub(int from, int len) const {
  if (from < 0 || len < 0 || from + len > n_) throw std::out_of_range("KWord::sub");
  if (len == 0) return KWord(0);
  return KWord(len, p_ >> from, q_ >> from);
}

std::strong_ordering lex_compare(const KWord& x, const KWord& y) {
  if (x.length() != y.length()) return x.length() <=> y.length();
  const std::uint64_t diff = (x.p() ^ y.p()) | (x.q() ^ y.q());
  if (diff == 0) return std::strong_ordering::equal;
  const int pos = std::countr_zero(diff);
  return static_cast<unsigned>(x.at(pos)) <=> static_cast<unsigned>(y.at(pos));
}

unsigned inner(const KWord& x, const KWord& y) {
  if (x.length() != y.length()) throw std::invalid_argument("inner: length mismatch");
  return static_cast<unsigned>(std::popcount((x.p() & y.q()) ^ (x.q() & y.p())) & 1);
}

}  // namespace kleinc
