#include "kleinc/group.hpp"

#include <sstream>
#include <stdexcept>

namespace kleinc {

const std::array<SymbolPerm, 6>& all_symbol_perms() {
  using S = Symbol;
  static const std::array<SymbolPerm, 6> perms = {{
      {S::zero, S::a, S::b, S::c},
      {S::zero, S::a, S::c, S::b},
      {S::zero, S::b, S::a, S::c},
      {S::zero, S::b, S::c, S::a},
      {S::zero, S::c, S::a, S::b},
      {S::zero, S::c, S::b, S::a},
  }};
  return perms;
}

GroupElement::GroupElement(std::vector<int> sigma, std::vector<SymbolPerm> tau)
    : sigma_(std::move(sigma)), tau_(std::move(tau)) {
  const int n = length();
  if (static_cast<int>(tau_.size()) != n) throw std::invalid_argument("GroupElement: sigma and tau lengths differ");
  std::vector<bool> seen(static_cast<std::size_t>(n));
  for (const int s : sigma_) {
    if (s < 0 || s >= n || seen[static_cast<std::size_t>(s)]) throw std::invalid_argument("GroupElement: sigma is not a permutation");
    seen[static_cast<std::size_t>(s)] = true;
  }
  for (const auto& t : tau_) {
    if (t[0] != Symbol::zero) throw std::invalid_argument("GroupElement: tau must fix 0");
    unsigned mask = 0;
    for (int s = 1; s < 4; ++s) mask |= 1u << static_cast<unsigned>(t[static_cast<std::size_t>(s)]);
    if (mask != 0b1110) throw std::invalid_argument("GroupElement: tau is not a permutation of {a,b,c}");
  }
}

GroupElement GroupElement::identity(int n) {
  std::vector<int> sigma(static_cast<std::size_t>(n));
  std::iota(sigma.begin(), sigma.end(), 0);
  return GroupElement(std::move(sigma), std::vector<SymbolPerm>(static_cast<std::size_t>(n), all_symbol_perms()[0]));
}

KWord GroupElement::apply(const KWord& x) const {
  if (x.length() != length()) throw std::invalid_argument("GroupElement::apply: length mismatch");
  KWord y(x.length());
  std::uint64_t s = x.support();
  while (s) {
    const int i = std::countr_zero(s);
    s &= s - 1;
    y.set(sigma_[static_cast<std::size_t>(i)], tau_[static_cast<std::size_t>(i)][static_cast<std::size_t>(x.at(i))]);
  }
  return y;
}

KCode GroupElement::apply(const KCode& c) const {
  if (c.length() != length()) throw std::invalid_argument("GroupElement::apply: length mismatch");
  KCode out(c.length());
  for (const auto& r : c.basis()) out.insert(apply(r));
  return out;
}

GroupElement operator*(const GroupElement& g, const GroupElement& h) {
  if (g.length() != h.length()) throw std::invalid_argument("GroupElement composition: length mismatch");
  const int n = g.length();
  std::vector<int> sigma(static_cast<std::size_t>(n));
  std::vector<SymbolPerm> tau(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const int j = h.sigma_[static_cast<std::size_t>(i)];
    sigma[static_cast<std::size_t>(i)] = g.sigma_[static_cast<std::size_t>(j)];
    for (int s = 0; s < 4; ++s)
      tau[static_cast<std::size_t>(i)][static_cast<std::size_t>(s)] =
          g.tau_[static_cast<std::size_t>(j)][static_cast<std::size_t>(h.tau_[static_cast<std::size_t>(i)][static_cast<std::size_t>(s)])];
  }
  return GroupElement(std::move(sigma), std::move(tau));
}

GroupElement GroupElement::inverse() const {
  const int n = length();
  std::vector<int> sigma(static_cast<std::size_t>(n));
  std::vector<SymbolPerm> tau(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const int j = sigma_[static_cast<std::size_t>(i)];
    sigma[static_cast<std::size_t>(j)] = i;
    for (int s = 0; s < 4; ++s)
      tau[static_cast<std::size_t>(j)][static_cast<std::size_t>(tau_[static_cast<std::size_t>(i)][static_cast<std::size_t>(s)])] = static_cast<Symbol>(s);
  }
  return GroupElement(std::move(sigma), std::move(tau));
}

bool GroupElement::is_identity() const { return *this == identity(length()); }

std::string GroupElement::str() const {
  std::ostringstream out;
  out << "sigma=[";
  for (int i = 0; i < length(); ++i) out << (i ? "," : "") << sigma_[static_cast<std::size_t>(i)];
  out << "]; tau=[";
  for (int i = 0; i < length(); ++i) {
    if (i) out << ',';
    for (int s = 1; s < 4; ++s) out << to_char(tau_[static_cast<std::size_t>(i)][static_cast<std::size_t>(s)]);
  }
  out << ']';
  return out.str();
}

namespace {

std::string_view bracketed(std::string_view text, std::string_view label) {
  const auto at = text.find(label);
  if (at == std::string_view::npos) throw std::invalid_argument("GroupElement::parse: missing " + std::string(label));
  const auto open = text.find('[', at);
  const auto close = text.find(']', open);
  if (open == std::string_view::npos || close == std::string_view::npos)
    throw std::invalid_argument("GroupElement::parse: unbalanced brackets");
  return text.substr(open + 1, close - open - 1);
}

std::vector<std::string> split_commas(std::string_view s) {
  std::vector<std::string> out;
  std::string cur;
  for (const char ch : s) {
    if (ch == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (ch != ' ') {
      cur.push_back(ch);
    }
  }
  if (!cur.empty() || !out.empty()) out.push_back(cur);
  return out;
}

}  // namespace

GroupElement GroupElement::parse(std::string_view text) {
  std::vector<int> sigma;
  for (const auto& tok : split_commas(bracketed(text, "sigma"))) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("GroupElement::parse: bad sigma entry '" + tok + "'");
    }
    if (used != tok.size()) throw std::invalid_argument("GroupElement::parse: bad sigma entry '" + tok + "'");
    sigma.push_back(v);
  }
  std::vector<SymbolPerm> tau;
  for (const auto& tok : split_commas(bracketed(text, "tau"))) {
    if (tok.size() != 3) throw std::invalid_argument("GroupElement::parse: tau entries must have 3 symbols");
    SymbolPerm t{Symbol::zero, symbol_from_char(tok[0]), symbol_from_char(tok[1]), symbol_from_char(tok[2])};
    tau.push_back(t);
  }
  return GroupElement(std::move(sigma), std::move(tau));
}

GroupElement random_group_element(int n, std::mt19937_64& rng) {
  std::vector<int> sigma(static_cast<std::size_t>(n));
  std::iota(sigma.begin(), sigma.end(), 0);
  std::shuffle(sigma.begin(), sigma.end(), rng);
  std::uniform_int_distribution<int> pick(0, 5);
  std::vector<SymbolPerm> tau(static_cast<std::size_t>(n));
  for (auto& t : tau) t = all_symbol_perms()[static_cast<std::size_t>(pick(rng))];
  return GroupElement(std::move(sigma), std::move(tau));
}

}  // namespace kleinc
