#pragma once

#include <array>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "kleinc/code.hpp"

namespace kleinc {

/// A symbol permutation: images of 0, a, b, c with 0 fixed.
using SymbolPerm = std::array<Symbol, 4>;

/// The six permutations of {a, b, c}, in the order abc, acb, bac, bca, cab, cba.
const std::array<SymbolPerm, 6>& all_symbol_perms();

/// An element (sigma; tau_1..tau_n) of S3^n:S_n. It maps x to y with
/// y_{sigma(i)} = tau_i(x_i). Positions are 0-based.
class GroupElement {
 public:
  GroupElement() = default;
  GroupElement(std::vector<int> sigma, std::vector<SymbolPerm> tau);
  static GroupElement identity(int n);

  int length() const { return static_cast<int>(sigma_.size()); }
  const std::vector<int>& sigma() const { return sigma_; }
  const std::vector<SymbolPerm>& tau() const { return tau_; }

  KWord apply(const KWord& x) const;
  KCode apply(const KCode& c) const;

  /// Composition: (g * h)(x) = g(h(x)).
  friend GroupElement operator*(const GroupElement& g, const GroupElement& h);
  GroupElement inverse() const;
  bool is_identity() const;

  friend bool operator==(const GroupElement&, const GroupElement&) = default;

  /// Text form `sigma=[0,2,1]; tau=[abc,acb,bca]`.
  std::string str() const;
  /// Inverse of str(); throws std::invalid_argument on malformed input.
  static GroupElement parse(std::string_view text);

 private:
  std::vector<int> sigma_;
  std::vector<SymbolPerm> tau_;
};

GroupElement random_group_element(int n, std::mt19937_64& rng);

/// Calls f on every element of S3^n:S_n (6^n n! elements; intended for n <= 4).
template <class F>
void for_each_group_element(int n, F&& f);

}  // namespace kleinc

#include <algorithm>
#include <numeric>

namespace kleinc {

template <class F>
void for_each_group_element(int n, F&& f) {
  std::vector<int> sigma(static_cast<std::size_t>(n));
  std::iota(sigma.begin(), sigma.end(), 0);
  const auto& perms = all_symbol_perms();
  do {
    std::vector<int> idx(static_cast<std::size_t>(n), 0);
    for (;;) {
      std::vector<SymbolPerm> tau(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) tau[static_cast<std::size_t>(i)] = perms[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])];
      f(GroupElement(sigma, std::move(tau)));
      int i = 0;
      while (i < n && ++idx[static_cast<std::size_t>(i)] == 6) idx[static_cast<std::size_t>(i++)] = 0;
      if (i == n) break;
    }
  } while (std::next_permutation(sigma.begin(), sigma.end()));
}

}  // namespace kleinc
