#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "kleinc/code.hpp"
#include "kleinc/poly.hpp"

namespace kleinc {

/// A set Y of distinct words of K^n, all of weight k.
struct DesignSlice {
  int n = 0;
  int k = 0;
  std::vector<KWord> Y;
};

/// Validates the weights and rejects duplicates.
DesignSlice make_slice(int n, int k, std::vector<KWord> words);

/// All codewords of weight exactly w.
DesignSlice slice(const KCode& c, int w);

/// x is covered by y when y agrees with x on every nonzero position of x.
bool covers(const KWord& x, const KWord& y);

struct DesignReport {
  int t = 0;
  bool is_design = false;
  /// Covering multiplicity when it is constant over X_t.
  std::optional<BigInt> mu;
  /// First element of X_t whose count differs from the first one seen.
  std::optional<KWord> offending;
  BigInt offending_count;
  /// |X_t| = C(n, t) 3^t.
  BigInt xt_size;
};

/// Counts, for every word x of weight t, the members of Y covering x.
DesignReport check_design(const DesignSlice& y, int t);

/// Lower bound on the size of a generalized 2-(n,k,lambda) design:
/// 3n for k < n and 2n + 1 for k = n.
BigInt fisher_bound(int n, int k);

/// Smallest design size compatible with both the Fisher bound and the double
/// count |Y| C(k,2) = mu C(n,2) 9, i.e. the least multiple of
/// C(n,2) 9 / gcd(C(n,2) 9, C(k,2)) that is at least fisher_bound(n, k).
BigInt fisher_divisibility_minimum(int n, int k);

/// (r, s) with r = #{i : x_i = y_i != 0} and s = #{i : x_i != 0, y_i != 0}.
std::pair<int, int> johnson_relation(const KWord& x, const KWord& y);

}  // namespace kleinc
