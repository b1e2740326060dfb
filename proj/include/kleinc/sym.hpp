#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "kleinc/canon.hpp"
#include "kleinc/code.hpp"

namespace kleinc {

struct Orbit {
  /// Lexicographically least member (see lex_compare).
  KWord rep;
  std::uint64_t size = 0;
  int weight = 0;
  /// Distance from the orbit to the code and the number of codewords at
  /// that distance (both constant on an Aut(C)-orbit).
  int distance = 0;
  std::uint64_t nearest = 0;
};

/// Orbits of Aut(C) on K^n or on the words of one weight, sorted by weight
/// and then by representative.
struct OrbitTable {
  int n = 0;
  BigInt group_order;
  std::vector<Orbit> orbits;
};

/// Requires 4^n <= 2^24. `weight` restricts to one slice of K^n.
OrbitTable orbits(const KCode& c, std::optional<int> weight = std::nullopt);

struct CosetLeader {
  KWord rep;
  int weight = 0;
};

struct CoveringResult {
  int radius = 0;
  /// One minimal-weight representative per coset of K^n / C, in the order
  /// the cosets were first reached (by weight, then position set, then symbols).
  std::vector<CosetLeader> leaders;
  /// count_by_weight[w] = number of cosets of minimal weight w.
  std::vector<std::uint64_t> count_by_weight;
};

/// Requires at most 2^24 cosets.
CoveringResult covering_radius(const KCode& c);

/// How the words of weight `radius` spread over the deepest cosets.
/// A coset of minimal weight equal to the radius consists of deep holes; its
/// minimal-weight members are exactly the vectors x - c with c a codeword at
/// distance radius from x, so `group_sizes` also counts nearest codewords.
struct DeepHoleStats {
  int radius = 0;
  std::uint64_t words = 0;
  std::uint64_t cosets = 0;
  /// group_sizes[s] = number of deep cosets containing s words of weight radius.
  std::map<std::uint64_t, std::uint64_t> group_sizes;
};
DeepHoleStats deep_holes(const KCode& c);

}  // namespace kleinc
