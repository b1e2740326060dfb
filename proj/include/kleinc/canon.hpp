#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "kleinc/code.hpp"
#include "kleinc/group.hpp"
#include "kleinc/poly.hpp"

namespace kleinc {

/// Aut(C) = { g in S3^n:S_n : gC = C }.
struct AutResult {
  BigInt order;
  std::vector<GroupElement> generators;
};

struct CanonResult {
  KCode canonical;
  /// labeling.apply(C) == canonical
  GroupElement labeling;
  AutResult aut;
  std::uint64_t nodes = 0;
};

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CanonOptions {
  /// Abort with BudgetExceeded after visiting this many search-tree nodes.
  std::uint64_t node_limit = 20'000'000;
};

/// Canonical form, canonical labeling and automorphism group in one search.
///
/// The code is encoded as a coloured graph: one vertex per position, one per
/// (position, nonzero symbol) pair, and one per codeword in a generating set
/// that is invariant under Aut(C) (all nonzero words up to the least weight
/// whose words span C). Equivalences of codes are exactly the colour-preserving
/// isomorphisms of these graphs. An individualization-refinement search over
/// the point vertices yields a canonical leaf, and leaves with equal
/// certificates give automorphisms that prune the remaining tree.
CanonResult canonical_form(const KCode& c, const CanonOptions& opts = {});

KCode canonical(const KCode& c);
AutResult aut(const KCode& c);

/// A witness g with g.apply(c) == d, or nullopt when c and d are inequivalent.
std::optional<GroupElement> equivalent(const KCode& c, const KCode& d);

/// Cheap equivalence invariant: Hamming enumerator plus the sorted multiset of
/// per-position symbol-count columns, each column sorted over {a, b, c}.
std::string invariant_key(const KCode& c);

/// Orbits of the group generated by `gens` on points given as indices
/// 3*pos + (symbol - 1). Returns a representative index per point.
std::vector<int> point_orbits(int n, const std::vector<GroupElement>& gens);

}  // namespace kleinc
