#pragma once

#include <cstdint>
#include <optional>

#include "kleinc/code.hpp"

namespace kleinc {

enum class SearchStatus { Found, ProvenAbsent, BudgetExhausted };
const char* to_string(SearchStatus s);

struct SearchOptions {
  /// Wall-clock budget in seconds; 0 means unlimited.
  double budget_seconds = 0;
  /// Keep going after the first witness and count every leaf of the tree.
  bool exhaustive = false;
  int jobs = 1;
  /// Stop after this many tree nodes; 0 means unlimited.
  std::uint64_t node_limit = 0;
};

struct SearchResult {
  SearchStatus status = SearchStatus::ProvenAbsent;
  std::optional<KCode> code;
  std::uint64_t nodes = 0;
  /// Leaves reached (self-dual codes passing every filter). Codes are not
  /// deduplicated up to equivalence.
  std::uint64_t solutions = 0;
  double seconds = 0;
};

/// Backtracking search for a self-dual code of length n (even, when `even`
/// is set) with minimal weight >= d_target.
///
/// For n <= 13 the tree is exact: the first generator is a^w 0^(n-w) for each
/// candidate minimal weight w, the second ranges over orbit representatives
/// of the stabiliser of that word, and further generators are drawn from a
/// bit-packed table of cosets of the partial code whose every word is heavy
/// enough. A finished tree without witness proves absence. Longer lengths
/// fall back to a lazy coset enumeration that is only useful with a budget.
///
/// With several jobs the subtrees below the second generator run in
/// parallel; the returned witness is always the one from the earliest
/// subtree in the fixed order, so the result does not depend on `jobs`
/// unless the budget runs out.
SearchResult search(int n, bool even, int d_target, const SearchOptions& opts = {});

}  // namespace kleinc
