#pragma once

#include <optional>
#include <vector>

#include "kleinc/code.hpp"

namespace kleinc {

/// Result of one greedy run. Words are listed in the order they were chosen.
struct LexTrace {
  int n = 0;
  int d = 0;
  std::vector<KWord> words;
  /// Span of the chosen words.
  KCode code;
  /// The chosen set is closed under addition (it equals its span).
  bool linear = false;
};

/// Greedy code over K^n in lexicographic order (0 < a < b < c, leftmost
/// position most significant): a word is chosen when its distance to every
/// earlier choice is at least d. Requires 1 <= d <= n and n <= 13.
LexTrace lexicode(int n, int d);

/// Self-orthogonal variant: a word is chosen when it is orthogonal to the
/// span S of earlier choices and every word of x + S has weight >= d.
LexTrace so_lexicode_at(int n, int d);

struct SoLexResult {
  int d = 0;
  int n_max = 0;
  /// traces[n-1] is the self-orthogonal lexicode of length n.
  std::vector<LexTrace> traces;
  /// Smallest p with code(n) equivalent to code(n-p) + code(p) (direct sum)
  /// for every p <= n <= n_max, with code(0) the empty code.
  std::optional<int> period;
  std::optional<KCode> element;
};

/// Runs so_lexicode_at for n = 1..n_max and detects the direct-sum period.
/// Requires 1 <= d and n_max <= 13.
SoLexResult so_lexicode(int d, int n_max);

}  // namespace kleinc
