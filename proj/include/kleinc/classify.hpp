#pragma once

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "kleinc/canon.hpp"
#include "kleinc/code.hpp"
#include "kleinc/enumerators.hpp"

namespace kleinc {

/// Number of distinct self-dual codes of length n: prod_{i=1..n} (2^i + 1);
/// with `even`, the number of even self-dual codes: prod_{i=0..n-1} (2^i + 1).
BigInt mass(int n, bool even);

/// Closed form of sum over classes of (6^n n! / |Aut C|) W_C(u, v).
RationalWE average_we(int n, bool even);

/// The subcode spanned by words of weight 1 and 2, as a multiset of
/// components gamma_1, epsilon_2 and delta_l (l >= 2).
struct Skeleton {
  int gamma1 = 0;
  int epsilon2 = 0;
  std::map<int, int> delta;  // l -> multiplicity
  /// Positions outside the support of every component.
  int free_positions = 0;

  bool empty() const { return gamma1 == 0 && epsilon2 == 0 && delta.empty(); }
  /// e.g. "d4 e2^2 g1", or "-" when empty.
  std::string str() const;
  friend bool operator==(const Skeleton&, const Skeleton&) = default;
};

/// Requires a self-orthogonal code.
Skeleton skeleton(const KCode& c);

struct ChildInfo {
  int position = 0;
  Symbol glue = Symbol::a;
  /// Size of the Aut(C)-orbit of the point (position, glue).
  int orbit_size = 0;
  KCode child;
  /// Child with all gamma_1 factors split off, and their count.
  KCode primitive;
  int gamma_count = 0;
};

/// One child per Aut(C)-orbit on the points (position, x), x in {a,b,c}.
/// Requires C even self-dual. `aut` may be passed to avoid recomputation.
std::vector<ChildInfo> children(const KCode& c, const AutResult* aut = nullptr);

/// The inverse construction: the even self-dual code of length len(D)+k built
/// from a self-dual D and delta_k (k >= 1; k even when D is even). The new
/// positions are appended at the end.
KCode parent(const KCode& d, int k = 1);

/// The two even self-dual neighbours D0 u D2 and D0 u D3 of a non-even
/// self-dual code D of even length.
std::pair<KCode, KCode> neighbors(const KCode& d);

struct ClassRecord {
  KCode rep;  // canonical representative
  BigInt aut_order;
  std::vector<GroupElement> aut_generators;
  WeightEnum we;
  Skeleton skel;
  bool even = false;
};

struct ClassifyOptions {
  int jobs = 1;
  /// Called with a progress line after each dimension level.
  std::function<void(const std::string&)> progress;
};

struct Classification {
  int n = 0;
  bool even_only = false;
  std::vector<ClassRecord> classes;
  BigInt mass_sum;
  BigInt mass_expected;
  bool audit_ok() const { return mass_sum == mass_expected; }
  /// Index of the class containing c (by canonical form), or -1.
  int find(const KCode& c) const;
  std::map<std::string, int> index;  // canonical key -> class
};

/// Classifies self-dual codes of length n (all of them, or only the even
/// ones) by extending self-orthogonal codes half a dimension at a time and
/// keeping one canonical representative per class. Fills in the mass audit;
/// callers decide how to react to a failed audit.
Classification classify(int n, bool even_only, const ClassifyOptions& opts = {});

/// The self-dual codes of odd length n-1 obtained as children of the given
/// even classification of length n, deduplicated and audited against mass(n-1).
Classification classify_via_children(const Classification& even_classes, const ClassifyOptions& opts = {});

/// Wraps canonical forms into a sorted, audited classification. The
/// automorphism generators in `reps` must act on the canonical codes.
Classification make_classification(int n, bool even_only, const std::vector<CanonResult>& reps);

struct NeighGraph {
  int n = 0;
  /// Class indices (into the full classification) of the even codes.
  std::vector<int> vertices;
  struct Edge {
    int u = 0, v = 0;    // vertex positions in `vertices`
    int odd_class = 0;   // class index of the non-even code
    bool loop() const { return u == v; }
  };
  std::vector<Edge> edges;
  int loop_count() const;
  int proper_edge_count() const;
  bool connected() const;
};

/// Requires the classification of all self-dual codes of even length n.
NeighGraph neighborhood_graph(const Classification& all_codes);

}  // namespace kleinc
