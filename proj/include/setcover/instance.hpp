#pragma once

#include <cstdint>
#include <iosfwd>
#include <random>
#include <string>
#include <vector>

namespace setcover {

// Sparse set-cover instance with the covering relationships stored in both
// directions: sets[i] lists the elements of set i, coverage[j] lists the
// sets containing element j. Immutable after construction; safe to share
// across concurrent solver runs.
struct CoverInstance {
  int n = 0;  // number of elements, ids 0..n-1
  int m = 0;  // number of sets, ids 0..m-1
  std::vector<std::vector<int>> sets;      // S_i, sorted, duplicate-free
  std::vector<std::vector<int>> coverage;  // C_j, sorted, duplicate-free
  long long relationships = 0;             // sum of |S_i|

  // True iff every element appears in at least one set (vacuously true for
  // n == 0). Solvers refuse infeasible instances up front.
  bool feasible() const;

  // relationships / (n*m), 0 for degenerate shapes.
  double density() const;

  // Structural equality; coverage is derived from sets and not compared.
  bool operator==(const CoverInstance& other) const;
};

// Per-element weights driving the greedy value function. All entries must
// stay strictly positive and finite.
using WeightVector = std::vector<double>;

WeightVector uniform_weights(int n);

// Builds the dual adjacency from per-set element lists in one pass over the
// relationships. Lists need not be sorted; out-of-range ids and duplicates
// within a set are rejected.
CoverInstance from_sets(int n, const std::vector<std::vector<int>>& set_lists);

// OR-library SCP row-list format: header "rows cols" (rows are elements,
// cols are sets), an optional per-column cost block, then for each row a
// count followed by that many 1-based column ids. Whether a cost block is
// present is detected by token counting; costs are read and discarded
// unless strict_unicost is set, in which case nonuniform costs are
// rejected.
CoverInstance parse_orlib(std::istream& in, bool strict_unicost = false);
CoverInstance parse_orlib(const std::string& text, bool strict_unicost = false);

// Canonical format: line 1 "SETCOVER n m", then m lines "|S_i| e0 e1 ..."
// with sorted 0-based element ids, LF line endings, single spaces.
CoverInstance parse_canonical(std::istream& in);
CoverInstance parse_canonical(const std::string& text);
void write_canonical(const CoverInstance& inst, std::ostream& out);
std::string write_canonical(const CoverInstance& inst);

// Dispatches on the SETCOVER magic token: canonical if present, OR-library
// otherwise.
CoverInstance parse_auto(std::istream& in);

// Every set draws round(density*n) distinct elements from the seeded
// generator; any element left uncovered afterwards is appended to a
// uniformly chosen set, so the result is always feasible. Pure function of
// its arguments.
CoverInstance random_instance(int n, int m, double density, std::uint64_t seed);

// 6 elements, sets {0,1,3,4}, {0,1,2}, {3,4,5}. Unweighted greedy picks
// set 0 first (value 4 against 3 and 3) and ends with 3 sets; the optimal
// cover is {1, 2}.
CoverInstance trap_instance();

// new sets[i] = old sets[perm[i]]; perm must be a permutation of 0..m-1.
CoverInstance permute_instance_sets(const CoverInstance& inst,
                                    const std::vector<int>& perm);

std::vector<int> random_permutation(int m, std::mt19937_64& rng);

}  // namespace setcover
