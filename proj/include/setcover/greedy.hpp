#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "setcover/instance.hpp"

namespace setcover {

struct CoverResult {
  std::vector<std::uint8_t> selected;  // flag per set
  std::vector<std::uint8_t> covered;   // flag per element
  std::vector<int> order;              // set ids in selection order
  int sets_used = 0;                   // popcount of selected
  bool complete = false;               // all n elements covered
};

// Scratch owned by one run at a time; reusable across calls to avoid
// reallocation in tight outer loops.
struct GreedyScratch {
  std::vector<double> value;       // current value per set (the u array)
  std::vector<double> step_value;  // value of the chosen set at each pick
  long long value_updates = 0;     // decrements applied to `value` this run
};

// Weighted greedy k-cover over the dual adjacency. Repeatedly selects the
// unselected set of maximal value (ties broken toward the lowest set id),
// flags its elements covered and decrements the values of exactly the sets
// containing a newly covered element. Stops after k selections, or when all
// elements are covered, or when no remaining set would cover anything.
// Nothing is ever removed; deactivation is by flag.
CoverResult k_cover(const CoverInstance& inst, int k, const WeightVector& w);
CoverResult k_cover(const CoverInstance& inst, int k, const WeightVector& w,
                    GreedyScratch& scratch);

// Reference implementation with the same contract: recomputes every set
// value from scratch at each step, O(relationships) per selection. Kept as
// the correctness oracle for k_cover.
CoverResult k_cover_naive(const CoverInstance& inst, int k,
                          const WeightVector& w);

// Smallest uncovered element id, or nullopt when the cover is complete.
std::optional<int> first_uncovered(const CoverResult& result);

// Recomputes coverage from the selected sets and checks it against the
// stored flags and counters.
bool verify_cover(const CoverInstance& inst, const CoverResult& result);

}  // namespace setcover
