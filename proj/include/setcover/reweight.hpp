#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "setcover/greedy.hpp"
#include "setcover/instance.hpp"

namespace setcover {

struct ReweightConfig {
  double growth = 3.0;           // multiplicative bump factor, must be > 1
  long long max_iterations = 0;  // 0 = unbounded
  double time_budget_s = 0.0;    // 0 = no time budget
  // Renormalize (divide every weight by the maximum) once a weight exceeds
  // this. Keeps the whole vector inside a safe dynamic range; behavior is
  // preserved by the scale invariance of the greedy kernel.
  double renorm_threshold = 0x1p512;
  std::uint64_t seed = 0;        // seeds the optional initial set permutation
  bool permute_sets = false;
  bool record_trace = true;      // keep the trace in the returned state
};

struct TraceRecord {
  long long iteration = 0;  // 1-based
  int k = 0;                // budget used this iteration
  int best_k = 0;           // size of the best cover after this iteration
  int uncovered = 0;        // elements this iteration's k-cover missed
  double iter_ms = 0.0;
};

// Called once per completed iteration; return false to stop the run.
// Iterations are never interrupted mid-greedy.
using ReweightObserver = std::function<bool(const TraceRecord&)>;

struct ReweightState {
  int k = 0;                 // current target cover size
  WeightVector w;            // persists across k decrements
  CoverResult best;          // complete cover, original set ids
  long long iterations = 0;  // completed outer iterations
  std::vector<TraceRecord> trace;
};

// Iterative reweighting: starts from k = m and uniform weights, runs the
// greedy k-cover, and either bumps the weight of the first uncovered
// element by `growth` or stores the complete cover as the new best and
// lowers k below it. Weights are never reset when k drops. The best cover
// can only improve over time.
ReweightState reweight_run(const CoverInstance& inst,
                           const ReweightConfig& config,
                           const ReweightObserver& observer = {});

struct PermutationBaseline {
  std::vector<int> sizes;  // cover size per trial, original set ids
  int min = 0;
  int max = 0;
  double mean = 0.0;
};

// Unweighted greedy under `trials` seeded random set permutations.
// Deterministic per seed regardless of how the trials are scheduled.
PermutationBaseline permutation_baseline(const CoverInstance& inst, int trials,
                                         std::uint64_t seed);

struct AggregateCurves {
  // Pointwise statistics of best k across runs, indexed by iteration.
  std::vector<double> min_k;
  std::vector<double> mean_k;
  std::vector<double> max_k;
};

// One reweight_run per seeded set permutation, aggregated pointwise.
// Requires a fixed max_iterations so the traces align. Runs may execute in
// parallel; the result depends only on (inst, permutations, config, seed).
AggregateCurves permuted_reweight_stats(const CoverInstance& inst,
                                        int permutations,
                                        const ReweightConfig& config,
                                        std::uint64_t seed);

}  // namespace setcover
