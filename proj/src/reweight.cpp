#include "setcover/reweight.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>

#include "setcover/rng.hpp"

namespace setcover {

namespace {

// Lower clamp applied during renormalization. With the default threshold
// at 2^512 every weight stays inside [2^-512, growth * 2^512], so nothing
// ever overflows, underflows, or denormalizes no matter how many
// iterations run. Weights this far below the maximum cannot influence the
// argmax anyway.
constexpr double kWeightFloor = 0x1p-512;

double elapsed_ms(std::chrono::steady_clock::time_point since) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - since)
      .count();
}

CoverResult map_back(CoverResult result, const std::vector<int>& perm) {
  if (perm.empty()) return result;
  CoverResult mapped;
  mapped.covered = std::move(result.covered);
  mapped.sets_used = result.sets_used;
  mapped.complete = result.complete;
  mapped.selected.assign(result.selected.size(), 0);
  mapped.order.reserve(result.order.size());
  for (int i : result.order) {
    const int original = perm[static_cast<std::size_t>(i)];
    mapped.order.push_back(original);
    mapped.selected[static_cast<std::size_t>(original)] = 1;
  }
  return mapped;
}

}  // namespace

ReweightState reweight_run(const CoverInstance& inst,
                           const ReweightConfig& config,
                           const ReweightObserver& observer) {
  if (!(config.growth > 1.0) || !std::isfinite(config.growth))
    throw std::invalid_argument("growth factor must be finite and > 1");
  if (!(config.renorm_threshold > 1.0) ||
      !std::isfinite(config.renorm_threshold))
    throw std::invalid_argument("renorm threshold must be finite and > 1");
  if (config.max_iterations <= 0 && config.time_budget_s <= 0.0 && !observer)
    throw std::invalid_argument(
        "unbounded run: set max_iterations, time_budget, or an observer");
  if (!inst.feasible())
    throw std::invalid_argument("instance is infeasible");

  ReweightState state;
  state.w.assign(static_cast<std::size_t>(inst.n), 1.0);
  state.k = inst.m;
  if (inst.n == 0) {
    // Vacuously covered by zero sets.
    state.best.selected.assign(static_cast<std::size_t>(inst.m), 0);
    state.best.complete = true;
    return state;
  }

  const CoverInstance* work = &inst;
  CoverInstance permuted;
  std::vector<int> perm;
  if (config.permute_sets) {
    std::mt19937_64 rng = make_rng(config.seed);
    perm = random_permutation(inst.m, rng);
    permuted = permute_instance_sets(inst, perm);
    work = &permuted;
  }

  GreedyScratch scratch;
  const auto run_start = std::chrono::steady_clock::now();
  for (;;) {
    if (config.max_iterations > 0 && state.iterations >= config.max_iterations)
      break;
    if (config.time_budget_s > 0.0 &&
        elapsed_ms(run_start) >= config.time_budget_s * 1000.0)
      break;

    const auto iter_start = std::chrono::steady_clock::now();
    const int budget = state.k;
    CoverResult result = k_cover(*work, budget, state.w, scratch);

    int uncovered = 0;
    if (!result.complete) {
      for (auto c : result.covered) uncovered += 1 - c;
    }

    if (const auto missing = first_uncovered(result)) {
      double& wj = state.w[static_cast<std::size_t>(*missing)];
      wj *= config.growth;
      if (wj > config.renorm_threshold) {
        // wj is now the maximum; dividing by it is behavior-preserving by
        // greedy scale invariance and leaves the max at exactly 1.
        const double max_w = wj;
        for (double& v : state.w) v = std::max(v / max_w, kWeightFloor);
      }
    } else {
      state.best = map_back(std::move(result), perm);
      state.k = std::max(0, state.best.sets_used - 1);
    }

    ++state.iterations;
    TraceRecord record;
    record.iteration = state.iterations;
    record.k = budget;
    record.best_k = state.best.sets_used;
    record.uncovered = uncovered;
    record.iter_ms = elapsed_ms(iter_start);
    if (config.record_trace) state.trace.push_back(record);
    if (observer && !observer(record)) break;
  }
  return state;
}

PermutationBaseline permutation_baseline(const CoverInstance& inst, int trials,
                                         std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  if (!inst.feasible()) throw std::invalid_argument("instance is infeasible");

  PermutationBaseline out;
  out.sizes.assign(static_cast<std::size_t>(trials), 0);
  const WeightVector w = uniform_weights(inst.n);
#pragma omp parallel for schedule(dynamic)
  for (int t = 0; t < trials; ++t) {
    std::mt19937_64 rng = make_rng(seed, static_cast<std::uint64_t>(t));
    const std::vector<int> perm = random_permutation(inst.m, rng);
    const CoverInstance permuted = permute_instance_sets(inst, perm);
    GreedyScratch scratch;
    const CoverResult result = k_cover(permuted, permuted.m, w, scratch);
    out.sizes[static_cast<std::size_t>(t)] = result.sets_used;
  }

  out.min = out.sizes[0];
  out.max = out.sizes[0];
  double sum = 0.0;
  for (int s : out.sizes) {
    out.min = std::min(out.min, s);
    out.max = std::max(out.max, s);
    sum += s;
  }
  out.mean = sum / static_cast<double>(trials);
  return out;
}

AggregateCurves permuted_reweight_stats(const CoverInstance& inst,
                                        int permutations,
                                        const ReweightConfig& config,
                                        std::uint64_t seed) {
  if (permutations < 1)
    throw std::invalid_argument("permutations must be >= 1");
  if (config.max_iterations <= 0)
    throw std::invalid_argument(
        "aggregate curves need a fixed max_iterations");

  const std::size_t iters = static_cast<std::size_t>(config.max_iterations);
  std::vector<std::vector<int>> best_curves(
      static_cast<std::size_t>(permutations));
#pragma omp parallel for schedule(dynamic)
  for (int r = 0; r < permutations; ++r) {
    ReweightConfig run_config = config;
    run_config.permute_sets = true;
    run_config.seed = derive_seed(seed, static_cast<std::uint64_t>(r));
    run_config.record_trace = false;
    run_config.time_budget_s = 0.0;  // traces must all reach max_iterations
    std::vector<int> curve;
    curve.reserve(iters);
    reweight_run(inst, run_config, [&curve](const TraceRecord& record) {
      curve.push_back(record.best_k);
      return true;
    });
    best_curves[static_cast<std::size_t>(r)] = std::move(curve);
  }

  AggregateCurves out;
  out.min_k.resize(iters);
  out.mean_k.resize(iters);
  out.max_k.resize(iters);
  for (std::size_t i = 0; i < iters; ++i) {
    double lo = best_curves[0][i];
    double hi = best_curves[0][i];
    double sum = 0.0;
    for (const auto& curve : best_curves) {
      const double v = curve[i];
      lo = std::min(lo, v);
      hi = std::max(hi, v);
      sum += v;
    }
    out.min_k[i] = lo;
    out.max_k[i] = hi;
    out.mean_k[i] = sum / static_cast<double>(permutations);
  }
  return out;
}

}  // namespace setcover
