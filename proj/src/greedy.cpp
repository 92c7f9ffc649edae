#include "setcover/greedy.hpp"

#include <cmath>
#include <stdexcept>

namespace setcover {

namespace {

void validate_inputs(const CoverInstance& inst, int k, const WeightVector& w) {
  if (k < 0 || k > inst.m)
    throw std::invalid_argument("k must be in [0, m]");
  if (static_cast<int>(w.size()) != inst.n)
    throw std::invalid_argument("weight vector size mismatch");
  for (double v : w)
    if (!(v > 0.0) || !std::isfinite(v))
      throw std::invalid_argument("weights must be strictly positive and finite");
}

void finish(CoverResult& result, int covered_count, int n) {
  result.sets_used = static_cast<int>(result.order.size());
  result.complete = covered_count == n;
}

}  // namespace

CoverResult k_cover(const CoverInstance& inst, int k, const WeightVector& w,
                    GreedyScratch& scratch) {
  validate_inputs(inst, k, w);
  CoverResult result;
  result.selected.assign(static_cast<std::size_t>(inst.m), 0);
  result.covered.assign(static_cast<std::size_t>(inst.n), 0);
  result.order.reserve(static_cast<std::size_t>(std::min(k, inst.m)));

  auto& u = scratch.value;
  u.assign(static_cast<std::size_t>(inst.m), 0.0);
  scratch.step_value.clear();
  scratch.value_updates = 0;
  for (int i = 0; i < inst.m; ++i) {
    double sum = 0.0;
    for (int j : inst.sets[static_cast<std::size_t>(i)])
      sum += w[static_cast<std::size_t>(j)];
    u[static_cast<std::size_t>(i)] = sum;
  }

  int covered_count = 0;
  while (static_cast<int>(result.order.size()) < k && covered_count < inst.n) {
    // Linear argmax; ascending scan with a strict compare lands on the
    // lowest id among maximal-value sets.
    int best = -1;
    double best_value = 0.0;
    for (int i = 0; i < inst.m; ++i) {
      if (u[static_cast<std::size_t>(i)] > best_value &&
          !result.selected[static_cast<std::size_t>(i)]) {
        best = i;
        best_value = u[static_cast<std::size_t>(i)];
      }
    }
    if (best < 0) break;  // no remaining set covers anything

    result.selected[static_cast<std::size_t>(best)] = 1;
    result.order.push_back(best);
    scratch.step_value.push_back(best_value);
    for (int j : inst.sets[static_cast<std::size_t>(best)]) {
      if (result.covered[static_cast<std::size_t>(j)]) continue;
      result.covered[static_cast<std::size_t>(j)] = 1;
      ++covered_count;
      const double wj = w[static_cast<std::size_t>(j)];
      const auto& sets_of_j = inst.coverage[static_cast<std::size_t>(j)];
      for (int l : sets_of_j) u[static_cast<std::size_t>(l)] -= wj;
      scratch.value_updates += static_cast<long long>(sets_of_j.size());
    }
    // The decrements drive u[best] to zero up to rounding; pin it exactly
    // so stale residues never win a later argmax.
    u[static_cast<std::size_t>(best)] = 0.0;
  }
  finish(result, covered_count, inst.n);
  return result;
}

CoverResult k_cover(const CoverInstance& inst, int k, const WeightVector& w) {
  GreedyScratch scratch;
  return k_cover(inst, k, w, scratch);
}

CoverResult k_cover_naive(const CoverInstance& inst, int k,
                          const WeightVector& w) {
  validate_inputs(inst, k, w);
  CoverResult result;
  result.selected.assign(static_cast<std::size_t>(inst.m), 0);
  result.covered.assign(static_cast<std::size_t>(inst.n), 0);

  int covered_count = 0;
  while (static_cast<int>(result.order.size()) < k && covered_count < inst.n) {
    int best = -1;
    double best_value = 0.0;
    for (int i = 0; i < inst.m; ++i) {
      if (result.selected[static_cast<std::size_t>(i)]) continue;
      double value = 0.0;
      for (int j : inst.sets[static_cast<std::size_t>(i)])
        if (!result.covered[static_cast<std::size_t>(j)])
          value += w[static_cast<std::size_t>(j)];
      if (value > best_value) {
        best = i;
        best_value = value;
      }
    }
    if (best < 0) break;

    result.selected[static_cast<std::size_t>(best)] = 1;
    result.order.push_back(best);
    for (int j : inst.sets[static_cast<std::size_t>(best)]) {
      if (!result.covered[static_cast<std::size_t>(j)]) {
        result.covered[static_cast<std::size_t>(j)] = 1;
        ++covered_count;
      }
    }
  }
  finish(result, covered_count, inst.n);
  return result;
}

std::optional<int> first_uncovered(const CoverResult& result) {
  for (std::size_t j = 0; j < result.covered.size(); ++j)
    if (!result.covered[j]) return static_cast<int>(j);
  return std::nullopt;
}

bool verify_cover(const CoverInstance& inst, const CoverResult& result) {
  if (static_cast<int>(result.selected.size()) != inst.m ||
      static_cast<int>(result.covered.size()) != inst.n)
    return false;
  std::vector<std::uint8_t> expect(static_cast<std::size_t>(inst.n), 0);
  int used = 0;
  for (int i = 0; i < inst.m; ++i) {
    if (!result.selected[static_cast<std::size_t>(i)]) continue;
    ++used;
    for (int j : inst.sets[static_cast<std::size_t>(i)])
      expect[static_cast<std::size_t>(j)] = 1;
  }
  if (expect != result.covered) return false;
  if (used != result.sets_used) return false;
  int covered_count = 0;
  for (auto c : result.covered) covered_count += c;
  return result.complete == (covered_count == inst.n);
}

}  // namespace setcover
