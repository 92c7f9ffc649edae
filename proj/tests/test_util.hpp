#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "setcover/instance.hpp"

namespace testutil {

// Independent dual-consistency oracle: checks membership for every
// (set, element) pair against both directions, plus sortedness,
// duplicate-freeness, id ranges and the relationship count.
inline bool dual_consistent(const setcover::CoverInstance& inst) {
  if (static_cast<int>(inst.sets.size()) != inst.m) return false;
  if (static_cast<int>(inst.coverage.size()) != inst.n) return false;
  auto sorted_unique = [](const std::vector<int>& v, int limit) {
    for (std::size_t t = 0; t < v.size(); ++t) {
      if (v[t] < 0 || v[t] >= limit) return false;
      if (t > 0 && v[t] <= v[t - 1]) return false;
    }
    return true;
  };
  long long rel_sets = 0, rel_cov = 0;
  for (const auto& s : inst.sets) {
    if (!sorted_unique(s, inst.n)) return false;
    rel_sets += static_cast<long long>(s.size());
  }
  for (const auto& c : inst.coverage) {
    if (!sorted_unique(c, inst.m)) return false;
    rel_cov += static_cast<long long>(c.size());
  }
  if (rel_sets != inst.relationships || rel_cov != inst.relationships)
    return false;
  auto member = [](const std::vector<int>& v, int x) {
    for (int e : v)
      if (e == x) return true;
    return false;
  };
  for (int i = 0; i < inst.m; ++i)
    for (int j = 0; j < inst.n; ++j)
      if (member(inst.sets[i], j) != member(inst.coverage[j], i)) return false;
  return true;
}

// Exhaustive minimum-cover size by enumerating all subsets of the sets.
// Returns -1 when no cover exists.
inline int exhaustive_min_cover(const setcover::CoverInstance& inst) {
  if (inst.m > 20) throw std::invalid_argument("too many sets to enumerate");
  if (inst.n == 0) return 0;
  int best = -1;
  for (std::uint32_t mask = 0; mask < (1u << inst.m); ++mask) {
    std::vector<std::uint8_t> covered(inst.n, 0);
    int used = 0;
    for (int i = 0; i < inst.m; ++i) {
      if (!(mask >> i & 1)) continue;
      ++used;
      for (int j : inst.sets[i]) covered[j] = 1;
    }
    bool all = true;
    for (auto c : covered) all = all && c;
    if (all && (best < 0 || used < best)) best = used;
  }
  return best;
}

// Disjoint sets of `per_part` consecutive elements; every set is mandatory,
// so the minimum cover is exactly `parts`.
inline setcover::CoverInstance partition_instance(int parts, int per_part) {
  std::vector<std::vector<int>> sets(parts);
  for (int p = 0; p < parts; ++p)
    for (int t = 0; t < per_part; ++t) sets[p].push_back(p * per_part + t);
  return setcover::from_sets(parts * per_part, sets);
}

}  // namespace testutil
