#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "setcover/instance.hpp"

namespace setcover {

// One CSV row of a solver trace. best_k is fractional in aggregated rows.
struct RunRecord {
  std::string instance;
  int n = 0;
  int m = 0;
  double density = 0.0;
  std::string algo;
  std::uint64_t seed = 0;
  double growth = 0.0;
  long long iteration = 0;
  double best_k = 0.0;
  int uncovered = 0;
  double iter_ms = 0.0;
  double total_ms = 0.0;
};

// "instance,n,m,density,algo,seed,growth,iteration,best_k,uncovered,iter_ms,total_ms"
std::string csv_header();
std::string to_csv_row(const RunRecord& record);
RunRecord parse_csv_row(const std::string& line);

struct TimingReport {
  double pre_seconds = 0.0;       // dual-structure construction
  std::vector<double> solve_ms;   // per-iteration greedy solve time
};

// Rebuilds the dual structures once (timed separately) and then runs
// `iterations` reweight iterations, recording each solve time.
TimingReport timing_report(const CoverInstance& inst, long long iterations,
                           double growth = 3.0);

}  // namespace setcover
