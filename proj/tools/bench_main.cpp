// Benchmark comparing the dual-adjacency greedy kernel against the naive
// rescanning reference, and the grid-accelerated geometric instance builder
// against the all-pairs one. Reports setup ("pre") and solve ("gsc") times
// separately, plus per-iteration solve statistics under reweighting.

#include <algorithm>
#include <chrono>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "setcover/bench.hpp"
#include "setcover/geometry.hpp"
#include "setcover/greedy.hpp"
#include "setcover/instance.hpp"
#include "setcover/rng.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start)
      .count();
}

double median(std::vector<double> v) {
  if (v.empty()) return 0.0;
  std::sort(v.begin(), v.end());
  const std::size_t h = v.size() / 2;
  return v.size() % 2 ? v[h] : 0.5 * (v[h - 1] + v[h]);
}

void kernel_comparison(const setcover::CoverInstance& inst,
                       const std::string& name, long long iters,
                       bool run_naive) {
  std::cout << "instance=" << name << " n=" << inst.n << " m=" << inst.m
            << " density=" << inst.density() << '\n';

  const auto w = setcover::uniform_weights(inst.n);
  auto t0 = Clock::now();
  const auto fast = setcover::k_cover(inst, inst.m, w);
  const double fast_ms = ms_since(t0);
  std::cout << "greedy        k=" << fast.sets_used << " gsc_ms=" << fast_ms
            << '\n';

  if (run_naive) {
    t0 = Clock::now();
    const auto naive = setcover::k_cover_naive(inst, inst.m, w);
    const double naive_ms = ms_since(t0);
    std::cout << "greedy-naive  k=" << naive.sets_used
              << " gsc_ms=" << naive_ms;
    if (fast_ms > 0.0) std::cout << " slowdown=" << naive_ms / fast_ms << "x";
    std::cout << '\n';
    if (naive.order != fast.order)
      std::cout << "WARNING: selection sequences differ\n";
  }

  const auto report = setcover::timing_report(inst, iters);
  const std::size_t tenth = std::max<std::size_t>(1, report.solve_ms.size() / 10);
  const std::vector<double> first(report.solve_ms.begin(),
                                  report.solve_ms.begin() + tenth);
  const std::vector<double> last(report.solve_ms.end() - tenth,
                                 report.solve_ms.end());
  std::cout << "reweight      iters=" << report.solve_ms.size()
            << " pre_ms=" << report.pre_seconds * 1000.0
            << " gsc_ms median=" << median(report.solve_ms)
            << " first10%=" << median(first) << " last10%=" << median(last)
            << '\n';
}

void geometry_comparison(const std::string& shape, int points, int balls,
                         double eps_frac, std::uint64_t seed) {
  const auto kind = shape == "torus" ? setcover::SurfaceShape::torus
                                     : setcover::SurfaceShape::sphere;
  const auto cloud =
      setcover::generate_surface_samples(kind, points, setcover::derive_seed(seed, 1));
  const auto interior =
      setcover::generate_interior_points(kind, balls, setcover::derive_seed(seed, 2));
  auto system = setcover::generate_empty_balls(cloud, interior, balls,
                                               setcover::derive_seed(seed, 3));
  system.epsilon = eps_frac * setcover::bounding_box_diagonal(cloud);

  auto t0 = Clock::now();
  const auto grid = setcover::build_ball_instance(cloud, system);
  const double grid_ms = ms_since(t0);
  t0 = Clock::now();
  const auto naive = setcover::build_ball_instance_naive(cloud, system);
  const double naive_ms = ms_since(t0);

  std::cout << "geom shape=" << shape << " points=" << points
            << " balls=" << balls << " eps=" << system.epsilon << '\n';
  std::cout << "build-grid    pre_ms=" << grid_ms << '\n';
  std::cout << "build-naive   pre_ms=" << naive_ms;
  if (grid_ms > 0.0) std::cout << " slowdown=" << naive_ms / grid_ms << "x";
  std::cout << '\n';
  std::cout << "identical=" << (grid == naive ? "yes" : "NO") << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"set-cover kernel and builder benchmarks"};

  int n = 2000, m = 2000;
  double density = 0.01;
  std::uint64_t seed = 1;
  long long iters = 200;
  bool skip_naive = false;
  bool geom = false;
  std::string shape = "sphere";
  int points = 2000, balls = 1000;
  double eps_frac = 0.02;

  app.add_option("--n", n, "elements of the random instance");
  app.add_option("--m", m, "sets of the random instance");
  app.add_option("--density", density, "target density");
  app.add_option("--seed", seed, "generator seed");
  app.add_option("--iters", iters, "reweight iterations to time");
  app.add_flag("--skip-naive", skip_naive, "skip the slow reference kernel");
  app.add_flag("--geom", geom, "also compare the geometric builders");
  app.add_option("--shape", shape, "sphere|torus")
      ->check(CLI::IsMember({"sphere", "torus"}));
  app.add_option("--points", points, "geometric surface samples");
  app.add_option("--balls", balls, "geometric balls");
  app.add_option("--eps-frac", eps_frac, "enlargement fraction");

  CLI11_PARSE(app, argc, argv);

  try {
    const auto inst = setcover::random_instance(n, m, density, seed);
    const std::string name = "random-n" + std::to_string(n) + "-m" +
                             std::to_string(m) + "-s" + std::to_string(seed);
    kernel_comparison(inst, name, iters, !skip_naive);
    if (geom) geometry_comparison(shape, points, balls, eps_frac, seed);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
