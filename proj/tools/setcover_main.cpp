// Command-line harness for the set-cover solver library: instance
// generators, format conversion, the greedy and reweighting solvers, and
// the permutation baselines, with CSV traces for the iterative runs.

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <string>

#include "CLI11.hpp"
#include "setcover/bench.hpp"
#include "setcover/geometry.hpp"
#include "setcover/greedy.hpp"
#include "setcover/instance.hpp"
#include "setcover/reweight.hpp"
#include "setcover/rng.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

// Exit codes beyond CLI11's own usage errors.
constexpr int kExitFileError = 2;
constexpr int kExitParseError = 3;
constexpr int kExitOperationError = 4;

struct FileError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

setcover::CoverInstance load_instance(const std::string& path,
                                      const std::string& format) {
  std::ifstream in(path);
  if (!in) throw FileError("cannot open '" + path + "'");
  if (format == "orlib") return setcover::parse_orlib(in);
  if (format == "canonical") return setcover::parse_canonical(in);
  return setcover::parse_auto(in);
}

void write_instance(const setcover::CoverInstance& inst,
                    const std::string& path) {
  if (path.empty() || path == "-") {
    setcover::write_canonical(inst, std::cout);
    return;
  }
  std::ofstream out(path);
  if (!out) throw FileError("cannot open '" + path + "' for writing");
  setcover::write_canonical(inst, out);
  if (!out) throw FileError("write to '" + path + "' failed");
}

std::string instance_label(const std::string& path) {
  return std::filesystem::path(path).stem().string();
}

void apply_threads(int threads) {
  if (threads <= 0) {
    if (const char* env = std::getenv("SETCOVER_THREADS"))
      threads = std::atoi(env);
  }
#ifdef _OPENMP
  if (threads > 0) omp_set_num_threads(threads);
#else
  (void)threads;
#endif
}

class CsvWriter {
 public:
  explicit CsvWriter(const std::string& path) {
    if (path.empty()) return;
    out_.open(path);
    if (!out_) throw FileError("cannot open '" + path + "' for writing");
    out_ << setcover::csv_header() << '\n';
    out_.flush();
  }
  bool active() const { return out_.is_open(); }
  // Flushed per row so interrupted runs keep their trace prefix.
  void row(const setcover::RunRecord& record) {
    if (!out_.is_open()) return;
    out_ << setcover::to_csv_row(record) << '\n';
    out_.flush();
  }

 private:
  std::ofstream out_;
};

setcover::RunRecord base_record(const setcover::CoverInstance& inst,
                                const std::string& name,
                                const std::string& algo, std::uint64_t seed,
                                double growth) {
  setcover::RunRecord r;
  r.instance = name;
  r.n = inst.n;
  r.m = inst.m;
  r.density = inst.density();
  r.algo = algo;
  r.seed = seed;
  r.growth = growth;
  return r;
}

void print_selected(const std::vector<int>& order) {
  std::cout << "selected:";
  for (int i : order) std::cout << ' ' << i;
  std::cout << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"anytime unicost set-cover solver"};
  app.require_subcommand(1);

  std::string in_path, out_path, csv_path, format = "auto";
  std::uint64_t seed = 0;
  long long iters = 0;
  double time_budget = 0.0;
  double growth = 3.0;
  int trials = 100;
  int threads = 0;
  int k_budget = -1;

  auto add_input = [&](CLI::App* cmd) {
    cmd->add_option("--in", in_path, "input instance file")->required();
    cmd->add_option("--format", format,
                    "instance format: orlib|canonical|auto")
        ->check(CLI::IsMember({"orlib", "canonical", "auto"}));
  };

  // greedy
  auto* cmd_greedy = app.add_subcommand("greedy", "one weighted greedy cover");
  add_input(cmd_greedy);
  cmd_greedy->add_option("--k", k_budget, "set budget (default: m)");
  cmd_greedy->add_option("--threads", threads, "worker threads");

  // reweight
  auto* cmd_reweight =
      app.add_subcommand("reweight", "iteratively reweighted greedy");
  add_input(cmd_reweight);
  cmd_reweight->add_option("--growth", growth, "weight growth factor");
  cmd_reweight->add_option("--iters", iters, "iteration budget");
  cmd_reweight->add_option("--time-budget", time_budget,
                           "wall-clock budget in seconds");
  cmd_reweight->add_option("--seed", seed, "seed for --permute");
  bool permute_flag = false;
  cmd_reweight->add_flag("--permute", permute_flag,
                         "randomly permute set order before solving");
  cmd_reweight->add_option("--csv", csv_path, "stream per-iteration CSV");

  // permute
  auto* cmd_permute =
      app.add_subcommand("permute", "random-permutation greedy baseline");
  add_input(cmd_permute);
  cmd_permute->add_option("--trials", trials, "number of permutations");
  cmd_permute->add_option("--seed", seed, "base seed");
  cmd_permute->add_option("--threads", threads, "worker threads");
  cmd_permute->add_option("--csv", csv_path, "per-trial CSV");

  // permstats
  auto* cmd_permstats = app.add_subcommand(
      "permstats", "min/mean/max best-k curves over permuted reweight runs");
  add_input(cmd_permstats);
  cmd_permstats->add_option("--trials", trials, "number of permuted runs");
  cmd_permstats->add_option("--iters", iters, "iterations per run")
      ->required();
  cmd_permstats->add_option("--growth", growth, "weight growth factor");
  cmd_permstats->add_option("--seed", seed, "base seed");
  cmd_permstats->add_option("--threads", threads, "worker threads");
  cmd_permstats->add_option("--csv", csv_path, "aggregate curve CSV");

  // gen-random
  auto* cmd_gen_random =
      app.add_subcommand("gen-random", "seeded random feasible instance");
  int gen_n = 100, gen_m = 100;
  double gen_density = 0.05;
  cmd_gen_random->add_option("--n", gen_n, "elements")->required();
  cmd_gen_random->add_option("--m", gen_m, "sets")->required();
  cmd_gen_random->add_option("--density", gen_density,
                             "target fraction of relationships");
  cmd_gen_random->add_option("--seed", seed, "generator seed");
  cmd_gen_random->add_option("--out", out_path, "output path (default stdout)");

  // gen-trap
  auto* cmd_gen_trap =
      app.add_subcommand("gen-trap", "fixture where plain greedy is suboptimal");
  cmd_gen_trap->add_option("--out", out_path, "output path (default stdout)");

  // gen-geom
  auto* cmd_gen_geom = app.add_subcommand(
      "gen-geom", "ball-cover instance from sampled analytic surfaces");
  std::string shape = "sphere";
  int geom_points = 2000, geom_balls = 1000;
  double eps_frac = 0.02, eps_abs = -1.0, eps_auto = -1.0;
  cmd_gen_geom->add_option("--shape", shape, "sphere|torus")
      ->check(CLI::IsMember({"sphere", "torus"}));
  cmd_gen_geom->add_option("--points", geom_points, "surface samples");
  cmd_gen_geom->add_option("--balls", geom_balls, "empty interior balls");
  auto* opt_frac = cmd_gen_geom->add_option(
      "--eps-frac", eps_frac, "enlargement as a fraction of the bbox diagonal");
  auto* opt_abs =
      cmd_gen_geom->add_option("--eps", eps_abs, "enlargement in model units");
  auto* opt_auto = cmd_gen_geom->add_option(
      "--eps-auto", eps_auto,
      "enlargement as a multiple of the smallest feasible value");
  opt_abs->excludes(opt_frac)->excludes(opt_auto);
  opt_auto->excludes(opt_frac);
  cmd_gen_geom->add_option("--seed", seed, "generator seed");
  cmd_gen_geom->add_option("--out", out_path, "output path (default stdout)");
  std::string points_out, balls_out;
  cmd_gen_geom->add_option("--points-out", points_out, "also write the cloud");
  cmd_gen_geom->add_option("--balls-out", balls_out, "also write the balls");

  // stats
  auto* cmd_stats = app.add_subcommand("stats", "instance shape summary");
  add_input(cmd_stats);

  // convert
  auto* cmd_convert =
      app.add_subcommand("convert", "rewrite an instance in canonical form");
  add_input(cmd_convert);
  cmd_convert->add_option("--out", out_path, "output path (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    apply_threads(threads);

    if (*cmd_greedy) {
      const auto inst = load_instance(in_path, format);
      const int k = k_budget < 0 ? inst.m : k_budget;
      const auto result =
          setcover::k_cover(inst, k, setcover::uniform_weights(inst.n));
      std::cout << "k=" << result.sets_used << '\n';
      print_selected(result.order);
      if (!result.complete) std::cout << "complete=no\n";
    } else if (*cmd_reweight) {
      const auto inst = load_instance(in_path, format);
      if (iters <= 0 && time_budget <= 0.0)
        throw std::invalid_argument("reweight needs --iters or --time-budget");
      setcover::ReweightConfig config;
      config.growth = growth;
      config.max_iterations = iters;
      config.time_budget_s = time_budget;
      config.seed = seed;
      config.permute_sets = permute_flag;
      config.record_trace = false;
      CsvWriter csv(csv_path);
      auto record = base_record(inst, instance_label(in_path), "reweight",
                                seed, growth);
      double total_ms = 0.0;
      const auto state = setcover::reweight_run(
          inst, config, [&](const setcover::TraceRecord& t) {
            total_ms += t.iter_ms;
            record.iteration = t.iteration;
            record.best_k = t.best_k;
            record.uncovered = t.uncovered;
            record.iter_ms = t.iter_ms;
            record.total_ms = total_ms;
            csv.row(record);
            return true;
          });
      std::cout << "best_k=" << state.best.sets_used << '\n'
                << "iterations=" << state.iterations << '\n';
      print_selected(state.best.order);
    } else if (*cmd_permute) {
      const auto inst = load_instance(in_path, format);
      const auto baseline = setcover::permutation_baseline(inst, trials, seed);
      CsvWriter csv(csv_path);
      if (csv.active()) {
        auto record = base_record(inst, instance_label(in_path), "permute",
                                  seed, 0.0);
        for (std::size_t t = 0; t < baseline.sizes.size(); ++t) {
          record.iteration = static_cast<long long>(t + 1);
          record.best_k = baseline.sizes[t];
          csv.row(record);
        }
      }
      std::cout << "trials=" << baseline.sizes.size() << '\n'
                << "min=" << baseline.min << '\n'
                << "mean=" << baseline.mean << '\n'
                << "max=" << baseline.max << '\n';
    } else if (*cmd_permstats) {
      const auto inst = load_instance(in_path, format);
      setcover::ReweightConfig config;
      config.growth = growth;
      config.max_iterations = iters;
      const auto curves =
          setcover::permuted_reweight_stats(inst, trials, config, seed);
      CsvWriter csv(csv_path);
      if (csv.active()) {
        const char* algos[] = {"permstats_min", "permstats_mean",
                               "permstats_max"};
        const std::vector<double>* series[] = {&curves.min_k, &curves.mean_k,
                                               &curves.max_k};
        auto record =
            base_record(inst, instance_label(in_path), "", seed, growth);
        for (std::size_t i = 0; i < curves.mean_k.size(); ++i) {
          for (int s = 0; s < 3; ++s) {
            record.algo = algos[s];
            record.iteration = static_cast<long long>(i + 1);
            record.best_k = (*series[s])[i];
            csv.row(record);
          }
        }
      }
      std::cout << "runs=" << trials << '\n'
                << "final_min=" << curves.min_k.back() << '\n'
                << "final_mean=" << curves.mean_k.back() << '\n'
                << "final_max=" << curves.max_k.back() << '\n';
    } else if (*cmd_gen_random) {
      write_instance(setcover::random_instance(gen_n, gen_m, gen_density, seed),
                     out_path);
    } else if (*cmd_gen_trap) {
      write_instance(setcover::trap_instance(), out_path);
    } else if (*cmd_gen_geom) {
      const auto kind = shape == "torus" ? setcover::SurfaceShape::torus
                                         : setcover::SurfaceShape::sphere;
      const auto cloud = setcover::generate_surface_samples(
          kind, geom_points, setcover::derive_seed(seed, 1));
      const auto interior = setcover::generate_interior_points(
          kind, geom_balls, setcover::derive_seed(seed, 2));
      auto system = setcover::generate_empty_balls(
          cloud, interior, geom_balls, setcover::derive_seed(seed, 3));
      if (eps_abs >= 0.0) {
        system.epsilon = eps_abs;
      } else if (eps_auto >= 0.0) {
        // Smallest enlargement making every sample coverable, scaled.
        double worst_gap = 0.0;
        for (const auto& p : cloud.points) {
          double gap = std::numeric_limits<double>::max();
          for (const auto& b : system.balls)
            gap = std::min(gap, std::sqrt(setcover::distance_squared(
                                    p, b.center)) -
                                    b.radius);
          worst_gap = std::max(worst_gap, gap);
        }
        system.epsilon = eps_auto * worst_gap;
      } else {
        system.epsilon = eps_frac * setcover::bounding_box_diagonal(cloud);
      }
      const auto inst = setcover::build_ball_instance(cloud, system);
      if (!points_out.empty()) {
        std::ofstream out(points_out);
        if (!out) throw FileError("cannot open '" + points_out + "'");
        setcover::write_points(cloud, out);
      }
      if (!balls_out.empty()) {
        std::ofstream out(balls_out);
        if (!out) throw FileError("cannot open '" + balls_out + "'");
        setcover::write_balls(system, out);
      }
      std::cerr << "shape=" << shape << " points=" << inst.n
                << " balls=" << inst.m << " eps=" << system.epsilon
                << " density=" << inst.density()
                << " feasible=" << (inst.feasible() ? "yes" : "no") << '\n';
      write_instance(inst, out_path);
    } else if (*cmd_stats) {
      const auto inst = load_instance(in_path, format);
      std::cout << "n=" << inst.n << '\n'
                << "m=" << inst.m << '\n'
                << "density=" << inst.density() << '\n'
                << "relationships=" << inst.relationships << '\n'
                << "feasible=" << (inst.feasible() ? "yes" : "no") << '\n';
    } else if (*cmd_convert) {
      write_instance(load_instance(in_path, format), out_path);
    }
  } catch (const FileError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFileError;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitParseError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitOperationError;
  }
  return 0;
}
