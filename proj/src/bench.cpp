#include "setcover/bench.hpp"

#include <chrono>
#include <sstream>
#include <stdexcept>

#include "setcover/reweight.hpp"

namespace setcover {

namespace {

std::string sanitize(const std::string& field) {
  std::string out = field;
  for (char& c : out)
    if (c == ',' || c == '\n' || c == '\r') c = '_';
  return out;
}

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      fields.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  fields.push_back(cur);
  return fields;
}

}  // namespace

std::string csv_header() {
  return "instance,n,m,density,algo,seed,growth,iteration,best_k,uncovered,"
         "iter_ms,total_ms";
}

std::string to_csv_row(const RunRecord& r) {
  std::ostringstream out;
  out.precision(12);
  out << sanitize(r.instance) << ',' << r.n << ',' << r.m << ',' << r.density
      << ',' << sanitize(r.algo) << ',' << r.seed << ',' << r.growth << ','
      << r.iteration << ',' << r.best_k << ',' << r.uncovered << ','
      << r.iter_ms << ',' << r.total_ms;
  return out.str();
}

RunRecord parse_csv_row(const std::string& line) {
  const auto fields = split_fields(line);
  if (fields.size() != 12)
    throw std::runtime_error("csv row must have 12 fields");
  RunRecord r;
  try {
    r.instance = fields[0];
    r.n = std::stoi(fields[1]);
    r.m = std::stoi(fields[2]);
    r.density = std::stod(fields[3]);
    r.algo = fields[4];
    r.seed = std::stoull(fields[5]);
    r.growth = std::stod(fields[6]);
    r.iteration = std::stoll(fields[7]);
    r.best_k = std::stod(fields[8]);
    r.uncovered = std::stoi(fields[9]);
    r.iter_ms = std::stod(fields[10]);
    r.total_ms = std::stod(fields[11]);
  } catch (const std::exception&) {
    throw std::runtime_error("csv row has a malformed field");
  }
  return r;
}

TimingReport timing_report(const CoverInstance& inst, long long iterations,
                           double growth) {
  if (iterations < 1) throw std::invalid_argument("iterations must be >= 1");
  TimingReport report;

  const auto pre_start = std::chrono::steady_clock::now();
  const CoverInstance rebuilt = from_sets(inst.n, inst.sets);
  report.pre_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                    pre_start)
          .count();
  if (!(rebuilt == inst))
    throw std::logic_error("dual reconstruction mismatch");

  ReweightConfig config;
  config.growth = growth;
  config.max_iterations = iterations;
  config.record_trace = false;
  report.solve_ms.reserve(static_cast<std::size_t>(iterations));
  reweight_run(inst, config, [&report](const TraceRecord& record) {
    report.solve_ms.push_back(record.iter_ms);
    return true;
  });
  return report;
}

}  // namespace setcover
