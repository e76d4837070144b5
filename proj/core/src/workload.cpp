#include "malsim/workload.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "malsim/util.hpp"

namespace malsim {

namespace {
constexpr const char* kTraceHeader = "#malsim-trace-v1";
}

void ExecutionModel::validate() const {
  if (iterations < 1) throw ConfigError("workload.iterations: must be >= 1");
  if (step_time_table.empty()) {
    throw ConfigError("workload: step-time table is empty");
  }
  double prev = 0.0;
  bool first = true;
  // std::map iterates by ascending node count; times must not increase.
  for (const auto& [nodes, seconds] : step_time_table) {
    if (seconds <= 0.0) {
      throw ConfigError("workload: step time for " + std::to_string(nodes) +
                        " nodes must be positive");
    }
    if (!first && seconds > prev) {
      throw ConfigError("workload: step time increases from " +
                        std::to_string(nodes) + " nodes");
    }
    prev = seconds;
    first = false;
  }
}

double step_time(const ExecutionModel& model, int nodes) {
  auto it = model.step_time_table.find(nodes);
  if (it == model.step_time_table.end()) {
    throw ConfigError("workload: no step time for " + std::to_string(nodes) +
                      " nodes");
  }
  return it->second;
}

std::vector<JobSpec> generate(const WorkloadConfig& config) {
  if (config.job_count < 1) throw ConfigError("workload.job_count: must be >= 1");
  if (config.inter_arrival < 0) {
    throw ConfigError("workload.inter_arrival: must be >= 0");
  }
  config.job_template.limits.validate();
  config.job_template.model.validate();
  std::vector<JobSpec> jobs(config.job_count, config.job_template);
  for (int i = 0; i < config.job_count; ++i) {
    jobs[i].id = i;
    jobs[i].arrival_time = i * config.inter_arrival;
  }
  return jobs;
}

std::string trace_to_string(const std::vector<JobSpec>& jobs) {
  std::string out = std::string(kTraceHeader) + "\n";
  out += "id,arrival_s,lower,upper,preferred,stride,iterations,strategy\n";
  for (const JobSpec& job : jobs) {
    out += std::to_string(job.id) + "," + fmt_g(job.arrival_time, 17) + "," +
           std::to_string(job.limits.lower) + "," +
           std::to_string(job.limits.upper) + "," +
           std::to_string(job.limits.preferred) + "," +
           std::to_string(job.limits.stride_base) + "," +
           std::to_string(job.model.iterations) + "," +
           strategy_name(job.strategy) + "\n";
  }
  return out;
}

void save_trace(const std::vector<JobSpec>& jobs, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ConfigError("trace: cannot write " + path);
  out << trace_to_string(jobs);
  if (!out) throw ConfigError("trace: write to " + path + " failed");
}

std::vector<JobSpec> load_trace(const std::string& path,
                                const JobSpec& job_template) {
  std::ifstream in(path);
  if (!in) throw ConfigError("trace: cannot read " + path);

  auto fail = [&](int line_no, const std::string& why) -> std::vector<JobSpec> {
    throw ConfigError("trace: " + path + ":" + std::to_string(line_no) + ": " +
                      why);
  };

  std::string line;
  int line_no = 0;
  if (!std::getline(in, line)) return fail(1, "empty file");
  ++line_no;
  if (line != kTraceHeader) {
    return fail(line_no, "expected header " + std::string(kTraceHeader));
  }

  std::vector<JobSpec> jobs;
  double prev_arrival = -1.0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;  // tolerate blank lines
    if (line.rfind("id,arrival", 0) == 0) continue;  // column header

    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string item;
    while (std::getline(ss, item, ',')) fields.push_back(item);
    if (fields.size() != 8) return fail(line_no, "expected 8 fields");

    JobSpec job = job_template;
    try {
      job.id = std::stoi(fields[0]);
      job.arrival_time = std::stod(fields[1]);
      job.limits.lower = std::stoi(fields[2]);
      job.limits.upper = std::stoi(fields[3]);
      job.limits.preferred = std::stoi(fields[4]);
      job.limits.stride_base = std::stoi(fields[5]);
      job.model.iterations = std::stoi(fields[6]);
    } catch (const std::exception&) {
      return fail(line_no, "malformed numeric field");
    }
    const auto strategy = parse_strategy(fields[7]);
    if (!strategy) return fail(line_no, "unknown strategy '" + fields[7] + "'");
    job.strategy = *strategy;
    try {
      job.limits.validate();
    } catch (const ConfigError& e) {
      return fail(line_no, e.what());
    }
    if (job.arrival_time < prev_arrival) {
      return fail(line_no, "arrival times must be nondecreasing");
    }
    prev_arrival = job.arrival_time;
    jobs.push_back(std::move(job));
  }
  if (jobs.empty()) return fail(line_no, "trace contains no jobs");
  return jobs;
}

ExecutionModel build_execution_model(const MalleabilityLimits& limits,
                                     int iterations, int anchor_nodes,
                                     double anchor_step_time, double alpha,
                                     const std::map<int, double>& overrides) {
  if (anchor_step_time <= 0.0) {
    throw ConfigError("workload.step_time: anchor step time must be positive");
  }
  ExecutionModel model;
  model.iterations = iterations;
  for (int nodes : limits.ladder()) {
    auto it = overrides.find(nodes);
    if (it != overrides.end()) {
      model.step_time_table[nodes] = it->second;
    } else {
      model.step_time_table[nodes] =
          anchor_step_time *
          std::pow(static_cast<double>(anchor_nodes) / nodes, alpha);
    }
  }
  model.validate();
  return model;
}

}  // namespace malsim
