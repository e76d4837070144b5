#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "malsim/malleability.hpp"
#include "malsim/scheduler.hpp"

namespace malsim {

// Seconds per iteration as a function of node count. Entries exist for
// every size on the job's ladder; no interpolation.
struct ExecutionModel {
  std::map<int, double> step_time_table;
  int iterations = 20;

  void validate() const;
};

double step_time(const ExecutionModel& model, int nodes);

struct JobSpec {
  int id = 0;
  double arrival_time = 0.0;
  MalleabilityLimits limits;
  ExecutionModel model;
  SpawnStrategy strategy = SpawnStrategy::Merge;
  std::int64_t element_size = 8;
  std::int64_t elements_per_array = 0;  // redistributable elements, halo-free
  int array_count = 4;
};

struct WorkloadConfig {
  int job_count = 1000;
  double inter_arrival = 1.0;
  std::uint64_t seed = 1;
  JobSpec job_template;
};

// job i arrives at i * inter_arrival; all jobs share the template.
std::vector<JobSpec> generate(const WorkloadConfig& config);

// Line-oriented trace with a versioned header; round-trips losslessly.
// Fields the trace does not carry (execution model, array sizes) come from
// the template.
void save_trace(const std::vector<JobSpec>& jobs, const std::string& path);
std::vector<JobSpec> load_trace(const std::string& path,
                                const JobSpec& job_template);

std::string trace_to_string(const std::vector<JobSpec>& jobs);

// Builds the per-size step-time table: explicit overrides win, other ladder
// sizes follow the strong-scaling model T(n) = T(anchor) * (anchor/n)^alpha.
ExecutionModel build_execution_model(const MalleabilityLimits& limits,
                                     int iterations, int anchor_nodes,
                                     double anchor_step_time, double alpha,
                                     const std::map<int, double>& overrides);

}  // namespace malsim
