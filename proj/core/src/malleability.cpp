#include "malsim/malleability.hpp"

#include <algorithm>

#include "malsim/util.hpp"

namespace malsim {

std::optional<SpawnStrategy> parse_strategy(const std::string& name) {
  if (name == "baseline") return SpawnStrategy::Baseline;
  if (name == "merge") return SpawnStrategy::Merge;
  return std::nullopt;
}

const char* strategy_name(SpawnStrategy strategy) {
  return strategy == SpawnStrategy::Baseline ? "baseline" : "merge";
}

bool check_allowed(InhibitorCounter& inhibitor, int iter) {
  if (inhibitor.period < 1) throw InvariantError("inhibitor: period must be >= 1");
  if (iter < 0) throw InvariantError("inhibitor: negative iteration");
  if (inhibitor.last_check_iter &&
      iter - *inhibitor.last_check_iter < inhibitor.period) {
    return false;
  }
  inhibitor.last_check_iter = iter;
  return true;
}

int spawn_count(SpawnStrategy strategy, int np, int nt) {
  if (np < 1 || nt < 1) throw InvariantError("spawn_count: NP, NT must be >= 1");
  if (strategy == SpawnStrategy::Baseline) return nt;
  return std::max(0, nt - np);
}

SpawnStrategy effective_strategy(SpawnStrategy configured, int reconfig_count) {
  return reconfig_count == 0 ? SpawnStrategy::Baseline : configured;
}

void CostParams::validate() const {
  if (spawn_cost < 0 || redist_bandwidth < 0 || redist_latency < 0 ||
      base_overhead < 0) {
    throw ConfigError("cost: all parameters must be non-negative");
  }
}

double reconfiguration_overhead(SpawnStrategy strategy, int np, int nt,
                                std::int64_t network_bytes,
                                std::int64_t message_count,
                                const CostParams& params) {
  double seconds = params.base_overhead;
  seconds += params.spawn_cost * spawn_count(strategy, np, nt);
  seconds += params.redist_latency * static_cast<double>(message_count);
  if (params.redist_bandwidth > 0.0) {
    seconds += static_cast<double>(network_bytes) / params.redist_bandwidth;
  }
  return seconds;
}

}  // namespace malsim
