#pragma once

#include <optional>
#include <string>

namespace malsim {

// How a reconfiguration builds the new process group. Baseline spawns all
// NT target processes; Merge keeps min(NP, NT) of the originals and spawns
// only the difference.
enum class SpawnStrategy { Baseline, Merge };

std::optional<SpawnStrategy> parse_strategy(const std::string& name);
const char* strategy_name(SpawnStrategy strategy);

enum class ReconfigPhase { Steady, PendingCompletion };

struct ReconfigState {
  ReconfigPhase phase = ReconfigPhase::Steady;
  int count = 0;  // completed reconfigurations
};

// Throttle on reconfiguration checks: after an allowed check, the next
// `period` - 1 synchronization points are skipped.
struct InhibitorCounter {
  int period = 2;
  std::optional<int> last_check_iter;
};

// True when a check may run at iteration `iter`; records the check.
bool check_allowed(InhibitorCounter& inhibitor, int iter);

// Processes spawned when moving a group of NP processes to NT.
int spawn_count(SpawnStrategy strategy, int np, int nt);

// The very first reconfiguration of a job always uses Baseline; the
// configured strategy applies from the second one on.
SpawnStrategy effective_strategy(SpawnStrategy configured, int reconfig_count);

struct CostParams {
  double spawn_cost = 0.0;        // seconds per spawned process
  double redist_bandwidth = 0.0;  // aggregate bytes/second; 0 = not modeled
  double redist_latency = 0.0;    // seconds per message
  double base_overhead = 0.0;     // fixed seconds per reconfiguration

  void validate() const;
};

// Wall-clock cost of one synchronous reconfiguration. The byte and message
// figures come from the redistribution plan for the effective process
// counts.
double reconfiguration_overhead(SpawnStrategy strategy, int np, int nt,
                                std::int64_t network_bytes,
                                std::int64_t message_count,
                                const CostParams& params);

}  // namespace malsim
