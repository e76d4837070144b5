#pragma once

#include <map>
#include <vector>

namespace malsim {

struct ClusterConfig {
  int node_count = 8;
  int ranks_per_node = 16;
};

// Closed-open busy interval on one node, in simulated seconds.
struct BusyInterval {
  double start = 0.0;
  double end = -1.0;  // < 0 while the interval is still open

  bool open() const { return end < 0.0; }
};

struct Allocation {
  int job = -1;
  std::vector<int> nodes;  // sorted ascending
  double since = 0.0;
  bool live = false;
};

// Node inventory and per-node busy-interval bookkeeping. Placement is
// deterministic: allocations take the lowest-numbered free nodes, shrinks
// release the highest-numbered held nodes.
class Cluster {
 public:
  explicit Cluster(ClusterConfig config);

  const ClusterConfig& config() const { return config_; }
  int available_nodes() const;

  int allocate(int job, int nodes, double now);
  void resize(int alloc_id, int new_nodes, double now);
  void release(int alloc_id, double now);

  const Allocation& allocation(int alloc_id) const;
  // Busy intervals per node; all closed once every allocation is released.
  const std::vector<std::vector<BusyInterval>>& timelines() const {
    return timelines_;
  }
  double busy_time(int node) const;
  int live_allocation_nodes() const;

 private:
  void open_interval(int node, double now);
  void close_interval(int node, double now);

  ClusterConfig config_;
  std::vector<bool> busy_;
  std::vector<std::vector<BusyInterval>> timelines_;
  std::vector<Allocation> allocations_;
};

}  // namespace malsim
