#include "malsim/cluster.hpp"

#include <algorithm>
#include <string>

#include "malsim/util.hpp"

namespace malsim {

Cluster::Cluster(ClusterConfig config) : config_(config) {
  if (config_.node_count < 1 || config_.ranks_per_node < 1) {
    throw ConfigError("cluster: node_count and ranks_per_node must be >= 1");
  }
  busy_.assign(config_.node_count, false);
  timelines_.resize(config_.node_count);
}

int Cluster::available_nodes() const {
  return static_cast<int>(std::count(busy_.begin(), busy_.end(), false));
}

int Cluster::live_allocation_nodes() const {
  int total = 0;
  for (const auto& a : allocations_) {
    if (a.live) total += static_cast<int>(a.nodes.size());
  }
  return total;
}

void Cluster::open_interval(int node, double now) {
  busy_[node] = true;
  timelines_[node].push_back(BusyInterval{now, -1.0});
}

void Cluster::close_interval(int node, double now) {
  busy_[node] = false;
  auto& intervals = timelines_[node];
  if (intervals.empty() || !intervals.back().open()) {
    throw InvariantError("cluster: closing node " + std::to_string(node) +
                         " with no open interval");
  }
  intervals.back().end = now;
}

int Cluster::allocate(int job, int nodes, double now) {
  if (nodes < 1) throw InvariantError("allocate: node count must be >= 1");
  if (nodes > available_nodes()) {
    throw InvariantError("allocate: job " + std::to_string(job) + " wants " +
                         std::to_string(nodes) + " nodes, only " +
                         std::to_string(available_nodes()) + " free");
  }
  Allocation alloc;
  alloc.job = job;
  alloc.since = now;
  alloc.live = true;
  for (int n = 0; n < config_.node_count && (int)alloc.nodes.size() < nodes; ++n) {
    if (!busy_[n]) {
      alloc.nodes.push_back(n);
      open_interval(n, now);
    }
  }
  allocations_.push_back(std::move(alloc));
  return static_cast<int>(allocations_.size()) - 1;
}

void Cluster::resize(int alloc_id, int new_nodes, double now) {
  Allocation& alloc = allocations_.at(alloc_id);
  if (!alloc.live) throw InvariantError("resize: allocation not live");
  const int current = static_cast<int>(alloc.nodes.size());
  if (new_nodes == current) return;
  if (new_nodes < 1) throw InvariantError("resize: node count must be >= 1");
  if (new_nodes < current) {
    // Shrink: drop the highest-numbered held nodes.
    for (int i = 0; i < current - new_nodes; ++i) {
      close_interval(alloc.nodes.back(), now);
      alloc.nodes.pop_back();
    }
  } else {
    const int delta = new_nodes - current;
    if (delta > available_nodes()) {
      throw InvariantError("resize: job " + std::to_string(alloc.job) +
                           " grows by " + std::to_string(delta) + ", only " +
                           std::to_string(available_nodes()) + " free");
    }
    for (int n = 0; n < config_.node_count && (int)alloc.nodes.size() < new_nodes;
         ++n) {
      if (!busy_[n]) {
        alloc.nodes.push_back(n);
        open_interval(n, now);
      }
    }
    std::sort(alloc.nodes.begin(), alloc.nodes.end());
  }
}

void Cluster::release(int alloc_id, double now) {
  Allocation& alloc = allocations_.at(alloc_id);
  if (!alloc.live) {
    throw InvariantError("release: allocation for job " +
                         std::to_string(alloc.job) + " already released");
  }
  for (int n : alloc.nodes) close_interval(n, now);
  alloc.nodes.clear();
  alloc.live = false;
}

const Allocation& Cluster::allocation(int alloc_id) const {
  return allocations_.at(alloc_id);
}

double Cluster::busy_time(int node) const {
  double total = 0.0;
  for (const auto& iv : timelines_.at(node)) {
    if (iv.open()) {
      throw InvariantError("busy_time: node " + std::to_string(node) +
                           " has an open interval");
    }
    total += iv.end - iv.start;
  }
  return total;
}

}  // namespace malsim
