#pragma once

#include <optional>
#include <string>
#include <vector>

namespace malsim {

enum class Policy { Static, DynresBaseline, DynresMerge };

std::optional<Policy> parse_policy(const std::string& name);
const char* policy_name(Policy policy);

// Per-job reconfiguration limits: lower/upper node bounds, the preferred
// "sweet spot" size, and the multiplicative stride between permitted sizes.
struct MalleabilityLimits {
  int lower = 1;
  int upper = 4;
  int preferred = 2;
  int stride_base = 2;

  // lower <= preferred <= upper, and preferred/upper reachable from lower
  // by repeated multiplication with stride_base.
  void validate() const;
  // Permitted sizes: {lower, lower*stride, ...} up to upper.
  std::vector<int> ladder() const;
};

struct QueueEntry {
  int job = -1;
  double submit_time = 0.0;
  int priority = 0;  // higher dequeues first
  MalleabilityLimits limits;
};

struct ReconfigDecision {
  enum class Verdict { None, Expand, Shrink };
  Verdict verdict = Verdict::None;
  int target = 0;                  // nodes; meaningful for Expand/Shrink
  bool bump_head_priority = false; // set when a Shrink hands nodes to the head job

  static ReconfigDecision none() { return {}; }
  static ReconfigDecision expand(int target) {
    return {Verdict::Expand, target, false};
  }
  static ReconfigDecision shrink(int target) {
    return {Verdict::Shrink, target, true};
  }
  bool operator==(const ReconfigDecision&) const = default;
};

// Largest permitted start size <= avail, or nothing if even the lower
// bound does not fit. Jobs are moldable: the scheduler picks the size.
std::optional<int> select_start_size(const MalleabilityLimits& limits,
                                     int avail);

// The reconfiguration policy, invoked when a running job reaches a
// synchronization point. `current` is the job's node count, `pending`
// whether the queue is non-empty, `avail` the free node count, and
// `head_pending_lower` the lower bound of the highest-priority queued job
// (nothing when the queue is empty).
//
// Branches, in order:
//   - no pending jobs and the job can double within bounds -> Expand
//   - pending and current < preferred and it can double      -> Expand
//   - pending and current > preferred and halving would let
//     the head job start -> Shrink (and bump that job's priority)
//   - pending, head not startable, and it can double          -> Expand
//   - otherwise -> None
// A job at its preferred size never shrinks; while the head job is
// startable it does not expand past the sweet spot either.
ReconfigDecision decide_reconfiguration(int current,
                                        const MalleabilityLimits& limits,
                                        bool pending, int avail,
                                        std::optional<int> head_pending_lower);

// FCFS queue with priority override. Dequeue order: descending priority,
// then ascending submit time, then ascending job id.
class JobQueue {
 public:
  void push(QueueEntry entry);
  bool empty() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }
  const QueueEntry& head() const;
  QueueEntry pop_head();
  void bump_head_priority(int delta = 1);

 private:
  std::size_t head_index() const;
  std::vector<QueueEntry> entries_;
};

}  // namespace malsim
