#include "malsim/scheduler.hpp"

#include "malsim/util.hpp"

namespace malsim {

std::optional<Policy> parse_policy(const std::string& name) {
  if (name == "static") return Policy::Static;
  if (name == "dynres-baseline") return Policy::DynresBaseline;
  if (name == "dynres-merge") return Policy::DynresMerge;
  return std::nullopt;
}

const char* policy_name(Policy policy) {
  switch (policy) {
    case Policy::Static: return "static";
    case Policy::DynresBaseline: return "dynres-baseline";
    case Policy::DynresMerge: return "dynres-merge";
  }
  return "?";
}

void MalleabilityLimits::validate() const {
  if (stride_base < 2) throw ConfigError("limits.stride: must be >= 2");
  if (lower < 1) throw ConfigError("limits.lower: must be >= 1");
  if (!(lower <= preferred && preferred <= upper)) {
    throw ConfigError("limits: need lower <= preferred <= upper");
  }
  bool saw_preferred = false, saw_upper = false;
  for (int s : ladder()) {
    saw_preferred |= s == preferred;
    saw_upper |= s == upper;
  }
  if (!saw_preferred) {
    throw ConfigError("limits.preferred: not reachable from lower by stride");
  }
  if (!saw_upper) {
    throw ConfigError("limits.upper: not reachable from lower by stride");
  }
}

std::vector<int> MalleabilityLimits::ladder() const {
  std::vector<int> sizes;
  for (long long s = lower; s <= upper; s *= stride_base) {
    sizes.push_back(static_cast<int>(s));
  }
  return sizes;
}

std::optional<int> select_start_size(const MalleabilityLimits& limits,
                                     int avail) {
  std::optional<int> best;
  for (int s : limits.ladder()) {
    if (s <= avail) best = s;
  }
  return best;
}

ReconfigDecision decide_reconfiguration(int current,
                                        const MalleabilityLimits& limits,
                                        bool pending, int avail,
                                        std::optional<int> head_pending_lower) {
  const int expand_target = current * limits.stride_base;
  const bool expandable =
      expand_target <= limits.upper && (expand_target - current) <= avail;
  const int shrink_target = current / limits.stride_base;
  const bool head_startable = pending && head_pending_lower.has_value() &&
                              avail + shrink_target >= *head_pending_lower;

  if (!pending) {
    return expandable ? ReconfigDecision::expand(expand_target)
                      : ReconfigDecision::none();
  }
  if (current < limits.preferred) {
    return expandable ? ReconfigDecision::expand(expand_target)
                      : ReconfigDecision::none();
  }
  if (head_startable) {
    if (current > limits.preferred) {
      return ReconfigDecision::shrink(shrink_target);
    }
    // At the sweet spot with a startable pending job: hold size so the
    // freed/free nodes can go to the queue, not to this job.
    return ReconfigDecision::none();
  }
  return expandable ? ReconfigDecision::expand(expand_target)
                    : ReconfigDecision::none();
}

void JobQueue::push(QueueEntry entry) { entries_.push_back(std::move(entry)); }

std::size_t JobQueue::head_index() const {
  if (entries_.empty()) throw InvariantError("queue: head of empty queue");
  std::size_t best = 0;
  for (std::size_t i = 1; i < entries_.size(); ++i) {
    const QueueEntry& a = entries_[i];
    const QueueEntry& b = entries_[best];
    if (a.priority != b.priority ? a.priority > b.priority
        : a.submit_time != b.submit_time ? a.submit_time < b.submit_time
                                         : a.job < b.job) {
      best = i;
    }
  }
  return best;
}

const QueueEntry& JobQueue::head() const { return entries_[head_index()]; }

QueueEntry JobQueue::pop_head() {
  const std::size_t i = head_index();
  QueueEntry entry = std::move(entries_[i]);
  entries_.erase(entries_.begin() + static_cast<std::ptrdiff_t>(i));
  return entry;
}

void JobQueue::bump_head_priority(int delta) {
  entries_[head_index()].priority += delta;
}

}  // namespace malsim
