#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <queue>
#include <string>
#include <vector>

namespace malsim {

enum class EventKind {
  JobArrival,
  JobStartAttempt,
  IterationComplete,
  ReconfigRequest,
  ReconfigComplete,
  JobComplete,
};

const char* event_kind_name(EventKind kind);

struct Event {
  double time = 0.0;
  std::uint64_t seq = 0;  // insertion order, breaks ties at equal time
  EventKind kind = EventKind::JobArrival;
  int job = -1;
  std::int64_t detail = 0;  // kind-specific: iteration index, target nodes, ...
};

// Deterministic discrete-event core. Events are processed in ascending
// (time, seq) order, so two runs over the same inputs replay identically.
class SimEngine {
 public:
  using Handler = std::function<void(const Event&)>;

  double now() const { return now_; }

  void on(EventKind kind, Handler handler);

  // Enqueue an event at an absolute time. Scheduling into the past is a
  // logic bug and aborts the simulation.
  void schedule(double time, EventKind kind, int job, std::int64_t detail = 0);

  // Drain the queue; stops early once the next event lies beyond `until`.
  // Returns the final clock.
  double run(std::optional<double> until = std::nullopt);

  void enable_log(bool on = true) { log_enabled_ = on; }
  const std::vector<std::string>& log() const { return log_; }
  std::uint64_t processed_count() const { return processed_; }

 private:
  struct Later {
    bool operator()(const Event& a, const Event& b) const {
      if (a.time != b.time) return a.time > b.time;
      return a.seq > b.seq;
    }
  };

  double now_ = 0.0;
  std::uint64_t next_seq_ = 0;
  std::uint64_t processed_ = 0;
  std::priority_queue<Event, std::vector<Event>, Later> queue_;
  std::vector<Handler> handlers_ = std::vector<Handler>(6);
  bool log_enabled_ = false;
  std::vector<std::string> log_;
};

}  // namespace malsim
