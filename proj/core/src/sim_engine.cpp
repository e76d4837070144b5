#include "malsim/sim_engine.hpp"

#include "malsim/util.hpp"

namespace malsim {

const char* event_kind_name(EventKind kind) {
  switch (kind) {
    case EventKind::JobArrival: return "JobArrival";
    case EventKind::JobStartAttempt: return "JobStartAttempt";
    case EventKind::IterationComplete: return "IterationComplete";
    case EventKind::ReconfigRequest: return "ReconfigRequest";
    case EventKind::ReconfigComplete: return "ReconfigComplete";
    case EventKind::JobComplete: return "JobComplete";
  }
  return "?";
}

void SimEngine::on(EventKind kind, Handler handler) {
  handlers_[static_cast<std::size_t>(kind)] = std::move(handler);
}

void SimEngine::schedule(double time, EventKind kind, int job,
                         std::int64_t detail) {
  if (time < now_) {
    throw InvariantError("schedule: event at t=" + fmt_g(time) +
                         " is before clock t=" + fmt_g(now_));
  }
  queue_.push(Event{time, next_seq_++, kind, job, detail});
}

double SimEngine::run(std::optional<double> until) {
  while (!queue_.empty()) {
    const Event ev = queue_.top();
    if (until && ev.time > *until) break;
    queue_.pop();
    now_ = ev.time;
    const auto& handler = handlers_[static_cast<std::size_t>(ev.kind)];
    if (!handler) {
      throw InvariantError(std::string("run: no handler for event kind ") +
                           event_kind_name(ev.kind));
    }
    if (log_enabled_) {
      log_.push_back(fmt_g(ev.time) + "\t" + event_kind_name(ev.kind) + "\t" +
                     std::to_string(ev.job) + "\t" + std::to_string(ev.detail));
    }
    ++processed_;
    handler(ev);
  }
  return now_;
}

}  // namespace malsim
