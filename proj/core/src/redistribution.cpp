#include "malsim/redistribution.hpp"

#include <algorithm>

namespace malsim {

std::pair<std::int64_t, std::int64_t> block_range(int rank, int parts,
                                                  std::int64_t total_len) {
  if (parts < 1) throw InvariantError("block_range: parts must be >= 1");
  if (total_len < 0) throw InvariantError("block_range: negative length");
  if (rank < 0 || rank >= parts) {
    throw InvariantError("block_range: rank " + std::to_string(rank) +
                         " out of range for " + std::to_string(parts) +
                         " parts");
  }
  const auto p = static_cast<std::int64_t>(parts);
  const auto r = static_cast<std::int64_t>(rank);
  return {r * total_len / p, (r + 1) * total_len / p};
}

int block_owner(std::int64_t g, int parts, std::int64_t total_len) {
  if (g < 0 || g >= total_len) {
    throw InvariantError("block_owner: item index out of range");
  }
  // Inverse of the floor layout: the unique r with lo(r) <= g < lo(r+1).
  const auto p = static_cast<std::int64_t>(parts);
  auto r = static_cast<int>(((g + 1) * p - 1) / total_len);
  return r;
}

TransferPlan compute_plan(int np, int nt, std::int64_t total_len) {
  if (np < 1 || nt < 1) throw InvariantError("compute_plan: NP, NT must be >= 1");
  if (total_len < 0) throw InvariantError("compute_plan: negative length");
  TransferPlan plan{np, nt, total_len, {}};
  int src = 0;
  for (int dst = 0; dst < nt; ++dst) {
    const auto [dlo, dhi] = block_range(dst, nt, total_len);
    if (dlo == dhi) continue;
    // Sources are visited monotonically; rewind is never needed because
    // destination ranges ascend.
    while (block_range(src, np, total_len).second <= dlo) ++src;
    for (int s = src; s < np; ++s) {
      const auto [slo, shi] = block_range(s, np, total_len);
      const std::int64_t lo = std::max(slo, dlo);
      const std::int64_t hi = std::min(shi, dhi);
      if (lo < hi) plan.messages.push_back({s, dst, lo, hi - lo});
      if (shi >= dhi) break;
    }
  }
  return plan;
}

PlanAccounting account(const TransferPlan& plan, SpawnStrategy strategy,
                       std::int64_t element_size) {
  PlanAccounting acct;
  const int recycled = std::min(plan.np, plan.nt);
  for (const TransferMessage& msg : plan.messages) {
    const std::int64_t bytes = msg.len * element_size;
    const bool local = strategy == SpawnStrategy::Merge && msg.src == msg.dst &&
                       msg.src < recycled;
    (local ? acct.local_bytes : acct.network_bytes) += bytes;
    ++acct.message_count;
  }
  return acct;
}

}  // namespace malsim
