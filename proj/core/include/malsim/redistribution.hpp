#pragma once

#include <cstdint>
#include <vector>

#include "malsim/malleability.hpp"
#include "malsim/util.hpp"

namespace malsim {

// Contiguous block layout: rank r of P owns [floor(r*L/P), floor((r+1)*L/P)).
// The ranges partition [0, L); when P divides L every rank owns L/P items.
std::pair<std::int64_t, std::int64_t> block_range(int rank, int parts,
                                                  std::int64_t total_len);

// Owning rank of item g under a block layout of P parts over L items.
int block_owner(std::int64_t g, int parts, std::int64_t total_len);

struct TransferMessage {
  int src = 0;  // rank in the old group
  int dst = 0;  // rank in the new group
  std::int64_t offset = 0;  // global item index
  std::int64_t len = 0;
};

struct TransferPlan {
  int np = 0;
  int nt = 0;
  std::int64_t total_len = 0;
  std::vector<TransferMessage> messages;  // ordered by (dst, offset)
};

// All non-empty intersections old_block(src) ∩ new_block(dst). Together the
// message ranges tile [0, L) exactly.
TransferPlan compute_plan(int np, int nt, std::int64_t total_len);

struct PlanAccounting {
  std::int64_t network_bytes = 0;
  std::int64_t local_bytes = 0;
  std::int64_t message_count = 0;
};

// Byte accounting per spawn strategy. Merge recycles ranks 0..min(NP,NT)-1,
// so their self-messages stay node-local; Baseline's target group is all
// new processes and every byte crosses the network.
PlanAccounting account(const TransferPlan& plan, SpawnStrategy strategy,
                       std::int64_t element_size);

// Move data between shard sets according to a plan. Each plan item may
// stand for `elems_per_unit` consecutive elements (1 for scalar arrays;
// the advection kernel plans in planes and passes the plane size here).
template <typename T>
std::vector<std::vector<T>> apply_plan(const TransferPlan& plan,
                                       const std::vector<std::vector<T>>& old_shards,
                                       std::int64_t elems_per_unit = 1) {
  if (static_cast<int>(old_shards.size()) != plan.np) {
    throw InvariantError("apply_plan: expected " + std::to_string(plan.np) +
                         " source shards, got " +
                         std::to_string(old_shards.size()));
  }
  for (int r = 0; r < plan.np; ++r) {
    const auto [lo, hi] = block_range(r, plan.np, plan.total_len);
    if (static_cast<std::int64_t>(old_shards[r].size()) !=
        (hi - lo) * elems_per_unit) {
      throw InvariantError("apply_plan: source shard " + std::to_string(r) +
                           " has length " + std::to_string(old_shards[r].size()) +
                           ", expected " + std::to_string((hi - lo) * elems_per_unit));
    }
  }
  std::vector<std::vector<T>> new_shards(plan.nt);
  for (int r = 0; r < plan.nt; ++r) {
    const auto [lo, hi] = block_range(r, plan.nt, plan.total_len);
    new_shards[r].resize(static_cast<std::size_t>((hi - lo) * elems_per_unit));
  }
  for (const TransferMessage& msg : plan.messages) {
    const auto src_lo = block_range(msg.src, plan.np, plan.total_len).first;
    const auto dst_lo = block_range(msg.dst, plan.nt, plan.total_len).first;
    const T* from = old_shards[msg.src].data() +
                    (msg.offset - src_lo) * elems_per_unit;
    T* to = new_shards[msg.dst].data() + (msg.offset - dst_lo) * elems_per_unit;
    std::copy(from, from + msg.len * elems_per_unit, to);
  }
  return new_shards;
}

}  // namespace malsim
