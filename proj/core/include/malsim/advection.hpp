#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "malsim/redistribution.hpp"

namespace malsim {

// 3D domain of n planes of (m+1) x (l+1) cells, slab-decomposed along the
// plane axis with `halo` ghost planes per side. Grid spacing is 1.
struct GridDims {
  std::int64_t n = 1024;
  int m = 127;
  int l = 31;
  int halo = 1;

  std::int64_t plane_cells() const {
    return static_cast<std::int64_t>(m + 1) * (l + 1);
  }
  std::int64_t interior_cells() const { return n * plane_cells(); }
};

struct AdvectionParams {
  double vel1 = 0.5;  // constant velocity per axis; divergence-free
  double vel2 = 0.25;
  double vel3 = 0.125;
  double dt = 0.5;
};

// One virtual rank's slab: owned planes [lo, hi) plus halo planes on both
// sides, plane-major contiguous.
struct FieldShard {
  int owner = 0;
  std::int64_t lo = 0;
  std::int64_t hi = 0;
  std::vector<double> data;

  std::int64_t local_planes() const { return hi - lo; }
};

struct DistributedField {
  std::vector<FieldShard> shards;
};

struct AdvectionState {
  GridDims dims;
  AdvectionParams params;
  int ranks = 1;
  int iteration = 0;
  DistributedField psi;
  DistributedField vel1, vel2, vel3;
};

// A scheduled mid-run reconfiguration: after `iteration` completes, move
// from np to nt virtual ranks.
struct KernelReconfig {
  int iteration = 0;
  int np = 0;
  int nt = 0;
};

// Called with the plane-unit transfer plan of the scalar field before it is
// applied; tests use it to inject plan defects.
using PlanHook = std::function<void(TransferPlan&)>;

// Seeded deterministic initial state: psi pseudo-random in [0,1) keyed by
// global cell index (so any decomposition sees the same field), velocities
// constant. Validates rank count and the Courant bound per axis.
AdvectionState init_domain(const GridDims& dims, std::uint64_t seed, int ranks,
                           const AdvectionParams& params = {});

// Refresh halo planes from the neighbouring shards' interiors; periodic
// along the decomposed axis. Idempotent.
void halo_exchange(DistributedField& field, const GridDims& dims);

// One forward-in-time step: first-order donor-cell upwind fluxes applied
// axis by axis (1, then 2, then 3) with a fixed per-cell operand order,
// which is what makes results bitwise independent of the decomposition.
// Halos must be current; only pass 1 reads them.
void advection_step(AdvectionState& state);

// Repartition all four distributed arrays onto `new_ranks` shards. Interiors
// are packed halo-free, moved by a plane-unit block plan, and halos are
// rebuilt by the next exchange.
void reconfigure(AdvectionState& state, int new_ranks,
                 const PlanHook& hook = {});

// Interior planes concatenated into one global array.
std::vector<double> assemble(const DistributedField& field,
                             const GridDims& dims);

// Run `steps` iterations with reconfigurations at the scheduled boundaries;
// returns the assembled final psi. Schedule iterations must be strictly
// increasing within [1, steps).
std::vector<double> run_with_reconfig(const GridDims& dims, std::uint64_t seed,
                                      int steps, int initial_ranks,
                                      const std::vector<KernelReconfig>& schedule,
                                      const AdvectionParams& params = {},
                                      const PlanHook& hook = {});

// Index of the first bitwise-differing cell, or -1 when identical.
std::int64_t first_mismatch(const std::vector<double>& a,
                            const std::vector<double>& b);

std::uint64_t field_checksum(const std::vector<double>& cells);

}  // namespace malsim
