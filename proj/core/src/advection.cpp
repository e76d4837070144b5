#include "malsim/advection.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>

#include "malsim/util.hpp"

namespace malsim {

namespace {

void validate_ranks(const GridDims& dims, int ranks) {
  if (ranks < 1) throw ConfigError("kernel: rank count must be >= 1");
  if (dims.n / ranks < dims.halo) {
    throw ConfigError("kernel: " + std::to_string(ranks) +
                      " ranks leave less than " + std::to_string(dims.halo) +
                      " plane(s) per rank on a " + std::to_string(dims.n) +
                      "-plane grid");
  }
}

FieldShard make_shard(const GridDims& dims, int ranks, int rank) {
  const auto [lo, hi] = block_range(rank, ranks, dims.n);
  FieldShard shard;
  shard.owner = rank;
  shard.lo = lo;
  shard.hi = hi;
  shard.data.assign(
      static_cast<std::size_t>((hi - lo + 2 * dims.halo) * dims.plane_cells()),
      0.0);
  return shard;
}

DistributedField make_field(const GridDims& dims, int ranks) {
  DistributedField field;
  field.shards.reserve(ranks);
  for (int r = 0; r < ranks; ++r) field.shards.push_back(make_shard(dims, ranks, r));
  return field;
}

void fill_constant(DistributedField& field, double value) {
  for (FieldShard& shard : field.shards) {
    std::fill(shard.data.begin(), shard.data.end(), value);
  }
}

}  // namespace

AdvectionState init_domain(const GridDims& dims, std::uint64_t seed, int ranks,
                           const AdvectionParams& params) {
  if (dims.n < 1 || dims.m < 0 || dims.l < 0 || dims.halo < 1) {
    throw ConfigError("kernel: invalid grid dimensions");
  }
  validate_ranks(dims, ranks);
  // dt is validated once, against the fixed grid spacing of 1.
  for (double v : {params.vel1, params.vel2, params.vel3}) {
    if (std::abs(v) * params.dt > 1.0) {
      throw ConfigError("kernel: Courant number " + fmt_g(std::abs(v) * params.dt) +
                        " exceeds 1; reduce dt");
    }
  }

  AdvectionState state;
  state.dims = dims;
  state.params = params;
  state.ranks = ranks;
  state.psi = make_field(dims, ranks);
  state.vel1 = make_field(dims, ranks);
  state.vel2 = make_field(dims, ranks);
  state.vel3 = make_field(dims, ranks);
  fill_constant(state.vel1, params.vel1);
  fill_constant(state.vel2, params.vel2);
  fill_constant(state.vel3, params.vel3);

  const std::int64_t cells = dims.plane_cells();
  for (FieldShard& shard : state.psi.shards) {
    for (std::int64_t p = 0; p < shard.local_planes(); ++p) {
      double* plane = shard.data.data() + (p + dims.halo) * cells;
      const std::int64_t base = (shard.lo + p) * cells;
      for (std::int64_t c = 0; c < cells; ++c) {
        plane[c] = det_uniform01(seed, static_cast<std::uint64_t>(base + c));
      }
    }
  }
  return state;
}

void halo_exchange(DistributedField& field, const GridDims& dims) {
  const int ranks = static_cast<int>(field.shards.size());
  const std::int64_t cells = dims.plane_cells();
  const std::size_t plane_bytes = static_cast<std::size_t>(cells) * sizeof(double);
  auto interior_plane = [&](std::int64_t global) -> const double* {
    const int owner = block_owner(global, ranks, dims.n);
    const FieldShard& src = field.shards[owner];
    return src.data.data() + (global - src.lo + dims.halo) * cells;
  };
  for (FieldShard& shard : field.shards) {
    for (int h = 0; h < dims.halo; ++h) {
      const std::int64_t left = ((shard.lo - dims.halo + h) % dims.n + dims.n) % dims.n;
      const std::int64_t right = (shard.hi + h) % dims.n;
      std::memcpy(shard.data.data() + h * cells, interior_plane(left), plane_bytes);
      std::memcpy(shard.data.data() + (dims.halo + shard.local_planes() + h) * cells,
                  interior_plane(right), plane_bytes);
    }
  }
}

namespace {

// One donor-cell pass along a single axis. Face velocities are the average
// of the two adjacent cells, written with a fixed operand order; the flux
// at a shared face therefore computes to identical bits in both adjacent
// cells' updates, on any rank that evaluates it.
inline double donor_cell(double psi_m, double psi_c, double psi_p,
                         double vel_m, double vel_c, double vel_p, double dt) {
  const double face_l = 0.5 * (vel_m + vel_c);
  const double face_r = 0.5 * (vel_c + vel_p);
  const double flux_l =
      std::max(face_l, 0.0) * psi_m + std::min(face_l, 0.0) * psi_c;
  const double flux_r =
      std::max(face_r, 0.0) * psi_c + std::min(face_r, 0.0) * psi_p;
  return psi_c - dt * (flux_r - flux_l);
}

}  // namespace

void advection_step(AdvectionState& state) {
  const GridDims& dims = state.dims;
  const int m1 = dims.m + 1;
  const int l1 = dims.l + 1;
  const std::int64_t s1 = dims.plane_cells();  // plane stride
  const double dt = state.params.dt;

  for (int r = 0; r < state.ranks; ++r) {
    FieldShard& psi = state.psi.shards[r];
    const FieldShard& v1 = state.vel1.shards[r];
    const FieldShard& v2 = state.vel2.shards[r];
    const FieldShard& v3 = state.vel3.shards[r];
    const std::int64_t nl = psi.local_planes();
    std::vector<double> scratch(psi.data.size());

    // Pass 1: decomposed axis; the only pass that reads halo planes.
    const double* in = psi.data.data();
    double* out = scratch.data();
    for (std::int64_t p = dims.halo; p < dims.halo + nl; ++p) {
      for (int j = 0; j < m1; ++j) {
        for (int k = 0; k < l1; ++k) {
          const std::int64_t i = (p * m1 + j) * l1 + k;
          out[i] = donor_cell(in[i - s1], in[i], in[i + s1], v1.data[i - s1],
                              v1.data[i], v1.data[i + s1], dt);
        }
      }
    }

    // Pass 2: second axis, periodic within each plane.
    in = scratch.data();
    out = psi.data.data();
    for (std::int64_t p = dims.halo; p < dims.halo + nl; ++p) {
      for (int j = 0; j < m1; ++j) {
        const int jm = j > 0 ? j - 1 : dims.m;
        const int jp = j < dims.m ? j + 1 : 0;
        for (int k = 0; k < l1; ++k) {
          const std::int64_t i = (p * m1 + j) * l1 + k;
          const std::int64_t im = (p * m1 + jm) * l1 + k;
          const std::int64_t ip = (p * m1 + jp) * l1 + k;
          out[i] = donor_cell(in[im], in[i], in[ip], v2.data[im], v2.data[i],
                              v2.data[ip], dt);
        }
      }
    }

    // Pass 3: third axis, periodic within each row.
    in = psi.data.data();
    out = scratch.data();
    for (std::int64_t p = dims.halo; p < dims.halo + nl; ++p) {
      for (int j = 0; j < m1; ++j) {
        for (int k = 0; k < l1; ++k) {
          const std::int64_t i = (p * m1 + j) * l1 + k;
          const std::int64_t im = (p * m1 + j) * l1 + (k > 0 ? k - 1 : dims.l);
          const std::int64_t ip = (p * m1 + j) * l1 + (k < dims.l ? k + 1 : 0);
          out[i] = donor_cell(in[im], in[i], in[ip], v3.data[im], v3.data[i],
                              v3.data[ip], dt);
        }
      }
    }
    psi.data.swap(scratch);
  }
  ++state.iteration;
}

namespace {

std::vector<std::vector<double>> pack_interiors(const DistributedField& field,
                                                const GridDims& dims) {
  std::vector<std::vector<double>> arrays;
  arrays.reserve(field.shards.size());
  const std::int64_t cells = dims.plane_cells();
  for (const FieldShard& shard : field.shards) {
    const double* begin = shard.data.data() + dims.halo * cells;
    arrays.emplace_back(begin, begin + shard.local_planes() * cells);
  }
  return arrays;
}

void unpack_interiors(DistributedField& field, const GridDims& dims, int ranks,
                      const std::vector<std::vector<double>>& arrays) {
  field.shards.clear();
  field.shards.reserve(ranks);
  const std::int64_t cells = dims.plane_cells();
  for (int r = 0; r < ranks; ++r) {
    FieldShard shard = make_shard(dims, ranks, r);
    std::memcpy(shard.data.data() + dims.halo * cells, arrays[r].data(),
                arrays[r].size() * sizeof(double));
    field.shards.push_back(std::move(shard));
  }
}

}  // namespace

void reconfigure(AdvectionState& state, int new_ranks, const PlanHook& hook) {
  validate_ranks(state.dims, new_ranks);
  const TransferPlan plan = compute_plan(state.ranks, new_ranks, state.dims.n);
  const std::int64_t cells = state.dims.plane_cells();

  DistributedField* fields[] = {&state.psi, &state.vel1, &state.vel2,
                                &state.vel3};
  bool first = true;
  for (DistributedField* field : fields) {
    TransferPlan applied = plan;
    if (first && hook) hook(applied);
    first = false;
    auto moved = apply_plan(applied, pack_interiors(*field, state.dims), cells);
    unpack_interiors(*field, state.dims, new_ranks, moved);
  }
  state.ranks = new_ranks;
}

std::vector<double> assemble(const DistributedField& field,
                             const GridDims& dims) {
  std::vector<double> global(static_cast<std::size_t>(dims.interior_cells()));
  const std::int64_t cells = dims.plane_cells();
  for (const FieldShard& shard : field.shards) {
    std::memcpy(global.data() + shard.lo * cells,
                shard.data.data() + dims.halo * cells,
                static_cast<std::size_t>(shard.local_planes() * cells) *
                    sizeof(double));
  }
  return global;
}

std::vector<double> run_with_reconfig(const GridDims& dims, std::uint64_t seed,
                                      int steps, int initial_ranks,
                                      const std::vector<KernelReconfig>& schedule,
                                      const AdvectionParams& params,
                                      const PlanHook& hook) {
  if (steps < 1) throw ConfigError("kernel: steps must be >= 1");
  int ranks = initial_ranks;
  int prev_iter = 0;
  for (const KernelReconfig& rc : schedule) {
    if (rc.iteration < 1 || rc.iteration >= steps) {
      throw ConfigError("kernel: schedule iteration " +
                        std::to_string(rc.iteration) + " outside [1, " +
                        std::to_string(steps) + ")");
    }
    if (rc.iteration <= prev_iter) {
      throw ConfigError("kernel: schedule iterations must be strictly increasing");
    }
    if (rc.np != ranks) {
      throw ConfigError("kernel: schedule expects " + std::to_string(rc.np) +
                        " ranks at iteration " + std::to_string(rc.iteration) +
                        " but the run has " + std::to_string(ranks));
    }
    validate_ranks(dims, rc.nt);
    prev_iter = rc.iteration;
    ranks = rc.nt;
  }

  AdvectionState state = init_domain(dims, seed, initial_ranks, params);
  std::size_t next = 0;
  for (int step = 1; step <= steps; ++step) {
    halo_exchange(state.psi, dims);
    halo_exchange(state.vel1, dims);
    halo_exchange(state.vel2, dims);
    halo_exchange(state.vel3, dims);
    advection_step(state);
    if (next < schedule.size() && schedule[next].iteration == step) {
      reconfigure(state, schedule[next].nt, hook);
      ++next;
    }
  }
  return assemble(state.psi, dims);
}

std::int64_t first_mismatch(const std::vector<double>& a,
                            const std::vector<double>& b) {
  if (a.size() != b.size()) return 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::uint64_t ba, bb;
    std::memcpy(&ba, &a[i], sizeof(ba));
    std::memcpy(&bb, &b[i], sizeof(bb));
    if (ba != bb) return static_cast<std::int64_t>(i);
  }
  return -1;
}

std::uint64_t field_checksum(const std::vector<double>& cells) {
  return fnv1a64(cells.data(), cells.size() * sizeof(double));
}

}  // namespace malsim
