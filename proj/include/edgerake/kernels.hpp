#pragma once

// Data-parallel inner loops with a scalar reference implementation and
// SIMD variants (AVX2 on x86-64, NEON on AArch64) chosen at runtime.
//
// Elementwise kernels (edge_update_*) produce bitwise-identical results in
// every variant: the same IEEE operations in the same order, no FMA.
// Reductions (dot, sum, squared_distance, max_abs_diff) may differ from the
// scalar order in the last few ulps.

#include <cstdint>
#include <span>
#include <string_view>

namespace edgerake::kernels {

enum class Isa { Scalar, Avx2, Neon };

std::string_view name(Isa isa);

// Per-edge step of the edge-to-edge transition, directed walk:
//   out[e] = alpha * (w[e] * node[tail[e]]) + x[e]
using EdgeUpdateDirectedFn = void (*)(std::span<const std::uint32_t> tail,
                                      std::span<const double> w, std::span<const double> node,
                                      std::span<const double> x, double alpha,
                                      std::span<double> out);
// Undirected walk:
//   out[e] = alpha * (w[e] * (node[tail[e]] + node[head[e]])) + x[e]
using EdgeUpdateUndirectedFn = void (*)(std::span<const std::uint32_t> tail,
                                        std::span<const std::uint32_t> head,
                                        std::span<const double> w, std::span<const double> node,
                                        std::span<const double> x, double alpha,
                                        std::span<double> out);
using ReduceFn = double (*)(std::span<const double> a);
using ReducePairFn = double (*)(std::span<const double> a, std::span<const double> b);
// y += a * x
using AxpyFn = void (*)(double a, std::span<const double> x, std::span<double> y);

struct KernelTable {
  Isa isa;
  EdgeUpdateDirectedFn edge_update_directed;
  EdgeUpdateUndirectedFn edge_update_undirected;
  ReduceFn sum;
  ReducePairFn dot;
  ReducePairFn squared_distance;
  ReducePairFn max_abs_diff;
  AxpyFn axpy;
};

bool supported(Isa isa);

// Table for a specific ISA; throws InvalidInput if this CPU/build lacks it.
const KernelTable& table(Isa isa);

// Best supported ISA, unless overridden by select() or the EDGERAKE_SIMD
// environment variable ("scalar", "avx2", "neon") read on first use.
const KernelTable& active();
void select(Isa isa);

// Defined per variant translation unit.
const KernelTable& scalar_table();
const KernelTable* avx2_table();  // nullptr when not compiled in
const KernelTable* neon_table();

}  // namespace edgerake::kernels
