#include "edgerake/kernels.hpp"

#if defined(__aarch64__)

#include <arm_neon.h>

#include <algorithm>
#include <cmath>

namespace edgerake::kernels {

namespace {

// NEON has no gather; lanes are loaded pairwise and the arithmetic is vectorized.
void edge_update_directed(std::span<const std::uint32_t> tail, std::span<const double> w,
                          std::span<const double> node, std::span<const double> x, double alpha,
                          std::span<double> out) {
  const std::size_t m = out.size();
  const float64x2_t va = vdupq_n_f64(alpha);
  std::size_t e = 0;
  for (; e + 2 <= m; e += 2) {
    const double g[2] = {node[tail[e]], node[tail[e + 1]]};
    const float64x2_t prod = vmulq_f64(vld1q_f64(w.data() + e), vld1q_f64(g));
    vst1q_f64(out.data() + e, vaddq_f64(vmulq_f64(va, prod), vld1q_f64(x.data() + e)));
  }
  for (; e < m; ++e) out[e] = alpha * (w[e] * node[tail[e]]) + x[e];
}

void edge_update_undirected(std::span<const std::uint32_t> tail,
                            std::span<const std::uint32_t> head, std::span<const double> w,
                            std::span<const double> node, std::span<const double> x, double alpha,
                            std::span<double> out) {
  const std::size_t m = out.size();
  const float64x2_t va = vdupq_n_f64(alpha);
  std::size_t e = 0;
  for (; e + 2 <= m; e += 2) {
    const double gt[2] = {node[tail[e]], node[tail[e + 1]]};
    const double gh[2] = {node[head[e]], node[head[e + 1]]};
    const float64x2_t s = vaddq_f64(vld1q_f64(gt), vld1q_f64(gh));
    const float64x2_t prod = vmulq_f64(vld1q_f64(w.data() + e), s);
    vst1q_f64(out.data() + e, vaddq_f64(vmulq_f64(va, prod), vld1q_f64(x.data() + e)));
  }
  for (; e < m; ++e) out[e] = alpha * (w[e] * (node[tail[e]] + node[head[e]])) + x[e];
}

double sum(std::span<const double> a) {
  float64x2_t s = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 2 <= a.size(); i += 2) s = vaddq_f64(s, vld1q_f64(a.data() + i));
  double r = vaddvq_f64(s);
  for (; i < a.size(); ++i) r += a[i];
  return r;
}

double dot(std::span<const double> a, std::span<const double> b) {
  float64x2_t s = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 2 <= a.size(); i += 2)
    s = vaddq_f64(s, vmulq_f64(vld1q_f64(a.data() + i), vld1q_f64(b.data() + i)));
  double r = vaddvq_f64(s);
  for (; i < a.size(); ++i) r += a[i] * b[i];
  return r;
}

double squared_distance(std::span<const double> a, std::span<const double> b) {
  float64x2_t s = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 2 <= a.size(); i += 2) {
    const float64x2_t d = vsubq_f64(vld1q_f64(a.data() + i), vld1q_f64(b.data() + i));
    s = vaddq_f64(s, vmulq_f64(d, d));
  }
  double r = vaddvq_f64(s);
  for (; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    r += d * d;
  }
  return r;
}

double max_abs_diff(std::span<const double> a, std::span<const double> b) {
  float64x2_t mx = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 2 <= a.size(); i += 2)
    mx = vmaxq_f64(mx, vabdq_f64(vld1q_f64(a.data() + i), vld1q_f64(b.data() + i)));
  double r = vmaxvq_f64(mx);
  for (; i < a.size(); ++i) r = std::max(r, std::abs(a[i] - b[i]));
  return r;
}

void axpy(double a, std::span<const double> x, std::span<double> y) {
  const float64x2_t va = vdupq_n_f64(a);
  std::size_t i = 0;
  for (; i + 2 <= y.size(); i += 2)
    vst1q_f64(y.data() + i, vaddq_f64(vld1q_f64(y.data() + i), vmulq_f64(va, vld1q_f64(x.data() + i))));
  for (; i < y.size(); ++i) y[i] += a * x[i];
}

constexpr KernelTable kNeon{Isa::Neon, edge_update_directed, edge_update_undirected, sum,
                            dot,       squared_distance,     max_abs_diff,           axpy};

}  // namespace

const KernelTable* neon_table() { return &kNeon; }

}  // namespace edgerake::kernels

#else

namespace edgerake::kernels {
const KernelTable* neon_table() { return nullptr; }
}  // namespace edgerake::kernels

#endif
