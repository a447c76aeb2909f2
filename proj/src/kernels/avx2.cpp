#include "edgerake/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include <algorithm>
#include <cmath>

#define EDGERAKE_AVX2 __attribute__((target("avx2")))

namespace edgerake::kernels {

namespace {

EDGERAKE_AVX2 inline double hsum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d s = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

EDGERAKE_AVX2 void edge_update_directed(std::span<const std::uint32_t> tail,
                                        std::span<const double> w, std::span<const double> node,
                                        std::span<const double> x, double alpha,
                                        std::span<double> out) {
  const std::size_t m = out.size();
  const __m256d va = _mm256_set1_pd(alpha);
  std::size_t e = 0;
  for (; e + 4 <= m; e += 4) {
    const __m128i it = _mm_loadu_si128(reinterpret_cast<const __m128i*>(tail.data() + e));
    const __m256d nt = _mm256_i32gather_pd(node.data(), it, 8);
    const __m256d prod = _mm256_mul_pd(_mm256_loadu_pd(w.data() + e), nt);
    _mm256_storeu_pd(out.data() + e,
                     _mm256_add_pd(_mm256_mul_pd(va, prod), _mm256_loadu_pd(x.data() + e)));
  }
  for (; e < m; ++e) out[e] = alpha * (w[e] * node[tail[e]]) + x[e];
}

EDGERAKE_AVX2 void edge_update_undirected(std::span<const std::uint32_t> tail,
                                          std::span<const std::uint32_t> head,
                                          std::span<const double> w, std::span<const double> node,
                                          std::span<const double> x, double alpha,
                                          std::span<double> out) {
  const std::size_t m = out.size();
  const __m256d va = _mm256_set1_pd(alpha);
  std::size_t e = 0;
  for (; e + 4 <= m; e += 4) {
    const __m128i it = _mm_loadu_si128(reinterpret_cast<const __m128i*>(tail.data() + e));
    const __m128i ih = _mm_loadu_si128(reinterpret_cast<const __m128i*>(head.data() + e));
    const __m256d s = _mm256_add_pd(_mm256_i32gather_pd(node.data(), it, 8),
                                    _mm256_i32gather_pd(node.data(), ih, 8));
    const __m256d prod = _mm256_mul_pd(_mm256_loadu_pd(w.data() + e), s);
    _mm256_storeu_pd(out.data() + e,
                     _mm256_add_pd(_mm256_mul_pd(va, prod), _mm256_loadu_pd(x.data() + e)));
  }
  for (; e < m; ++e) out[e] = alpha * (w[e] * (node[tail[e]] + node[head[e]])) + x[e];
}

EDGERAKE_AVX2 double sum(std::span<const double> a) {
  const std::size_t n = a.size();
  __m256d s0 = _mm256_setzero_pd(), s1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    s0 = _mm256_add_pd(s0, _mm256_loadu_pd(a.data() + i));
    s1 = _mm256_add_pd(s1, _mm256_loadu_pd(a.data() + i + 4));
  }
  double r = hsum(_mm256_add_pd(s0, s1));
  for (; i < n; ++i) r += a[i];
  return r;
}

EDGERAKE_AVX2 double dot(std::span<const double> a, std::span<const double> b) {
  const std::size_t n = a.size();
  __m256d s0 = _mm256_setzero_pd(), s1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    s0 = _mm256_add_pd(s0, _mm256_mul_pd(_mm256_loadu_pd(a.data() + i),
                                         _mm256_loadu_pd(b.data() + i)));
    s1 = _mm256_add_pd(s1, _mm256_mul_pd(_mm256_loadu_pd(a.data() + i + 4),
                                         _mm256_loadu_pd(b.data() + i + 4)));
  }
  double r = hsum(_mm256_add_pd(s0, s1));
  for (; i < n; ++i) r += a[i] * b[i];
  return r;
}

EDGERAKE_AVX2 double squared_distance(std::span<const double> a, std::span<const double> b) {
  const std::size_t n = a.size();
  __m256d s = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d d = _mm256_sub_pd(_mm256_loadu_pd(a.data() + i), _mm256_loadu_pd(b.data() + i));
    s = _mm256_add_pd(s, _mm256_mul_pd(d, d));
  }
  double r = hsum(s);
  for (; i < n; ++i) {
    const double d = a[i] - b[i];
    r += d * d;
  }
  return r;
}

EDGERAKE_AVX2 double max_abs_diff(std::span<const double> a, std::span<const double> b) {
  const std::size_t n = a.size();
  const __m256d sign = _mm256_set1_pd(-0.0);
  __m256d mx = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d d = _mm256_sub_pd(_mm256_loadu_pd(a.data() + i), _mm256_loadu_pd(b.data() + i));
    mx = _mm256_max_pd(mx, _mm256_andnot_pd(sign, d));
  }
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, mx);
  double r = std::max(std::max(lanes[0], lanes[1]), std::max(lanes[2], lanes[3]));
  for (; i < n; ++i) r = std::max(r, std::abs(a[i] - b[i]));
  return r;
}

EDGERAKE_AVX2 void axpy(double a, std::span<const double> x, std::span<double> y) {
  const std::size_t n = y.size();
  const __m256d va = _mm256_set1_pd(a);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d r =
        _mm256_add_pd(_mm256_loadu_pd(y.data() + i), _mm256_mul_pd(va, _mm256_loadu_pd(x.data() + i)));
    _mm256_storeu_pd(y.data() + i, r);
  }
  for (; i < n; ++i) y[i] += a * x[i];
}

constexpr KernelTable kAvx2{Isa::Avx2, edge_update_directed, edge_update_undirected, sum,
                            dot,       squared_distance,     max_abs_diff,           axpy};

}  // namespace

const KernelTable* avx2_table() { return &kAvx2; }

}  // namespace edgerake::kernels

#else

namespace edgerake::kernels {
const KernelTable* avx2_table() { return nullptr; }
}  // namespace edgerake::kernels

#endif
