#include <algorithm>
#include <cmath>

#include "edgerake/kernels.hpp"

namespace edgerake::kernels {

namespace {

void edge_update_directed(std::span<const std::uint32_t> tail, std::span<const double> w,
                          std::span<const double> node, std::span<const double> x, double alpha,
                          std::span<double> out) {
  const std::size_t m = out.size();
  for (std::size_t e = 0; e < m; ++e) out[e] = alpha * (w[e] * node[tail[e]]) + x[e];
}

void edge_update_undirected(std::span<const std::uint32_t> tail,
                            std::span<const std::uint32_t> head, std::span<const double> w,
                            std::span<const double> node, std::span<const double> x, double alpha,
                            std::span<double> out) {
  const std::size_t m = out.size();
  for (std::size_t e = 0; e < m; ++e)
    out[e] = alpha * (w[e] * (node[tail[e]] + node[head[e]])) + x[e];
}

double sum(std::span<const double> a) {
  double s = 0.0;
  for (double v : a) s += v;
  return s;
}

double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double squared_distance(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    s += d * d;
  }
  return s;
}

double max_abs_diff(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s = std::max(s, std::abs(a[i] - b[i]));
  return s;
}

void axpy(double a, std::span<const double> x, std::span<double> y) {
  for (std::size_t i = 0; i < y.size(); ++i) y[i] += a * x[i];
}

constexpr KernelTable kScalar{Isa::Scalar, edge_update_directed, edge_update_undirected, sum,
                              dot,         squared_distance,     max_abs_diff,           axpy};

}  // namespace

const KernelTable& scalar_table() { return kScalar; }

}  // namespace edgerake::kernels
