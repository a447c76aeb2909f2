#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "edgerake/graph.hpp"

namespace edgerake::spectral {

struct PinvResult {
  Eigen::MatrixXd pinv;
  Eigen::Index rank = 0;
  double eigen_tolerance = 0.0;
};

// Eigendecomposition-based Moore-Penrose inverse of a symmetric PSD matrix.
// Eigenvalues at or below 1e-10 * lambda_max count as zero.
PinvResult pinv_laplacian(const Eigen::MatrixXd& l);

// r(e) = L+[u,u] + L+[v,v] - 2 L+[u,v] over the weighted Laplacian.
std::vector<double> effective_resistance_all(const Graph& g);

// Q = B L+ B^T over the signed incidence. Undirected, unweighted only.
Eigen::MatrixXd q_matrix(const Graph& g);

struct SpanningTreeRatio {
  std::int64_t trees = 0;          // tau(G)
  std::int64_t trees_with_edge = 0;  // tau(G / e)
  double ratio = 0.0;
};

inline constexpr std::size_t kMatrixTreeLimit = 12;

// Exact matrix-tree counts (fraction-free integer elimination).
// Undirected, unweighted, connected, n <= kMatrixTreeLimit.
SpanningTreeRatio spanning_tree_ratio(const Graph& g, EdgeId e);

// Determinant of an integer matrix via Bareiss elimination.
std::int64_t bareiss_determinant(std::vector<std::vector<std::int64_t>> a);

// Smallest non-zero eigenvalue of D^{-1/2} L D^{-1/2}. Undirected, connected.
double lambda2(const Graph& g);

struct ResistanceBounds {
  double lower = 0.0;
  double upper_lovasz = 0.0;
  double upper_triangle = 0.0;
};

// Degree and common-neighbour bounds on r(e). Undirected, unweighted, simple, connected.
ResistanceBounds resistance_bounds(const Graph& g, EdgeId e);
// Same for every edge, sharing one eigendecomposition.
std::vector<ResistanceBounds> resistance_bounds_all(const Graph& g);

}  // namespace edgerake::spectral
