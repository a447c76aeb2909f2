#pragma once

// Effective-resistance sampling of edges and the reweighted Laplacian
// L' = B^T S B built from the signed incidence B.

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "edgerake/graph.hpp"

namespace edgerake::sparsifier {

// p_e = w(e) r(e) / (n - 1). Undirected, connected.
std::vector<double> sampling_probabilities(const Graph& g);

enum class WeightRule {
  Unbiased,  // S[e] = counts[e] / (n_s p_e) * w(e); E[L'] = L
  Literal,   // S[e] = counts[e] / n_s * r(e) / (n - 1), kept for comparison
};

struct SparsifierSample {
  std::vector<double> probabilities;
  std::vector<std::uint64_t> counts;
  std::uint64_t draws = 0;
  std::uint64_t seed = 0;
  std::vector<double> sparse_weights;  // diagonal of S
  Eigen::MatrixXd sparsified_laplacian;
};

SparsifierSample sparsify(const Graph& g, std::uint64_t draws, std::uint64_t seed,
                          WeightRule rule = WeightRule::Unbiased);

// Weights and Laplacian for a given draw outcome; sparsify() delegates here.
SparsifierSample reweight(const Graph& g, std::vector<double> probabilities,
                          std::vector<std::uint64_t> counts, WeightRule rule);

// Edges with a positive sampled weight, keeping original orientation and order.
Graph sparsified_graph(const Graph& g, const SparsifierSample& s);

}  // namespace edgerake::sparsifier
