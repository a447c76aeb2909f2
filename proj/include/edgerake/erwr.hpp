#pragma once

// Edge-wise random walk with restart (ERWR) and the EdgeRAKE centrality.
//
// A walk sitting on edge e stops with probability 1 - alpha; otherwise it
// moves to a jump node of e (the head for directed edges, either endpoint
// with probability 1/2 for undirected ones) and leaves that node through an
// out-edge chosen proportionally to weight. The one-step edge-to-edge
// matrix is P = J^T D^{-1} T with J the column-normalized jump incidence
// and T the weighted leave incidence. EdgeRAKE is
//
//   C = (1 - alpha) * x * sum_l alpha^l P^l,   x[e] = w(e) / sqrt(D[u] + D[v]).
//
// Nodes with zero out-strength contribute D^{-1} = 0, so walks reaching
// them are absorbed and P is sub-stochastic on those rows.

#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "edgerake/centrality.hpp"
#include "edgerake/graph.hpp"

namespace edgerake::erwr {

// Applies z -> alpha * z P + x without forming P: a node pass (z J^T D^{-1},
// scattered in edge order) followed by an edge pass through the SIMD kernels.
// O(n + m) per call.
class TransitionOperator {
 public:
  explicit TransitionOperator(const Graph& g);

  std::size_t edge_count() const { return g_->edge_count(); }
  const Graph& graph() const { return *g_; }

  // out = alpha * z P + x; vectors of length m, scratch of length n.
  // out must not alias z. Safe to call concurrently with distinct buffers.
  void apply(std::span<const double> z, std::span<const double> x, double alpha,
             std::span<double> out, std::span<double> scratch) const;
  std::vector<double> apply(std::span<const double> z, std::span<const double> x,
                            double alpha) const;

  // Split form for repeated application. node_pass maps z to its normalized
  // node vector; step computes out = alpha * z P + x from that node vector and
  // also produces the node vector of out. Bitwise equal to apply().
  void node_pass(std::span<const double> z, std::span<double> node) const;
  void step(std::span<const double> node, std::span<const double> x, double alpha,
            std::span<double> out, std::span<double> next_node) const;

 private:
  void scatter(std::size_t begin, std::size_t end, std::span<const double> z,
               std::span<double> node) const;
  void normalize(std::span<double> node) const;
  void edge_pass(std::size_t begin, std::size_t end, std::span<const double> node,
                 std::span<const double> x, double alpha, std::span<double> out) const;

  const Graph* g_;
  std::vector<double> inv_strength_;  // D^{-1}, 0 for dangling nodes
  double jump_share_;                 // 1 (directed) or 1/2 (undirected)
};

// Algorithm-1 style single step with explicit length checks. Throws InvalidInput.
std::vector<double> transition_apply(const TransitionOperator& op, std::span<const double> z,
                                     std::span<const double> x, double alpha);

// x[e] = w(e) / sqrt(D[u] + D[v]).
std::vector<double> source_weights(const Graph& g);

// Smallest t >= 0 with alpha^(t+1) <= epsilon.
std::uint64_t iterations_for_epsilon(double alpha, double epsilon);

inline constexpr double kDefaultAlpha = 0.5;
inline constexpr double kDefaultEpsilon = 1e-6;
inline constexpr std::uint64_t kIterationCap = 150;

// t power iterations: C' = (1 - alpha) * x * sum_{l<=t} alpha^l P^l.
CentralityVector edgerake_approx(const Graph& g, double alpha, std::uint64_t t);

struct ApproxTrace {
  CentralityVector result;
  std::vector<double> step_norms;  // ||z(i) - z(i-1)||_2 for i = 1..t
  std::vector<double> z_norms;     // ||z(i)||_2
};
ApproxTrace edgerake_approx_traced(const Graph& g, double alpha, std::uint64_t t);

inline constexpr std::size_t kDenseEdgeLimit = 2000;

// Dense m x m P built straight from the walk definition (independent of the
// sparse operator). Oracle scale only.
Eigen::MatrixXd dense_transition(const Graph& g);

// C = (1 - alpha) x (I - alpha P)^{-1} by a dense solve. m <= kDenseEdgeLimit.
CentralityVector edgerake_exact(const Graph& g, double alpha);

// r(source, .) = (1 - alpha) e_source (I - alpha P)^{-1}. Dense at oracle scale,
// otherwise the series truncated at iterations_for_epsilon(alpha, 1e-12).
std::vector<double> erwr_scores(const Graph& g, double alpha, EdgeId source);

}  // namespace edgerake::erwr
