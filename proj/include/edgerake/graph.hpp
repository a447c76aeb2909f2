#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/SparseCore>

namespace edgerake {

using NodeId = std::uint32_t;
using EdgeId = std::uint32_t;

struct Edge {
  NodeId tail;
  NodeId head;
  double weight = 1.0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

// Immutable weighted graph with dense node ids and CSR adjacency.
//
// Edges keep insertion order. For undirected graphs each edge is stored once
// and both endpoints list it as incident ("out") and as a jump target ("in").
// For directed graphs out-lists hold edges by tail, in-lists by head.
class Graph {
 public:
  Graph() = default;

  std::size_t node_count() const { return out_strength_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  bool directed() const { return directed_; }

  std::span<const Edge> edges() const { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_.at(e); }

  // Incident edges leaving v (undirected: every edge touching v), ascending id.
  std::span<const EdgeId> out_edges(NodeId v) const {
    return {out_index_.data() + out_offset_[v], out_offset_[v + 1] - out_offset_[v]};
  }
  // Edges whose walk can land on v (directed: by head; undirected: every edge touching v).
  std::span<const EdgeId> in_edges(NodeId v) const {
    return {in_index_.data() + in_offset_[v], in_offset_[v + 1] - in_offset_[v]};
  }

  // Diagonal of D: sum of out-edge weights (undirected: incident weights).
  std::span<const double> out_strength() const { return out_strength_; }
  double out_strength(NodeId v) const { return out_strength_[v]; }

  // Flat CSR arrays, consumed directly by the SIMD kernels.
  std::span<const std::uint32_t> out_offsets() const { return out_offset_; }
  std::span<const EdgeId> out_index() const { return out_index_; }
  std::span<const std::uint32_t> in_offsets() const { return in_offset_; }
  std::span<const EdgeId> in_index() const { return in_index_; }
  std::span<const NodeId> tails() const { return tails_; }
  std::span<const NodeId> heads() const { return heads_; }
  std::span<const double> weights() const { return weights_; }

  bool unweighted() const;
  // True when no two edges join the same endpoint pair (orientation-aware when directed).
  bool simple() const;

  // Distinct out-neighbours of v (undirected: distinct neighbours), ascending.
  std::vector<NodeId> out_neighbors(NodeId v) const;

  friend Graph build_graph(std::vector<Edge> edges, bool directed,
                           std::optional<std::size_t> node_count);

 private:
  bool directed_ = false;
  std::vector<Edge> edges_;
  std::vector<NodeId> tails_, heads_;
  std::vector<double> weights_;
  std::vector<std::uint32_t> out_offset_{0}, in_offset_{0};
  std::vector<EdgeId> out_index_, in_index_;
  std::vector<double> out_strength_;
};

// Builds a graph over nodes 0..n-1, where n defaults to 1 + the largest id.
// Throws InvalidInput on non-positive/non-finite weights, self-loops, or ids >= n.
Graph build_graph(std::vector<Edge> edges, bool directed,
                  std::optional<std::size_t> node_count = std::nullopt);

using SparseMatrix = Eigen::SparseMatrix<double, Eigen::ColMajor>;

struct IncidenceBundle {
  SparseMatrix signed_inc;  // m x n, +1 at tail, -1 at head
  SparseMatrix tail_inc;    // n x m, w(e) where the walk leaves through e
  SparseMatrix head_inc;    // n x m, w(e) where the walk jumps to after e
  SparseMatrix jump_norm;   // n x m, head_inc with columns normalized to sum 1
};

IncidenceBundle incidence_bundle(const Graph& g);

// D - A with weights. Undirected only.
Eigen::MatrixXd laplacian(const Graph& g);

// D^{-1/2} A D^{-1/2}; rows/cols of isolated nodes are zero. Undirected only.
Eigen::MatrixXd normalized_adjacency(const Graph& g);

struct Components {
  std::vector<std::uint32_t> label;  // per node, in 0..count-1
  std::uint32_t count = 0;
};

// Weakly connected components, numbered by their lowest node id.
Components connected_components(const Graph& g);

}  // namespace edgerake
