#pragma once

// Comparison edge centralities. None of them are normalized.
//
// Edge PageRank and Edge Katz are defined on arcs; undirected graphs are
// expanded into two opposite arcs per edge and the edge score is the sum of
// its two arc scores. Edge betweenness counts ordered (s, t) pairs on both
// directed and undirected graphs.

#include <cstdint>

#include "edgerake/centrality.hpp"
#include "edgerake/graph.hpp"

namespace edgerake::baselines {

inline constexpr double kDefaultTolerance = 1e-10;
inline constexpr std::uint64_t kDefaultMaxIters = 150;

// Arc view used by EP/EK: arcs (tail, head, weight) plus, per arc, the arcs
// entering its tail. Undirected edge e maps to arcs 2e and 2e+1.
struct ArcSystem {
  std::vector<Edge> arcs;
  std::vector<std::uint32_t> pred_offset;
  std::vector<std::uint32_t> pred_index;
  std::vector<double> tail_strength;  // D[tail(a)]
  bool expanded = false;
};
ArcSystem arc_system(const Graph& g);

// C(a) = (w(a) / D[tail a]) * (alpha * sum_{x -> tail a} C(x, tail a) + 1),
// Jacobi-iterated until ||delta||_inf <= tol or max_iters.
CentralityVector edge_pagerank(const Graph& g, double alpha,
                               std::uint64_t max_iters = kDefaultMaxIters,
                               double tol = kDefaultTolerance);

// C(a) = w(a) * (alpha * sum_{x -> tail a} C(x, tail a) + 1).
// Throws NonConvergence when alpha times the spectral radius is >= 1.
CentralityVector edge_katz(const Graph& g, double alpha,
                           std::uint64_t max_iters = kDefaultMaxIters,
                           double tol = kDefaultTolerance);

struct ArcScores {
  std::vector<double> scores;
  std::uint64_t iterations = 0;
  double last_delta = 0.0;  // ||C(k) - C(k-1)||_inf at exit
};

// Arc-level fixed points before undirected folding.
ArcScores edge_pagerank_arcs(const ArcSystem& s, double alpha, std::uint64_t max_iters, double tol);
ArcScores edge_katz_arcs(const ArcSystem& s, double alpha, std::uint64_t max_iters, double tol);

// Sums arc scores back onto edges (identity for directed graphs).
std::vector<double> fold_arcs(const ArcSystem& s, const std::vector<double>& arc_scores);

// (|N+(u) & N+(v)| + 1) / min(|N+(u)|, |N+(v)|). Unweighted only.
CentralityVector gtom(const Graph& g);

// Brandes-style shortest-path edge betweenness over ordered pairs. Unweighted only.
CentralityVector edge_betweenness(const Graph& g);

// w^2 * ((L+)^2[u,u] + (L+)^2[v,v] - 2 (L+)^2[u,v]). Undirected only.
CentralityVector bdrc(const Graph& g);

CentralityVector effective_resistance_centrality(const Graph& g);

}  // namespace edgerake::baselines
