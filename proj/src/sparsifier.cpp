#include "edgerake/sparsifier.hpp"

#include <numeric>

#include "edgerake/error.hpp"
#include "edgerake/random.hpp"
#include "edgerake/spectral.hpp"

namespace edgerake::sparsifier {

std::vector<double> sampling_probabilities(const Graph& g) {
  if (g.directed()) throw InvalidInput("sparsifier requires an undirected graph");
  if (g.node_count() < 2 || connected_components(g).count != 1)
    throw InvalidInput("sparsifier requires a connected graph with at least two nodes");
  auto p = spectral::effective_resistance_all(g);
  const double denom = static_cast<double>(g.node_count() - 1);
  for (EdgeId e = 0; e < g.edge_count(); ++e) p[e] = g.edge(e).weight * p[e] / denom;
  return p;
}

SparsifierSample reweight(const Graph& g, std::vector<double> probabilities,
                          std::vector<std::uint64_t> counts, WeightRule rule) {
  const auto m = g.edge_count();
  if (probabilities.size() != m || counts.size() != m)
    throw InvalidInput("reweight: probabilities and counts need one entry per edge");
  SparsifierSample s;
  s.draws = std::accumulate(counts.begin(), counts.end(), std::uint64_t{0});
  if (s.draws == 0) throw InvalidInput("sparsify needs at least one draw");
  const double ns = static_cast<double>(s.draws);

  s.sparse_weights.assign(m, 0.0);
  for (EdgeId e = 0; e < m; ++e) {
    if (counts[e] == 0) continue;
    const double c = static_cast<double>(counts[e]);
    const double w = g.edge(e).weight;
    if (rule == WeightRule::Unbiased)
      s.sparse_weights[e] = c / (ns * probabilities[e]) * w;
    else
      // p_e = w r / (n-1), so r / (n-1) = p_e / w.
      s.sparse_weights[e] = c / ns * (probabilities[e] / w);
  }

  const auto n = static_cast<Eigen::Index>(g.node_count());
  s.sparsified_laplacian = Eigen::MatrixXd::Zero(n, n);
  for (EdgeId e = 0; e < m; ++e) {
    const double w = s.sparse_weights[e];
    if (w == 0.0) continue;
    const auto& ed = g.edge(e);
    // B^T S B, one signed row at a time: rows sum to zero by construction.
    s.sparsified_laplacian(ed.tail, ed.tail) += w;
    s.sparsified_laplacian(ed.head, ed.head) += w;
    s.sparsified_laplacian(ed.tail, ed.head) -= w;
    s.sparsified_laplacian(ed.head, ed.tail) -= w;
  }
  s.probabilities = std::move(probabilities);
  s.counts = std::move(counts);
  return s;
}

SparsifierSample sparsify(const Graph& g, std::uint64_t draws, std::uint64_t seed,
                          WeightRule rule) {
  if (draws == 0) throw InvalidInput("sparsify needs at least one draw (n_s >= 1)");
  auto p = sampling_probabilities(g);
  const AliasTable table(p);
  Rng rng(seed);
  std::vector<std::uint64_t> counts(g.edge_count(), 0);
  for (std::uint64_t i = 0; i < draws; ++i) ++counts[table.sample(rng)];
  auto s = reweight(g, std::move(p), std::move(counts), rule);
  s.seed = seed;
  return s;
}

Graph sparsified_graph(const Graph& g, const SparsifierSample& s) {
  std::vector<Edge> kept;
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    if (s.sparse_weights[e] > 0.0) kept.push_back({g.edge(e).tail, g.edge(e).head, s.sparse_weights[e]});
  return build_graph(std::move(kept), g.directed(), g.node_count());
}

}  // namespace edgerake::sparsifier
