#include "edgerake/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>
#include <thread>

#include "edgerake/error.hpp"
#include "edgerake/kernels.hpp"
#include "edgerake/spectral.hpp"

namespace edgerake::baselines {

namespace {

void require_alpha(double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw InvalidInput("alpha must lie in (0, 1)");
}

void require_unweighted(const Graph& g, const char* what) {
  if (!g.unweighted())
    throw InvalidInput(std::string(what) + " is defined for unweighted graphs only");
}

constexpr int kGrowthWindow = 10;

// Jacobi iteration of C(a) = coef(a) * (alpha * sum_pred C + 1).
ArcScores iterate_arcs(const ArcSystem& s, const std::vector<double>& coef, double alpha,
                       std::uint64_t max_iters, double tol, bool fail_on_growth) {
  const auto& kt = kernels::active();
  const std::size_t k = s.arcs.size();
  std::vector<double> c(k, 0.0), next(k);
  ArcScores out;
  int growing = 0;
  double prev_delta = std::numeric_limits<double>::infinity();
  for (std::uint64_t it = 0; it < max_iters; ++it) {
    for (std::size_t a = 0; a < k; ++a) {
      double in = 0.0;
      for (auto p = s.pred_offset[a]; p < s.pred_offset[a + 1]; ++p) in += c[s.pred_index[p]];
      next[a] = coef[a] * (alpha * in + 1.0);
    }
    const double delta = kt.max_abs_diff(next, c);
    c.swap(next);
    out.iterations = it + 1;
    out.last_delta = delta;
    if (!std::isfinite(delta)) break;
    if (delta <= tol) break;
    growing = delta >= prev_delta ? growing + 1 : 0;
    prev_delta = delta;
    if (fail_on_growth && growing >= kGrowthWindow) break;
  }
  if (fail_on_growth && (growing >= kGrowthWindow || !std::isfinite(out.last_delta)))
    throw NonConvergence(
        "edge Katz did not converge (delta " + std::to_string(out.last_delta) + " after " +
        std::to_string(out.iterations) +
        " iterations); alpha times the spectral radius of the arc adjacency must be below 1");
  out.scores = std::move(c);
  return out;
}

CentralityVector fold(const ArcSystem& s, const ArcScores& arc, Measure m, double alpha) {
  CentralityVector cv;
  cv.scores = fold_arcs(s, arc.scores);
  cv.measure = m;
  cv.params.alpha = alpha;
  cv.params.iterations = arc.iterations;
  return cv;
}

}  // namespace

ArcSystem arc_system(const Graph& g) {
  ArcSystem s;
  s.expanded = !g.directed();
  const auto n = g.node_count();
  for (const auto& e : g.edges()) {
    s.arcs.push_back(e);
    if (s.expanded) s.arcs.push_back({e.head, e.tail, e.weight});
  }
  // Arcs entering each node, ascending arc id.
  std::vector<std::vector<std::uint32_t>> into(n);
  for (std::uint32_t a = 0; a < s.arcs.size(); ++a) into[s.arcs[a].head].push_back(a);
  s.pred_offset.assign(1, 0);
  for (const auto& arc : s.arcs) {
    const auto& preds = into[arc.tail];
    s.pred_index.insert(s.pred_index.end(), preds.begin(), preds.end());
    s.pred_offset.push_back(static_cast<std::uint32_t>(s.pred_index.size()));
    s.tail_strength.push_back(g.out_strength(arc.tail));
  }
  return s;
}

std::vector<double> fold_arcs(const ArcSystem& s, const std::vector<double>& arc_scores) {
  if (!s.expanded) return arc_scores;
  std::vector<double> out(arc_scores.size() / 2);
  for (std::size_t e = 0; e < out.size(); ++e) out[e] = arc_scores[2 * e] + arc_scores[2 * e + 1];
  return out;
}

ArcScores edge_pagerank_arcs(const ArcSystem& s, double alpha, std::uint64_t max_iters,
                             double tol) {
  require_alpha(alpha);
  std::vector<double> coef(s.arcs.size());
  for (std::size_t a = 0; a < s.arcs.size(); ++a) {
    if (!(s.tail_strength[a] > 0.0))
      throw InvalidInput("edge PageRank undefined for arc " + std::to_string(a) +
                         ": tail has zero out-strength");
    coef[a] = s.arcs[a].weight / s.tail_strength[a];
  }
  return iterate_arcs(s, coef, alpha, max_iters, tol, false);
}

ArcScores edge_katz_arcs(const ArcSystem& s, double alpha, std::uint64_t max_iters, double tol) {
  require_alpha(alpha);
  std::vector<double> coef(s.arcs.size());
  for (std::size_t a = 0; a < s.arcs.size(); ++a) coef[a] = s.arcs[a].weight;
  return iterate_arcs(s, coef, alpha, max_iters, tol, true);
}

CentralityVector edge_pagerank(const Graph& g, double alpha, std::uint64_t max_iters, double tol) {
  const auto s = arc_system(g);
  return fold(s, edge_pagerank_arcs(s, alpha, max_iters, tol), Measure::EdgePageRank, alpha);
}

CentralityVector edge_katz(const Graph& g, double alpha, std::uint64_t max_iters, double tol) {
  const auto s = arc_system(g);
  return fold(s, edge_katz_arcs(s, alpha, max_iters, tol), Measure::EdgeKatz, alpha);
}

CentralityVector gtom(const Graph& g) {
  require_unweighted(g, "GTOM");
  std::vector<std::vector<NodeId>> nb(g.node_count());
  for (NodeId v = 0; v < g.node_count(); ++v) nb[v] = g.out_neighbors(v);
  CentralityVector cv;
  cv.measure = Measure::Gtom;
  cv.scores.reserve(g.edge_count());
  std::vector<NodeId> common;
  for (EdgeId i = 0; i < g.edge_count(); ++i) {
    const auto& e = g.edge(i);
    const auto& nu = nb[e.tail];
    const auto& nv = nb[e.head];
    const auto lo = std::min(nu.size(), nv.size());
    if (lo == 0)
      throw InvalidInput("GTOM undefined for edge " + std::to_string(i) +
                         ": an endpoint has no out-neighbours");
    common.clear();
    std::set_intersection(nu.begin(), nu.end(), nv.begin(), nv.end(), std::back_inserter(common));
    cv.scores.push_back((static_cast<double>(common.size()) + 1.0) / static_cast<double>(lo));
  }
  return cv;
}

namespace {

constexpr std::size_t kBetweennessBlocks = 16;

// Brandes accumulation for sources [begin, end) into `acc`.
void betweenness_block(const Graph& g, NodeId begin, NodeId end, std::vector<double>& acc) {
  const auto n = g.node_count();
  std::vector<std::int64_t> dist(n);
  std::vector<double> sigma(n), delta(n);
  std::vector<NodeId> order, queue;
  order.reserve(n);
  queue.reserve(n);
  auto other = [&](EdgeId e, NodeId v) { return g.tails()[e] == v ? g.heads()[e] : g.tails()[e]; };
  for (NodeId s = begin; s < end; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    std::fill(sigma.begin(), sigma.end(), 0.0);
    std::fill(delta.begin(), delta.end(), 0.0);
    order.clear();
    queue.assign(1, s);
    dist[s] = 0;
    sigma[s] = 1.0;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      const NodeId v = queue[qi];
      order.push_back(v);
      for (EdgeId e : g.out_edges(v)) {
        const NodeId w = other(e, v);
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          queue.push_back(w);
        }
        if (dist[w] == dist[v] + 1) sigma[w] += sigma[v];
      }
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      const NodeId v = *it;
      for (EdgeId e : g.out_edges(v)) {
        const NodeId w = other(e, v);
        if (dist[w] != dist[v] + 1) continue;
        const double c = sigma[v] / sigma[w] * (1.0 + delta[w]);
        acc[e] += c;
        delta[v] += c;
      }
    }
  }
}

}  // namespace

CentralityVector edge_betweenness(const Graph& g) {
  require_unweighted(g, "edge betweenness");
  const auto n = g.node_count();
  const std::size_t blocks = std::min<std::size_t>(kBetweennessBlocks, std::max<std::size_t>(n, 1));
  std::vector<std::vector<double>> partial(blocks, std::vector<double>(g.edge_count(), 0.0));
  auto block_range = [&](std::size_t b) {
    return std::pair<NodeId, NodeId>(static_cast<NodeId>(n * b / blocks),
                                     static_cast<NodeId>(n * (b + 1) / blocks));
  };
  const std::size_t workers =
      std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, blocks);
  if (workers == 1 || n < 64) {
    for (std::size_t b = 0; b < blocks; ++b) {
      const auto [lo, hi] = block_range(b);
      betweenness_block(g, lo, hi, partial[b]);
    }
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w)
      pool.emplace_back([&, w] {
        for (std::size_t b = w; b < blocks; b += workers) {
          const auto [lo, hi] = block_range(b);
          betweenness_block(g, lo, hi, partial[b]);
        }
      });
  }
  // Fixed block order keeps the result independent of the worker count.
  CentralityVector cv;
  cv.measure = Measure::EdgeBetweenness;
  cv.scores.assign(g.edge_count(), 0.0);
  for (const auto& p : partial)
    for (std::size_t e = 0; e < p.size(); ++e) cv.scores[e] += p[e];
  return cv;
}

CentralityVector bdrc(const Graph& g) {
  if (g.directed()) throw InvalidInput("BDRC requires an undirected graph");
  const auto lp = spectral::pinv_laplacian(laplacian(g)).pinv;
  const Eigen::MatrixXd sq = lp * lp;
  CentralityVector cv;
  cv.measure = Measure::Bdrc;
  for (const auto& e : g.edges())
    cv.scores.push_back(e.weight * e.weight *
                        (sq(e.tail, e.tail) + sq(e.head, e.head) - 2.0 * sq(e.tail, e.head)));
  return cv;
}

CentralityVector effective_resistance_centrality(const Graph& g) {
  CentralityVector cv;
  cv.measure = Measure::EffectiveResistance;
  cv.scores = spectral::effective_resistance_all(g);
  return cv;
}

}  // namespace edgerake::baselines
