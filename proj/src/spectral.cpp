#include "edgerake/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "edgerake/error.hpp"

namespace edgerake::spectral {

namespace {

constexpr double kZeroEigenRatio = 1e-10;
constexpr double kSymmetryTolerance = 1e-10;

void require_undirected(const Graph& g, const char* what) {
  if (g.directed()) throw InvalidInput(std::string(what) + " requires an undirected graph");
}

void require_unweighted(const Graph& g, const char* what) {
  if (!g.unweighted()) throw InvalidInput(std::string(what) + " requires an unweighted graph");
}

void require_connected(const Graph& g, const char* what) {
  if (g.node_count() == 0 || connected_components(g).count != 1)
    throw InvalidInput(std::string(what) + " requires a connected graph");
}

}  // namespace

PinvResult pinv_laplacian(const Eigen::MatrixXd& l) {
  if (l.rows() != l.cols()) throw InvalidInput("pinv_laplacian: matrix is not square");
  const double asym = (l - l.transpose()).cwiseAbs().maxCoeff();
  if (l.size() > 0 && asym > kSymmetryTolerance)
    throw InvalidInput("pinv_laplacian: matrix is not symmetric (max |L - L^T| = " +
                       std::to_string(asym) + ")");

  PinvResult out;
  out.pinv = Eigen::MatrixXd::Zero(l.rows(), l.cols());
  if (l.size() == 0) return out;

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(l);
  const auto& lam = es.eigenvalues();
  const auto& u = es.eigenvectors();
  const double lam_max = lam.cwiseAbs().maxCoeff();
  out.eigen_tolerance = kZeroEigenRatio * lam_max;
  for (Eigen::Index k = 0; k < lam.size(); ++k) {
    if (lam[k] <= out.eigen_tolerance) continue;
    out.pinv.noalias() += (1.0 / lam[k]) * u.col(k) * u.col(k).transpose();
    ++out.rank;
  }
  // Re-symmetrize to remove rounding asymmetry from the rank-1 updates.
  out.pinv = 0.5 * (out.pinv + out.pinv.transpose()).eval();
  return out;
}

std::vector<double> effective_resistance_all(const Graph& g) {
  require_undirected(g, "effective resistance");
  const auto lp = pinv_laplacian(laplacian(g)).pinv;
  std::vector<double> r;
  r.reserve(g.edge_count());
  for (const auto& e : g.edges())
    r.push_back(lp(e.tail, e.tail) + lp(e.head, e.head) - lp(e.tail, e.head) - lp(e.head, e.tail));
  return r;
}

Eigen::MatrixXd q_matrix(const Graph& g) {
  require_undirected(g, "q_matrix");
  require_unweighted(g, "q_matrix");
  const Eigen::MatrixXd b = Eigen::MatrixXd(incidence_bundle(g).signed_inc);
  const auto lp = pinv_laplacian(laplacian(g)).pinv;
  Eigen::MatrixXd q = b * lp * b.transpose();
  return 0.5 * (q + q.transpose());
}

std::int64_t bareiss_determinant(std::vector<std::vector<std::int64_t>> a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  __int128 sign = 1;
  std::int64_t prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        const __int128 num = static_cast<__int128>(a[i][j]) * a[k][k] -
                             static_cast<__int128>(a[i][k]) * a[k][j];
        // Sylvester's identity: the division is exact.
        a[i][j] = static_cast<std::int64_t>(num / prev);
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return static_cast<std::int64_t>(sign * a[n - 1][n - 1]);
}

namespace {

// Number of spanning trees of a multigraph given as an integer Laplacian.
std::int64_t count_trees(const std::vector<std::vector<std::int64_t>>& lap) {
  const std::size_t n = lap.size();
  if (n <= 1) return 1;
  std::vector<std::vector<std::int64_t>> minor(n - 1, std::vector<std::int64_t>(n - 1));
  for (std::size_t i = 1; i < n; ++i)
    for (std::size_t j = 1; j < n; ++j) minor[i - 1][j - 1] = lap[i][j];
  return bareiss_determinant(std::move(minor));
}

}  // namespace

SpanningTreeRatio spanning_tree_ratio(const Graph& g, EdgeId e) {
  require_undirected(g, "spanning_tree_ratio");
  require_unweighted(g, "spanning_tree_ratio");
  if (e >= g.edge_count()) throw InvalidInput("spanning_tree_ratio: edge index out of range");
  const std::size_t n = g.node_count();
  if (n > kMatrixTreeLimit)
    throw OracleLimit("spanning_tree_ratio: exact matrix-tree oracle limited to " +
                      std::to_string(kMatrixTreeLimit) + " nodes");

  std::vector<std::vector<std::int64_t>> lap(n, std::vector<std::int64_t>(n, 0));
  for (const auto& ed : g.edges()) {
    ++lap[ed.tail][ed.tail];
    ++lap[ed.head][ed.head];
    --lap[ed.tail][ed.head];
    --lap[ed.head][ed.tail];
  }
  SpanningTreeRatio out;
  out.trees = count_trees(lap);
  if (out.trees == 0) throw InvalidInput("spanning_tree_ratio requires a connected graph");

  // Contract e: merge head into tail; u-v edges become loops and drop out.
  const auto& target = g.edge(e);
  const NodeId keep = target.tail, gone = target.head;
  auto relabel = [&](NodeId v) -> std::size_t {
    if (v == gone) v = keep;
    return v > gone ? v - 1 : v;
  };
  std::vector<std::vector<std::int64_t>> con(n - 1, std::vector<std::int64_t>(n - 1, 0));
  for (const auto& ed : g.edges()) {
    const auto a = relabel(ed.tail), b = relabel(ed.head);
    if (a == b) continue;
    ++con[a][a];
    ++con[b][b];
    --con[a][b];
    --con[b][a];
  }
  out.trees_with_edge = count_trees(con);
  out.ratio = static_cast<double>(out.trees_with_edge) / static_cast<double>(out.trees);
  return out;
}

double lambda2(const Graph& g) {
  require_undirected(g, "lambda2");
  require_connected(g, "lambda2");
  if (g.edge_count() == 0) throw InvalidInput("lambda2 requires at least one edge");
  const auto n = static_cast<Eigen::Index>(g.node_count());
  const Eigen::MatrixXd nl = Eigen::MatrixXd::Identity(n, n) - normalized_adjacency(g);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(nl, Eigen::EigenvaluesOnly);
  const auto& lam = es.eigenvalues();
  const double cutoff = kZeroEigenRatio * lam.cwiseAbs().maxCoeff();
  for (Eigen::Index k = 0; k < lam.size(); ++k)
    if (lam[k] > cutoff) return lam[k];
  throw InvalidInput("lambda2: no non-zero eigenvalue");
}

std::vector<ResistanceBounds> resistance_bounds_all(const Graph& g) {
  require_undirected(g, "resistance_bounds");
  require_unweighted(g, "resistance_bounds");
  if (!g.simple()) throw InvalidInput("resistance_bounds requires a simple graph");
  const double l2 = lambda2(g);

  std::vector<std::vector<NodeId>> nb(g.node_count());
  for (NodeId v = 0; v < g.node_count(); ++v) nb[v] = g.out_neighbors(v);

  std::vector<ResistanceBounds> out;
  out.reserve(g.edge_count());
  for (const auto& e : g.edges()) {
    const auto& nu = nb[e.tail];
    const auto& nv = nb[e.head];
    const double inv = 1.0 / static_cast<double>(nu.size()) + 1.0 / static_cast<double>(nv.size());
    std::vector<NodeId> common;
    std::set_intersection(nu.begin(), nu.end(), nv.begin(), nv.end(), std::back_inserter(common));
    out.push_back({0.5 * inv, inv / l2, 2.0 / (2.0 + static_cast<double>(common.size()))});
  }
  return out;
}

ResistanceBounds resistance_bounds(const Graph& g, EdgeId e) {
  if (e >= g.edge_count()) throw InvalidInput("resistance_bounds: edge index out of range");
  return resistance_bounds_all(g)[e];
}

}  // namespace edgerake::spectral
