#include "edgerake/erwr.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "edgerake/error.hpp"
#include "edgerake/kernels.hpp"

namespace edgerake::erwr {

namespace {

void require_alpha(double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw InvalidInput("alpha must lie in (0, 1)");
}

}  // namespace

TransitionOperator::TransitionOperator(const Graph& g)
    : g_(&g), inv_strength_(g.node_count(), 0.0), jump_share_(g.directed() ? 1.0 : 0.5) {
  for (NodeId v = 0; v < g.node_count(); ++v) {
    const double d = g.out_strength(v);
    if (d > 0.0) inv_strength_[v] = 1.0 / d;
  }
}

void TransitionOperator::scatter(std::size_t begin, std::size_t end, std::span<const double> z,
                                 std::span<double> node) const {
  const auto tails = g_->tails();
  const auto heads = g_->heads();
  if (g_->directed()) {
    for (std::size_t e = begin; e < end; ++e) node[heads[e]] += z[e];
  } else {
    for (std::size_t e = begin; e < end; ++e) {
      node[tails[e]] += z[e];
      node[heads[e]] += z[e];
    }
  }
}

void TransitionOperator::normalize(std::span<double> node) const {
  for (std::size_t v = 0; v < node.size(); ++v) node[v] = (jump_share_ * node[v]) * inv_strength_[v];
}

void TransitionOperator::edge_pass(std::size_t begin, std::size_t end, std::span<const double> node,
                                   std::span<const double> x, double alpha,
                                   std::span<double> out) const {
  const Graph& g = *g_;
  const std::size_t len = end - begin;
  const auto& kt = kernels::active();
  if (g.directed())
    kt.edge_update_directed(g.tails().subspan(begin, len), g.weights().subspan(begin, len), node,
                            x.subspan(begin, len), alpha, out.subspan(begin, len));
  else
    kt.edge_update_undirected(g.tails().subspan(begin, len), g.heads().subspan(begin, len),
                              g.weights().subspan(begin, len), node, x.subspan(begin, len), alpha,
                              out.subspan(begin, len));
}

void TransitionOperator::node_pass(std::span<const double> z, std::span<double> node) const {
  // Mass landing on each node, divided by D[v]. Scattering in edge order keeps
  // the random accesses on the n-sized node array and the summation order fixed.
  std::fill(node.begin(), node.end(), 0.0);
  scatter(0, edge_count(), z, node);
  normalize(node);
}

void TransitionOperator::apply(std::span<const double> z, std::span<const double> x, double alpha,
                               std::span<double> out, std::span<double> scratch) const {
  node_pass(z, scratch);
  edge_pass(0, edge_count(), scratch, x, alpha, out);
}

void TransitionOperator::step(std::span<const double> node, std::span<const double> x, double alpha,
                              std::span<double> out, std::span<double> next_node) const {
  // Blocked so each block of `out` is still in L1 when it is scattered.
  constexpr std::size_t kBlock = 512;
  const std::size_t m = edge_count();
  std::fill(next_node.begin(), next_node.end(), 0.0);
  for (std::size_t begin = 0; begin < m; begin += kBlock) {
    const std::size_t end = std::min(m, begin + kBlock);
    edge_pass(begin, end, node, x, alpha, out);
    scatter(begin, end, out, next_node);
  }
  normalize(next_node);
}

std::vector<double> TransitionOperator::apply(std::span<const double> z,
                                              std::span<const double> x, double alpha) const {
  std::vector<double> out(edge_count());
  std::vector<double> scratch(g_->node_count());
  apply(z, x, alpha, out, scratch);
  return out;
}

std::vector<double> transition_apply(const TransitionOperator& op, std::span<const double> z,
                                     std::span<const double> x, double alpha) {
  if (z.size() != op.edge_count() || x.size() != op.edge_count())
    throw InvalidInput("transition_apply: vectors must have one entry per edge (" +
                       std::to_string(op.edge_count()) + ")");
  if (!(alpha > 0.0 && alpha <= 1.0)) throw InvalidInput("alpha must lie in (0, 1]");
  return op.apply(z, x, alpha);
}

std::vector<double> source_weights(const Graph& g) {
  std::vector<double> x(g.edge_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const auto& ed = g.edge(e);
    x[e] = ed.weight / std::sqrt(g.out_strength(ed.tail) + g.out_strength(ed.head));
  }
  return x;
}

std::uint64_t iterations_for_epsilon(double alpha, double epsilon) {
  require_alpha(alpha);
  if (!(epsilon > 0.0 && epsilon <= 1.0)) throw InvalidInput("epsilon must lie in (0, 1]");
  const double ratio = std::log(epsilon) / std::log(alpha);
  auto t = static_cast<std::int64_t>(std::ceil(ratio)) - 1;
  if (t < 0) t = 0;
  // log rounding can land one off either way; settle with exact powers.
  while (t > 0 && std::pow(alpha, static_cast<double>(t)) <= epsilon) --t;
  while (std::pow(alpha, static_cast<double>(t + 1)) > epsilon) ++t;
  return static_cast<std::uint64_t>(t);
}

ApproxTrace edgerake_approx_traced(const Graph& g, double alpha, std::uint64_t t) {
  require_alpha(alpha);
  const TransitionOperator op(g);
  const auto& kt = kernels::active();
  const std::vector<double> x = source_weights(g);
  std::vector<double> z = x, next(x.size()), scratch(g.node_count());

  ApproxTrace trace;
  trace.step_norms.reserve(t);
  trace.z_norms.reserve(t);
  for (std::uint64_t i = 0; i < t; ++i) {
    op.apply(z, x, alpha, next, scratch);
    trace.step_norms.push_back(std::sqrt(kt.squared_distance(next, z)));
    z.swap(next);
    trace.z_norms.push_back(std::sqrt(kt.dot(z, z)));
  }
  for (double& v : z) v *= 1.0 - alpha;
  trace.result.scores = std::move(z);
  trace.result.measure = Measure::EdgeRake;
  trace.result.params.alpha = alpha;
  trace.result.params.iterations = t;
  return trace;
}

CentralityVector edgerake_approx(const Graph& g, double alpha, std::uint64_t t) {
  require_alpha(alpha);
  const TransitionOperator op(g);
  const std::vector<double> x = source_weights(g);
  std::vector<double> z = x, next(x.size());
  std::vector<double> node(g.node_count()), next_node(g.node_count());
  op.node_pass(z, node);
  for (std::uint64_t i = 0; i < t; ++i) {
    op.step(node, x, alpha, next, next_node);
    z.swap(next);
    node.swap(next_node);
  }
  for (double& v : z) v *= 1.0 - alpha;
  CentralityVector c;
  c.scores = std::move(z);
  c.measure = Measure::EdgeRake;
  c.params.alpha = alpha;
  c.params.iterations = t;
  return c;
}

Eigen::MatrixXd dense_transition(const Graph& g) {
  const auto m = static_cast<Eigen::Index>(g.edge_count());
  if (g.edge_count() > kDenseEdgeLimit)
    throw OracleLimit("dense transition limited to " + std::to_string(kDenseEdgeLimit) + " edges");
  Eigen::MatrixXd p = Eigen::MatrixXd::Zero(m, m);
  for (EdgeId i = 0; i < g.edge_count(); ++i) {
    const auto& ei = g.edge(i);
    auto jump = [&](NodeId u, double share) {
      const double d = g.out_strength(u);
      if (d <= 0.0) return;
      for (EdgeId j : g.out_edges(u)) p(i, j) += share * g.edge(j).weight / d;
    };
    if (g.directed()) {
      jump(ei.head, 1.0);
    } else {
      jump(ei.tail, 0.5);
      jump(ei.head, 0.5);
    }
  }
  return p;
}

namespace {

// Rows of (I - alpha P)^{-1} weighted by `source`: solves (I - alpha P)^T y = source^T.
Eigen::VectorXd resolvent_row(const Graph& g, double alpha, const Eigen::VectorXd& source) {
  const auto m = static_cast<Eigen::Index>(g.edge_count());
  const Eigen::MatrixXd a = Eigen::MatrixXd::Identity(m, m) - alpha * dense_transition(g);
  return a.transpose().partialPivLu().solve(source);
}

}  // namespace

CentralityVector edgerake_exact(const Graph& g, double alpha) {
  require_alpha(alpha);
  const auto x = source_weights(g);
  const Eigen::VectorXd xs = Eigen::Map<const Eigen::VectorXd>(x.data(), static_cast<Eigen::Index>(x.size()));
  CentralityVector c;
  c.measure = Measure::EdgeRake;
  c.params.alpha = alpha;
  if (g.edge_count() == 0) return c;
  const Eigen::VectorXd y = (1.0 - alpha) * resolvent_row(g, alpha, xs);
  c.scores.assign(y.data(), y.data() + y.size());
  return c;
}

std::vector<double> erwr_scores(const Graph& g, double alpha, EdgeId source) {
  require_alpha(alpha);
  const auto m = g.edge_count();
  if (source >= m) throw InvalidInput("erwr_scores: source edge index out of range");
  if (m <= kDenseEdgeLimit) {
    Eigen::VectorXd unit = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(m));
    unit[source] = 1.0;
    const Eigen::VectorXd r = (1.0 - alpha) * resolvent_row(g, alpha, unit);
    return {r.data(), r.data() + r.size()};
  }
  const TransitionOperator op(g);
  std::vector<double> unit(m, 0.0);
  unit[source] = 1.0;
  std::vector<double> z = unit, next(m), scratch(g.node_count());
  const auto t = iterations_for_epsilon(alpha, 1e-12);
  for (std::uint64_t i = 0; i < t; ++i) {
    op.apply(z, unit, alpha, next, scratch);
    z.swap(next);
  }
  for (double& v : z) v *= 1.0 - alpha;
  return z;
}

}  // namespace edgerake::erwr
