#include "edgerake/graph.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "edgerake/error.hpp"

namespace edgerake {

namespace {

// Counting-sort CSR: bucket edges by key node, keeping ascending edge id per bucket.
void fill_csr(std::size_t n, const std::vector<std::pair<NodeId, EdgeId>>& entries,
              std::vector<std::uint32_t>& offset, std::vector<EdgeId>& index) {
  offset.assign(n + 1, 0);
  for (const auto& [v, e] : entries) ++offset[v + 1];
  std::partial_sum(offset.begin(), offset.end(), offset.begin());
  index.assign(entries.size(), 0);
  std::vector<std::uint32_t> cursor(offset.begin(), offset.end() - 1);
  for (const auto& [v, e] : entries) index[cursor[v]++] = e;
}

}  // namespace

Graph build_graph(std::vector<Edge> edges, bool directed, std::optional<std::size_t> node_count) {
  if (edges.size() >= std::numeric_limits<std::int32_t>::max())
    throw InvalidInput("too many edges");
  std::size_t n = 0;
  for (const auto& e : edges) n = std::max<std::size_t>(n, std::max(e.tail, e.head) + std::size_t{1});
  if (node_count) {
    if (*node_count < n)
      throw InvalidInput("edge endpoint " + std::to_string(n - 1) + " out of range for " +
                         std::to_string(*node_count) + " nodes");
    n = *node_count;
  }
  if (n >= std::numeric_limits<std::int32_t>::max()) throw InvalidInput("too many nodes");

  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto& e = edges[i];
    if (!(e.weight > 0.0) || !std::isfinite(e.weight))
      throw InvalidInput("edge " + std::to_string(i) + " has non-positive weight");
    if (e.tail == e.head)
      throw InvalidInput("edge " + std::to_string(i) + " is a self-loop on node " +
                         std::to_string(e.tail));
  }

  Graph g;
  g.directed_ = directed;
  const auto m = edges.size();
  g.tails_.resize(m);
  g.heads_.resize(m);
  g.weights_.resize(m);
  g.out_strength_.assign(n, 0.0);

  std::vector<std::pair<NodeId, EdgeId>> out_entries, in_entries;
  out_entries.reserve(directed ? m : 2 * m);
  in_entries.reserve(directed ? m : 2 * m);
  for (EdgeId i = 0; i < m; ++i) {
    const auto& e = edges[i];
    g.tails_[i] = e.tail;
    g.heads_[i] = e.head;
    g.weights_[i] = e.weight;
    g.out_strength_[e.tail] += e.weight;
    out_entries.emplace_back(e.tail, i);
    in_entries.emplace_back(e.head, i);
    if (!directed) {
      g.out_strength_[e.head] += e.weight;
      out_entries.emplace_back(e.head, i);
      in_entries.emplace_back(e.tail, i);
    }
  }
  // Bucket order must be ascending edge id; entries were pushed in id order.
  fill_csr(n, out_entries, g.out_offset_, g.out_index_);
  fill_csr(n, in_entries, g.in_offset_, g.in_index_);
  g.edges_ = std::move(edges);
  return g;
}

bool Graph::unweighted() const {
  return std::all_of(weights_.begin(), weights_.end(), [](double w) { return w == 1.0; });
}

bool Graph::simple() const {
  std::vector<std::pair<NodeId, NodeId>> keys;
  keys.reserve(edges_.size());
  for (const auto& e : edges_) {
    auto a = e.tail, b = e.head;
    if (!directed_ && a > b) std::swap(a, b);
    keys.emplace_back(a, b);
  }
  std::sort(keys.begin(), keys.end());
  return std::adjacent_find(keys.begin(), keys.end()) == keys.end();
}

std::vector<NodeId> Graph::out_neighbors(NodeId v) const {
  std::vector<NodeId> nb;
  for (EdgeId e : out_edges(v)) nb.push_back(tails_[e] == v ? heads_[e] : tails_[e]);
  std::sort(nb.begin(), nb.end());
  nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
  return nb;
}

IncidenceBundle incidence_bundle(const Graph& g) {
  const auto n = static_cast<Eigen::Index>(g.node_count());
  const auto m = static_cast<Eigen::Index>(g.edge_count());
  using Triplet = Eigen::Triplet<double>;
  std::vector<Triplet> sgn, tail, head, jump;
  for (Eigen::Index i = 0; i < m; ++i) {
    const auto& e = g.edge(static_cast<EdgeId>(i));
    sgn.emplace_back(i, e.tail, 1.0);
    sgn.emplace_back(i, e.head, -1.0);
    if (g.directed()) {
      tail.emplace_back(e.tail, i, e.weight);
      head.emplace_back(e.head, i, e.weight);
      jump.emplace_back(e.head, i, 1.0);
    } else {
      for (NodeId v : {e.tail, e.head}) {
        tail.emplace_back(v, i, e.weight);
        head.emplace_back(v, i, e.weight);
        jump.emplace_back(v, i, 0.5);
      }
    }
  }
  IncidenceBundle b;
  b.signed_inc.resize(m, n);
  b.tail_inc.resize(n, m);
  b.head_inc.resize(n, m);
  b.jump_norm.resize(n, m);
  b.signed_inc.setFromTriplets(sgn.begin(), sgn.end());
  b.tail_inc.setFromTriplets(tail.begin(), tail.end());
  b.head_inc.setFromTriplets(head.begin(), head.end());
  b.jump_norm.setFromTriplets(jump.begin(), jump.end());
  return b;
}

namespace {

void require_undirected(const Graph& g, const char* what) {
  if (g.directed()) throw InvalidInput(std::string(what) + " requires an undirected graph");
}

}  // namespace

Eigen::MatrixXd laplacian(const Graph& g) {
  require_undirected(g, "laplacian");
  const auto n = static_cast<Eigen::Index>(g.node_count());
  Eigen::MatrixXd l = Eigen::MatrixXd::Zero(n, n);
  for (const auto& e : g.edges()) {
    l(e.tail, e.tail) += e.weight;
    l(e.head, e.head) += e.weight;
    l(e.tail, e.head) -= e.weight;
    l(e.head, e.tail) -= e.weight;
  }
  return l;
}

Eigen::MatrixXd normalized_adjacency(const Graph& g) {
  require_undirected(g, "normalized_adjacency");
  const auto n = static_cast<Eigen::Index>(g.node_count());
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (const auto& e : g.edges()) {
    const double s = e.weight / std::sqrt(g.out_strength(e.tail) * g.out_strength(e.head));
    a(e.tail, e.head) += s;
    a(e.head, e.tail) += s;
  }
  return a;
}

Components connected_components(const Graph& g) {
  const auto n = g.node_count();
  constexpr auto unset = std::numeric_limits<std::uint32_t>::max();
  Components c;
  c.label.assign(n, unset);
  std::vector<NodeId> stack;
  for (NodeId s = 0; s < n; ++s) {
    if (c.label[s] != unset) continue;
    c.label[s] = c.count;
    stack.push_back(s);
    while (!stack.empty()) {
      const NodeId v = stack.back();
      stack.pop_back();
      auto visit = [&](EdgeId e) {
        const NodeId u = g.tails()[e] == v ? g.heads()[e] : g.tails()[e];
        if (c.label[u] == unset) {
          c.label[u] = c.count;
          stack.push_back(u);
        }
      };
      for (EdgeId e : g.out_edges(v)) visit(e);
      if (g.directed())
        for (EdgeId e : g.in_edges(v)) visit(e);
    }
    ++c.count;
  }
  return c;
}

}  // namespace edgerake
