#include "edgerake/random.hpp"

#include <algorithm>
#include <set>

#include "edgerake/error.hpp"

namespace edgerake {

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw InvalidInput("Rng::below: empty range");
  unsigned __int128 prod = static_cast<unsigned __int128>(eng_()) * bound;
  auto low = static_cast<std::uint64_t>(prod);
  if (low < bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    while (low < threshold) {
      prod = static_cast<unsigned __int128>(eng_()) * bound;
      low = static_cast<std::uint64_t>(prod);
    }
  }
  return static_cast<std::uint64_t>(prod >> 64);
}

AliasTable::AliasTable(std::span<const double> weights) {
  const std::size_t k = weights.size();
  double total = 0.0;
  for (double w : weights) {
    if (!(w >= 0.0)) throw InvalidInput("alias table: negative weight");
    total += w;
  }
  if (k == 0 || !(total > 0.0)) throw InvalidInput("alias table: weights must have a positive sum");

  prob_.assign(k, 0.0);
  alias_.assign(k, 0);
  std::vector<double> scaled(k);
  std::vector<std::uint32_t> small, large;
  for (std::size_t i = 0; i < k; ++i) {
    scaled[i] = weights[i] * static_cast<double>(k) / total;
    (scaled[i] < 1.0 ? small : large).push_back(static_cast<std::uint32_t>(i));
  }
  while (!small.empty() && !large.empty()) {
    const auto s = small.back();
    small.pop_back();
    const auto l = large.back();
    prob_[s] = scaled[s];
    alias_[s] = l;
    scaled[l] = (scaled[l] + scaled[s]) - 1.0;
    if (scaled[l] < 1.0) {
      large.pop_back();
      small.push_back(l);
    }
  }
  // Leftovers are 1 up to rounding.
  for (auto i : large) prob_[i] = 1.0;
  for (auto i : small) prob_[i] = 1.0;
  for (std::size_t i = 0; i < k; ++i)
    if (weights[i] == 0.0) prob_[i] = 0.0;
}

std::size_t AliasTable::sample(Rng& rng) const {
  const auto i = rng.below(prob_.size());
  return rng.uniform() < prob_[i] ? i : alias_[i];
}

namespace gen {

Graph random_graph(const RandomGraphOptions& opt, Rng& rng) {
  const std::size_t n = opt.nodes;
  std::vector<Edge> edges;
  std::set<std::pair<NodeId, NodeId>> seen;
  auto key = [&](NodeId a, NodeId b) {
    if (!opt.directed && a > b) std::swap(a, b);
    return std::pair(a, b);
  };
  auto weight = [&] { return opt.weighted ? rng.uniform(opt.min_weight, opt.max_weight) : 1.0; };
  auto add = [&](NodeId a, NodeId b) {
    if (a == b) return false;
    if (opt.simple && !seen.insert(key(a, b)).second) return false;
    edges.push_back({a, b, weight()});
    return true;
  };

  std::size_t capacity = n < 2 ? 0 : n * (n - 1) / (opt.directed ? 1 : 2);
  std::size_t target = opt.simple ? std::min(opt.edges, capacity) : opt.edges;
  if (n < 2) target = 0;

  if (opt.connected && n >= 2) {
    for (NodeId v = 1; v < n; ++v) {
      const auto u = static_cast<NodeId>(rng.below(v));
      if (opt.directed && rng.coin()) add(v, u);
      else add(u, v);
    }
    target = std::max(target, edges.size());
  }
  while (edges.size() < target) {
    const auto a = static_cast<NodeId>(rng.below(n));
    const auto b = static_cast<NodeId>(rng.below(n));
    add(a, b);
  }
  if (opt.directed && opt.no_dangling && n >= 2) {
    std::vector<bool> has_out(n, false);
    for (const auto& e : edges) has_out[e.tail] = true;
    for (NodeId v = 0; v < n; ++v) {
      while (!has_out[v]) has_out[v] = add(v, static_cast<NodeId>(rng.below(n)));
    }
  }
  return build_graph(std::move(edges), opt.directed, n);
}

Graph random_balanced_digraph(std::size_t nodes, std::size_t cycles, Rng& rng) {
  if (nodes < 2) throw InvalidInput("balanced digraph needs at least two nodes");
  std::vector<NodeId> perm(nodes);
  for (NodeId v = 0; v < nodes; ++v) perm[v] = v;
  std::vector<Edge> edges;
  for (std::size_t c = 0; c < cycles; ++c) {
    for (std::size_t i = nodes - 1; i > 0; --i) std::swap(perm[i], perm[rng.below(i + 1)]);
    const std::size_t len = 2 + rng.below(nodes - 1);
    for (std::size_t i = 0; i < len; ++i) edges.push_back({perm[i], perm[(i + 1) % len], 1.0});
  }
  return build_graph(std::move(edges), true, nodes);
}

Graph path(std::size_t n) {
  std::vector<Edge> e;
  for (NodeId v = 0; v + 1 < n; ++v) e.push_back({v, v + 1, 1.0});
  return build_graph(std::move(e), false, n);
}

Graph cycle(std::size_t n) {
  std::vector<Edge> e;
  for (NodeId v = 0; v < n; ++v) e.push_back({v, static_cast<NodeId>((v + 1) % n), 1.0});
  return build_graph(std::move(e), false, n);
}

Graph complete(std::size_t n) {
  std::vector<Edge> e;
  for (NodeId u = 0; u < n; ++u)
    for (NodeId v = u + 1; v < n; ++v) e.push_back({u, v, 1.0});
  return build_graph(std::move(e), false, n);
}

Graph star(std::size_t leaves) {
  std::vector<Edge> e;
  for (NodeId v = 1; v <= leaves; ++v) e.push_back({0, v, 1.0});
  return build_graph(std::move(e), false, leaves + 1);
}

Graph hypercube(std::size_t dim) {
  const std::size_t n = std::size_t{1} << dim;
  std::vector<Edge> e;
  for (NodeId v = 0; v < n; ++v)
    for (std::size_t b = 0; b < dim; ++b) {
      const auto u = static_cast<NodeId>(v ^ (1u << b));
      if (v < u) e.push_back({v, u, 1.0});
    }
  return build_graph(std::move(e), false, n);
}

Graph circulant(std::size_t n, std::span<const std::size_t> offsets) {
  std::set<std::pair<NodeId, NodeId>> seen;
  std::vector<Edge> e;
  for (NodeId v = 0; v < n; ++v)
    for (auto k : offsets) {
      auto a = v, b = static_cast<NodeId>((v + k) % n);
      if (a == b) continue;
      if (a > b) std::swap(a, b);
      if (seen.insert({a, b}).second) e.push_back({a, b, 1.0});
    }
  return build_graph(std::move(e), false, n);
}

}  // namespace gen

}  // namespace edgerake
