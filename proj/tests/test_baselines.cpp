#include <doctest.h>

#include <cmath>

#include "edgerake/baselines.hpp"
#include "edgerake/error.hpp"
#include "edgerake/random.hpp"
#include "edgerake/spectral.hpp"
#include "oracles.hpp"

using namespace edgerake;
using namespace edgerake::baselines;

namespace {

Graph two_cycle() { return build_graph({{0, 1, 1}, {1, 0, 1}}, true); }
Graph directed_path() { return build_graph({{0, 1, 1}, {1, 2, 1}}, true); }

Graph bidirected(const Graph& g) {
  std::vector<Edge> arcs;
  for (const auto& e : g.edges()) {
    arcs.push_back(e);
    arcs.push_back({e.head, e.tail, e.weight});
  }
  return build_graph(arcs, true, g.node_count());
}

}  // namespace

TEST_CASE("edge PageRank examples") {
  auto c = edge_pagerank(two_cycle(), 0.5).scores;
  CHECK(c[0] == doctest::Approx(2.0).epsilon(1e-9));
  CHECK(c[1] == doctest::Approx(2.0).epsilon(1e-9));

  c = edge_pagerank(directed_path(), 0.5).scores;
  CHECK(c[0] == doctest::Approx(1.0));
  CHECK(c[1] == doctest::Approx(1.5));

  c = edge_pagerank(build_graph({{0, 1, 1}}, false), 0.5).scores;
  CHECK(c[0] == doctest::Approx(4.0).epsilon(1e-9));
}

TEST_CASE("edge Katz examples") {
  auto c = edge_katz(directed_path(), 0.5).scores;
  CHECK(c[0] == doctest::Approx(1.0));
  CHECK(c[1] == doctest::Approx(1.5));

  c = edge_katz(two_cycle(), 0.5).scores;
  CHECK(c[0] == doctest::Approx(2.0).epsilon(1e-9));

  CHECK_THROWS_AS(edge_katz(bidirected(gen::complete(3)), 0.5), NonConvergence);
  CHECK_THROWS_AS(edge_katz(gen::complete(3), 0.5), NonConvergence);
  CHECK_NOTHROW(edge_katz(gen::complete(3), 0.2));
}

TEST_CASE("EP and EK fixed points satisfy their recurrences") {
  Rng rng(41);
  for (int trial = 0; trial < 20; ++trial) {
    gen::RandomGraphOptions opt;
    opt.nodes = 3 + rng.below(15);
    opt.edges = opt.nodes + rng.below(2 * opt.nodes);
    opt.directed = trial % 2 == 0;
    opt.weighted = true;
    opt.min_weight = 0.2;
    opt.max_weight = 1.0;
    const auto g = gen::random_graph(opt, rng);
    const auto s = arc_system(g);
    const double tol = kDefaultTolerance;
    const double alpha = 0.5;

    const auto ep = edge_pagerank_arcs(s, alpha, 10000, tol);
    for (std::size_t a = 0; a < s.arcs.size(); ++a) {
      double in = 0.0;
      for (auto p = s.pred_offset[a]; p < s.pred_offset[a + 1]; ++p) in += ep.scores[s.pred_index[p]];
      const double rhs = s.arcs[a].weight / s.tail_strength[a] * (alpha * in + 1.0);
      CHECK(std::abs(ep.scores[a] - rhs) <= 10 * tol);
    }

    // Katz with alpha below 1 / (max in-weight sum) so it converges.
    double max_in = 0.0;
    for (std::size_t a = 0; a < s.arcs.size(); ++a) {
      double in = 0.0;
      for (auto p = s.pred_offset[a]; p < s.pred_offset[a + 1]; ++p) in += s.arcs[s.pred_index[p]].weight;
      max_in = std::max(max_in, in * s.arcs[a].weight);
    }
    const double ka = 0.5 / std::max(max_in, 1.0);
    const auto ek = edge_katz_arcs(s, ka, 10000, tol);
    for (std::size_t a = 0; a < s.arcs.size(); ++a) {
      double in = 0.0;
      for (auto p = s.pred_offset[a]; p < s.pred_offset[a + 1]; ++p) in += ek.scores[s.pred_index[p]];
      CHECK(std::abs(ek.scores[a] - s.arcs[a].weight * (ka * in + 1.0)) <= 10 * tol);
    }
  }
}

TEST_CASE("EP equals arc-weighted node PageRank") {
  Rng rng(42);
  for (int trial = 0; trial < 15; ++trial) {
    gen::RandomGraphOptions opt;
    opt.nodes = 3 + rng.below(12);
    opt.edges = opt.nodes + rng.below(2 * opt.nodes);
    opt.directed = trial % 2 == 1;
    opt.weighted = true;
    const auto g = gen::random_graph(opt, rng);
    const auto s = arc_system(g);
    const auto ep = edge_pagerank_arcs(s, 0.5, 10000, 1e-14).scores;
    const auto pr = oracle::node_pagerank(g, 0.5, 200);
    for (std::size_t a = 0; a < s.arcs.size(); ++a) {
      const double want = s.arcs[a].weight / s.tail_strength[a] * pr[s.arcs[a].tail];
      CHECK(std::abs(ep[a] - want) <= 1e-9);
    }
  }
}

TEST_CASE("GTOM") {
  for (double v : gtom(gen::complete(3)).scores) CHECK(v == doctest::Approx(1.0));
  for (double v : gtom(gen::cycle(4)).scores) CHECK(v == doctest::Approx(0.5));
  for (double v : gtom(gen::star(3)).scores) CHECK(v == doctest::Approx(1.0));
  // Weighted input is rejected rather than silently treated as unweighted.
  CHECK_THROWS_AS(gtom(build_graph({{0, 1, 2}, {1, 2, 2}}, false)), InvalidInput);
  // Directed head without out-neighbours.
  CHECK_THROWS_AS(gtom(directed_path()), InvalidInput);
}

TEST_CASE("edge betweenness examples") {
  auto c = edge_betweenness(gen::path(3)).scores;
  CHECK(c[0] == doctest::Approx(4.0));
  CHECK(c[1] == doctest::Approx(4.0));
  for (double v : edge_betweenness(gen::complete(3)).scores) CHECK(v == doctest::Approx(2.0));
  for (double v : edge_betweenness(gen::cycle(4)).scores) CHECK(v == doctest::Approx(4.0));
  c = edge_betweenness(directed_path()).scores;
  CHECK(c[0] == doctest::Approx(2.0));  // (0,1), (0,2)
  CHECK(c[1] == doctest::Approx(2.0));  // (1,2), (0,2)
  CHECK_THROWS_AS(edge_betweenness(build_graph({{0, 1, 3}}, false)), InvalidInput);
}

TEST_CASE("edge betweenness matches exhaustive path enumeration") {
  Rng rng(43);
  for (int trial = 0; trial < 40; ++trial) {
    gen::RandomGraphOptions opt;
    opt.nodes = 2 + rng.below(8);
    opt.edges = rng.below(2 * opt.nodes + 2);
    opt.directed = trial % 2 == 0;
    opt.simple = trial % 5 != 0;
    const auto g = gen::random_graph(opt, rng);
    const auto want = oracle::betweenness_by_enumeration(g);
    const auto got = edge_betweenness(g).scores;
    for (EdgeId e = 0; e < g.edge_count(); ++e) CHECK(std::abs(got[e] - want[e].value()) <= 1e-9);
  }
}

TEST_CASE("edge betweenness is independent of block scheduling") {
  Rng rng(44);
  gen::RandomGraphOptions opt;
  opt.nodes = 300;
  opt.edges = 900;
  const auto g = gen::random_graph(opt, rng);
  const auto a = edge_betweenness(g).scores;
  const auto b = edge_betweenness(g).scores;
  CHECK(a == b);
}

TEST_CASE("BDRC") {
  CHECK(bdrc(build_graph({{0, 1, 1}}, false)).scores[0] == doctest::Approx(0.5).epsilon(1e-13));
  const auto k3 = bdrc(gen::complete(3)).scores;
  CHECK(k3[0] == doctest::Approx(k3[1]).epsilon(1e-13));
  CHECK(k3[1] == doctest::Approx(k3[2]).epsilon(1e-13));

  // P4: all three edges are cut edges with r = 1, BDRC tells ends from middle.
  const auto p4 = gen::path(4);
  const auto r = spectral::effective_resistance_all(p4);
  const auto b = bdrc(p4).scores;
  for (double v : r) CHECK(v == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(b[0] == doctest::Approx(0.75).epsilon(1e-12));
  CHECK(b[1] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(b[2] == doctest::Approx(0.75).epsilon(1e-12));
  CHECK_THROWS_AS(bdrc(directed_path()), InvalidInput);
}

TEST_CASE("effective resistance centrality delegates to spectral") {
  CHECK(effective_resistance_centrality(build_graph({{0, 1, 1}}, false)).scores[0] ==
        doctest::Approx(1.0));
  for (double v : effective_resistance_centrality(gen::complete(3)).scores)
    CHECK(v == doctest::Approx(2.0 / 3.0));
  for (double v : effective_resistance_centrality(gen::cycle(4)).scores)
    CHECK(v == doctest::Approx(0.75));
}
