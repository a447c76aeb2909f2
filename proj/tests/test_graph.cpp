#include <doctest.h>

#include <numeric>

#include "edgerake/error.hpp"
#include "edgerake/graph.hpp"
#include "edgerake/random.hpp"

using namespace edgerake;

namespace {

Graph k3() { return build_graph({{0, 1, 1}, {1, 2, 1}, {0, 2, 1}}, false); }

Eigen::MatrixXd dense(const SparseMatrix& s) { return Eigen::MatrixXd(s); }

}  // namespace

TEST_CASE("build_graph basic shapes") {
  SUBCASE("single undirected edge") {
    const auto g = build_graph({{0, 1, 1}}, false);
    CHECK(g.node_count() == 2);
    CHECK(g.edge_count() == 1);
    CHECK(g.out_strength(0) == 1.0);
    CHECK(g.out_strength(1) == 1.0);
  }
  SUBCASE("K3 is 2-regular") {
    const auto g = k3();
    for (NodeId v = 0; v < 3; ++v) CHECK(g.out_strength(v) == 2.0);
  }
  SUBCASE("directed two arcs") {
    const auto g = build_graph({{0, 1, 1}, {1, 0, 1}}, true);
    CHECK(g.edge_count() == 2);
    CHECK(g.out_strength(0) == 1.0);
    CHECK(g.out_strength(1) == 1.0);
  }
  SUBCASE("explicit node count keeps isolated nodes") {
    const auto g = build_graph({}, false, 3);
    CHECK(g.node_count() == 3);
    CHECK(g.edge_count() == 0);
  }
  SUBCASE("parallel edges are kept") {
    const auto g = build_graph({{0, 1, 1}, {1, 0, 2}}, false);
    CHECK(g.edge_count() == 2);
    CHECK(g.out_strength(0) == 3.0);
    CHECK_FALSE(g.simple());
  }
}

TEST_CASE("build_graph rejects bad input") {
  CHECK_THROWS_AS(build_graph({{0, 1, 0.0}}, false), InvalidInput);
  CHECK_THROWS_AS(build_graph({{0, 1, -2.0}}, false), InvalidInput);
  CHECK_THROWS_AS(build_graph({{2, 2, 1.0}}, false), InvalidInput);
  CHECK_THROWS_AS(build_graph({{0, 5, 1.0}}, false, 3), InvalidInput);
}

TEST_CASE("graph invariants on random graphs") {
  Rng rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    gen::RandomGraphOptions opt;
    opt.nodes = 2 + rng.below(20);
    opt.edges = rng.below(60);
    opt.directed = trial % 2 == 0;
    opt.weighted = trial % 3 == 0;
    opt.simple = trial % 4 != 0;
    const auto g = gen::random_graph(opt, rng);

    // CSR round trip: every edge appears in its endpoint lists exactly once.
    std::size_t out_total = 0;
    for (NodeId v = 0; v < g.node_count(); ++v) {
      for (EdgeId e : g.out_edges(v)) {
        const auto& ed = g.edge(e);
        CHECK((ed.tail == v || (!g.directed() && ed.head == v)));
      }
      auto span = g.out_edges(v);
      CHECK(std::is_sorted(span.begin(), span.end()));
      out_total += span.size();
    }
    CHECK(out_total == (g.directed() ? 1 : 2) * g.edge_count());

    double wsum = 0.0;
    for (const auto& e : g.edges()) wsum += e.weight;
    const auto s = g.out_strength();
    const double dsum = std::accumulate(s.begin(), s.end(), 0.0);
    CHECK(dsum == doctest::Approx((g.directed() ? 1.0 : 2.0) * wsum).epsilon(1e-12));

    const auto b = incidence_bundle(g);
    const Eigen::MatrixXd sgn = dense(b.signed_inc);
    if (g.edge_count() > 0) {
      CHECK(sgn.rowwise().sum().cwiseAbs().maxCoeff() == 0.0);
      const Eigen::MatrixXd jn = dense(b.jump_norm);
      CHECK((jn.colwise().sum().array() - 1.0).abs().maxCoeff() <= 1e-12);
    }
    if (!g.directed() && g.unweighted()) {
      // Integer-valued entries: the products are exact.
      CHECK((sgn.transpose() * sgn - laplacian(g)).cwiseAbs().maxCoeff() == 0.0);
    }
  }
}

TEST_CASE("incidence bundle entries") {
  SUBCASE("undirected unit edge") {
    const auto b = incidence_bundle(build_graph({{0, 1, 1}}, false));
    const Eigen::MatrixXd jn = dense(b.jump_norm), sg = dense(b.signed_inc);
    CHECK(jn(0, 0) == 0.5);
    CHECK(jn(1, 0) == 0.5);
    CHECK(sg(0, 0) == 1.0);
    CHECK(sg(0, 1) == -1.0);
  }
  SUBCASE("directed edge jumps to the head only") {
    const auto b = incidence_bundle(build_graph({{0, 1, 1}}, true));
    const Eigen::MatrixXd jn = dense(b.jump_norm), tl = dense(b.tail_inc);
    CHECK(jn(0, 0) == 0.0);
    CHECK(jn(1, 0) == 1.0);
    CHECK(tl(0, 0) == 1.0);
    CHECK(tl(1, 0) == 0.0);
  }
  SUBCASE("weight cancels in the normalized column") {
    const auto b = incidence_bundle(build_graph({{0, 1, 3}}, false));
    const Eigen::MatrixXd tl = dense(b.tail_inc), jn = dense(b.jump_norm);
    CHECK(tl(0, 0) == 3.0);
    CHECK(tl(1, 0) == 3.0);
    CHECK(jn(0, 0) == 0.5);
    CHECK(jn(1, 0) == 0.5);
  }
}

TEST_CASE("laplacian and normalized adjacency") {
  const Eigen::MatrixXd p2 = laplacian(build_graph({{0, 1, 1}}, false));
  CHECK(p2(0, 0) == 1.0);
  CHECK(p2(0, 1) == -1.0);

  const Eigen::MatrixXd l3 = laplacian(k3());
  const Eigen::MatrixXd expect = 3.0 * Eigen::MatrixXd::Identity(3, 3) - Eigen::MatrixXd::Ones(3, 3);
  CHECK((l3 - expect).cwiseAbs().maxCoeff() == 0.0);

  const Eigen::MatrixXd a2 = normalized_adjacency(build_graph({{0, 1, 1}}, false));
  CHECK(a2(0, 1) == doctest::Approx(1.0));
  CHECK(a2(0, 0) == 0.0);

  const Eigen::MatrixXd a3 = normalized_adjacency(k3());
  CHECK(a3(0, 1) == doctest::Approx(0.5));

  // Star K1,3: 1 / sqrt(3 * 1).
  const Eigen::MatrixXd as = normalized_adjacency(gen::star(3));
  CHECK(as(0, 1) == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-15));

  const Eigen::MatrixXd iso = normalized_adjacency(build_graph({{0, 1, 1}}, false, 3));
  CHECK(iso.row(2).cwiseAbs().sum() == 0.0);

  CHECK_THROWS_AS(laplacian(build_graph({{0, 1, 1}}, true)), InvalidInput);
}

TEST_CASE("connected components") {
  CHECK(connected_components(gen::path(3)).count == 1);
  const auto two = connected_components(build_graph({{0, 1, 1}, {2, 3, 1}}, false));
  CHECK(two.count == 2);
  CHECK(two.label == std::vector<std::uint32_t>{0, 0, 1, 1});
  CHECK(connected_components(build_graph({}, false, 3)).count == 3);
  // Weak connectivity for arcs pointing in opposite directions.
  CHECK(connected_components(build_graph({{0, 1, 1}, {2, 1, 1}}, true)).count == 1);
}
