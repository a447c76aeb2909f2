#include <doctest.h>

#include <cmath>

#include "edgerake/error.hpp"
#include "edgerake/random.hpp"
#include "edgerake/spectral.hpp"

using namespace edgerake;
using namespace edgerake::spectral;

namespace {

Graph p2() { return build_graph({{0, 1, 1}}, false); }

double frob(const Eigen::MatrixXd& m) { return m.norm(); }

}  // namespace

TEST_CASE("pinv_laplacian small cases") {
  SUBCASE("P2: rank one, eigenvalue 2") {
    const auto r = pinv_laplacian(laplacian(p2()));
    CHECK(r.rank == 1);
    CHECK(r.pinv(0, 0) == doctest::Approx(0.25).epsilon(1e-14));
    CHECK(r.pinv(0, 1) == doctest::Approx(-0.25).epsilon(1e-14));
  }
  SUBCASE("K3: (3I - J) / 9") {
    const auto r = pinv_laplacian(laplacian(gen::complete(3)));
    CHECK(r.rank == 2);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        CHECK(r.pinv(i, j) == doctest::Approx(i == j ? 2.0 / 9.0 : -1.0 / 9.0).epsilon(1e-13));
  }
  SUBCASE("zero matrix") {
    const auto r = pinv_laplacian(Eigen::MatrixXd::Zero(4, 4));
    CHECK(r.rank == 0);
    CHECK(r.pinv.cwiseAbs().maxCoeff() == 0.0);
  }
  SUBCASE("asymmetric input") {
    Eigen::MatrixXd a = laplacian(p2());
    a(0, 1) += 1e-6;
    CHECK_THROWS_AS(pinv_laplacian(a), InvalidInput);
  }
}

TEST_CASE("Moore-Penrose axioms and rank on random graphs") {
  Rng rng(21);
  for (int trial = 0; trial < 25; ++trial) {
    gen::RandomGraphOptions opt;
    opt.nodes = 2 + rng.below(25);
    opt.edges = rng.below(3 * opt.nodes);
    opt.weighted = trial % 2 == 0;
    const auto g = gen::random_graph(opt, rng);
    const auto l = laplacian(g);
    const auto r = pinv_laplacian(l);
    const auto& lp = r.pinv;
    CHECK(frob(l * lp * l - l) <= 1e-8);
    CHECK(frob(lp * l * lp - lp) <= 1e-8);
    CHECK(frob(l * lp - (l * lp).transpose()) <= 1e-8);
    CHECK(frob(lp * l - (lp * l).transpose()) <= 1e-8);
    CHECK(r.rank == static_cast<Eigen::Index>(g.node_count() - connected_components(g).count));
  }
}

TEST_CASE("effective resistance examples") {
  CHECK(effective_resistance_all(p2())[0] == doctest::Approx(1.0).epsilon(1e-14));
  for (double r : effective_resistance_all(gen::complete(3)))
    CHECK(r == doctest::Approx(2.0 / 3.0).epsilon(1e-13));
  for (double r : effective_resistance_all(gen::cycle(4)))
    CHECK(r == doctest::Approx(0.75).epsilon(1e-13));
  // Two parallel unit resistors: 1/2 each.
  for (double r : effective_resistance_all(build_graph({{0, 1, 1}, {0, 1, 1}}, false)))
    CHECK(r == doctest::Approx(0.5).epsilon(1e-13));
  // Weighted edge: conductance 4 gives 1/4.
  CHECK(effective_resistance_all(build_graph({{0, 1, 4}}, false))[0] ==
        doctest::Approx(0.25).epsilon(1e-13));
  CHECK_THROWS_AS(effective_resistance_all(build_graph({{0, 1, 1}}, true)), InvalidInput);
}

TEST_CASE("q_matrix") {
  SUBCASE("single edge") {
    const auto q = q_matrix(p2());
    CHECK(q.rows() == 1);
    CHECK(q(0, 0) == doctest::Approx(1.0).epsilon(1e-14));
  }
  SUBCASE("K3 diagonal and idempotence") {
    const auto q = q_matrix(gen::complete(3));
    for (int e = 0; e < 3; ++e) CHECK(q(e, e) == doctest::Approx(2.0 / 3.0).epsilon(1e-13));
    CHECK(frob(q * q - q) <= 1e-8);
  }
  SUBCASE("two disjoint edges") {
    const auto q = q_matrix(build_graph({{0, 1, 1}, {2, 3, 1}}, false));
    CHECK(q.trace() == doctest::Approx(2.0).epsilon(1e-12));
  }
  CHECK_THROWS_AS(q_matrix(build_graph({{0, 1, 2}}, false)), InvalidInput);
  CHECK_THROWS_AS(q_matrix(build_graph({{0, 1, 1}}, true)), InvalidInput);
}

TEST_CASE("bareiss determinant") {
  CHECK(bareiss_determinant({{2}}) == 2);
  CHECK(bareiss_determinant({{1, 2}, {3, 4}}) == -2);
  CHECK(bareiss_determinant({{0, 1}, {1, 0}}) == -1);
  CHECK(bareiss_determinant({{1, 2}, {2, 4}}) == 0);
  CHECK(bareiss_determinant({{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}}) == 4);
  // Cayley: K_n has n^(n-2) spanning trees; cofactor of K12's Laplacian.
  std::vector<std::vector<std::int64_t>> k(11, std::vector<std::int64_t>(11, -1));
  for (int i = 0; i < 11; ++i) k[i][i] = 11;
  std::int64_t cayley = 1;
  for (int i = 0; i < 10; ++i) cayley *= 12;
  CHECK(bareiss_determinant(k) == cayley);
}

TEST_CASE("spanning_tree_ratio") {
  SUBCASE("K3") {
    const auto r = spanning_tree_ratio(gen::complete(3), 0);
    CHECK(r.trees == 3);
    CHECK(r.trees_with_edge == 2);
    CHECK(r.ratio == doctest::Approx(2.0 / 3.0));
  }
  SUBCASE("P3 is a tree") {
    const auto r = spanning_tree_ratio(gen::path(3), 1);
    CHECK(r.trees == 1);
    CHECK(r.trees_with_edge == 1);
  }
  SUBCASE("C4") {
    const auto r = spanning_tree_ratio(gen::cycle(4), 2);
    CHECK(r.trees == 4);
    CHECK(r.trees_with_edge == 3);
    CHECK(r.ratio == doctest::Approx(0.75));
  }
  SUBCASE("parallel edges") {
    // Triangle with a doubled side: 5 trees, 2 contain a specific copy.
    const auto g = build_graph({{0, 1, 1}, {0, 1, 1}, {1, 2, 1}, {0, 2, 1}}, false);
    const auto r = spanning_tree_ratio(g, 0);
    CHECK(r.trees == 5);
    CHECK(r.trees_with_edge == 2);
  }
  CHECK_THROWS_AS(spanning_tree_ratio(build_graph({{0, 1, 1}, {2, 3, 1}}, false), 0), InvalidInput);
  CHECK_THROWS_AS(spanning_tree_ratio(gen::path(13), 0), OracleLimit);
}

TEST_CASE("resistance equals the spanning-tree ratio on small graphs") {
  Rng rng(22);
  for (int trial = 0; trial < 40; ++trial) {
    gen::RandomGraphOptions opt;
    opt.nodes = 2 + rng.below(7);
    opt.edges = opt.nodes - 1 + rng.below(2 * opt.nodes);
    opt.connected = true;
    opt.simple = trial % 3 != 0;
    const auto g = gen::random_graph(opt, rng);
    const auto r = effective_resistance_all(g);
    for (EdgeId e = 0; e < g.edge_count(); ++e)
      CHECK(std::abs(r[e] - spanning_tree_ratio(g, e).ratio) <= 1e-6);
  }
}

TEST_CASE("lambda2") {
  CHECK(lambda2(p2()) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(lambda2(gen::complete(3)) == doctest::Approx(1.5).epsilon(1e-12));
  CHECK(lambda2(gen::cycle(4)) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK_THROWS_AS(lambda2(build_graph({{0, 1, 1}, {2, 3, 1}}, false)), InvalidInput);
}

TEST_CASE("resistance bounds") {
  SUBCASE("K3 upper bounds are tight") {
    const auto b = resistance_bounds(gen::complete(3), 0);
    CHECK(b.lower == doctest::Approx(0.5));
    CHECK(b.upper_lovasz == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
    CHECK(b.upper_triangle == doctest::Approx(2.0 / 3.0));
  }
  SUBCASE("P2 collapses") {
    const auto b = resistance_bounds(p2(), 0);
    CHECK(b.lower == doctest::Approx(1.0));
    CHECK(b.upper_lovasz == doctest::Approx(1.0).epsilon(1e-12));
  }
  SUBCASE("C4") {
    const auto b = resistance_bounds(gen::cycle(4), 0);
    CHECK(b.lower == doctest::Approx(0.5));
    CHECK(b.upper_lovasz == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(b.upper_triangle == doctest::Approx(1.0));
  }
  SUBCASE("sandwich on random connected graphs") {
    Rng rng(23);
    for (int trial = 0; trial < 30; ++trial) {
      gen::RandomGraphOptions opt;
      opt.nodes = 2 + rng.below(20);
      opt.edges = opt.nodes - 1 + rng.below(3 * opt.nodes);
      opt.connected = true;
      const auto g = gen::random_graph(opt, rng);
      const auto r = effective_resistance_all(g);
      const auto b = resistance_bounds_all(g);
      for (EdgeId e = 0; e < g.edge_count(); ++e) {
        CHECK(b[e].lower <= r[e] + 1e-9);
        CHECK(r[e] <= std::min(b[e].upper_lovasz, b[e].upper_triangle) + 1e-9);
      }
    }
  }
  CHECK_THROWS_AS(resistance_bounds(build_graph({{0, 1, 1}, {0, 1, 1}}, false), 0), InvalidInput);
}
