#include <doctest.h>

#include <algorithm>
#include <sstream>

#include "edgerake/io.hpp"
#include "edgerake/random.hpp"

using namespace edgerake;
using namespace edgerake::io;

namespace {

ParsedGraph parse(const std::string& text, bool directed = false) {
  std::istringstream in(text);
  return parse_edge_list(in, directed);
}

std::size_t error_line(const std::string& text) {
  try {
    parse(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

CentralityVector scores_of(std::vector<double> v) {
  CentralityVector c;
  c.scores = std::move(v);
  return c;
}

}  // namespace

TEST_CASE("parse edge lists") {
  const auto p = parse("# comment\n% other\n\na b\nb c 2.5\n  c a 1e-1  \n");
  CHECK(p.graph.node_count() == 3);
  CHECK(p.graph.edge_count() == 3);
  CHECK(p.doc.node_labels == std::vector<std::string>{"a", "b", "c"});
  CHECK(p.graph.edge(0).weight == 1.0);
  CHECK(p.graph.edge(1).weight == 2.5);
  CHECK(p.graph.edge(2).weight == doctest::Approx(0.1));
  CHECK(!p.doc.triples[0].weight);
  CHECK(!p.graph.directed());
  CHECK(parse("0 1\n", true).graph.directed());
}

TEST_CASE("parse errors carry line numbers") {
  CHECK(error_line("0 1\n1\n") == 2);
  CHECK(error_line("0 1\n1 2 3 4\n") == 2);
  CHECK(error_line("0 1 x\n") == 1);
  CHECK(error_line("0 1\n\n1 2 -1\n") == 3);
  CHECK(error_line("0 1 0\n") == 1);
  CHECK(error_line("0 1 nan\n") == 1);
  CHECK(error_line("0 1\n2 2\n") == 2);
  CHECK(error_line("0 1\n1 2\n") == 0);
}

TEST_CASE("write then parse round-trips") {
  Rng rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    gen::RandomGraphOptions opt;
    opt.nodes = 2 + rng.below(20);
    opt.edges = 1 + rng.below(40);
    opt.directed = trial % 2 == 0;
    opt.weighted = true;
    opt.simple = false;
    const auto g = gen::random_graph(opt, rng);
    std::ostringstream out;
    write_edge_list(g, {}, out);
    std::istringstream in(out.str());
    const auto back = parse_edge_list(in, g.directed());
    REQUIRE(back.graph.edge_count() == g.edge_count());
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      const auto& a = g.edge(e);
      const auto& b = back.graph.edge(e);
      CHECK(back.doc.node_labels[b.tail] == std::to_string(a.tail));
      CHECK(back.doc.node_labels[b.head] == std::to_string(a.head));
      CHECK(b.weight == a.weight);
    }
  }
}

TEST_CASE("residual edges") {
  const std::vector<double> s{3, 1, 2, 1};
  CHECK(residual_edges(s, 0.5, RemovalOrder::Descending) == std::vector<EdgeId>{1, 3});
  CHECK(residual_edges(s, 0.5, RemovalOrder::Ascending) == std::vector<EdgeId>{0, 2});
  // Tie between edges 1 and 3: the lower id goes first.
  CHECK(residual_edges(s, 0.25, RemovalOrder::Ascending) == std::vector<EdgeId>{0, 2, 3});
  CHECK(residual_edges(s, 0.0, RemovalOrder::Ascending).size() == 4);
  CHECK(residual_edges(s, 1.0, RemovalOrder::Ascending).empty());
  CHECK(residual_edges(s, 0.7, RemovalOrder::Ascending).size() == 2);  // floor(2.8)
  CHECK_THROWS(residual_edges(s, -0.1, RemovalOrder::Ascending));
  CHECK_THROWS(residual_edges(s, 1.5, RemovalOrder::Ascending));

  Rng rng(6);
  std::vector<double> r(50);
  for (auto& v : r) v = static_cast<double>(rng.below(10));
  for (double a = 0.0; a < 0.9; a += 0.1) {
    const auto big = residual_edges(r, a, RemovalOrder::Descending);
    const auto small = residual_edges(r, a + 0.1, RemovalOrder::Descending);
    CHECK(std::includes(big.begin(), big.end(), small.begin(), small.end()));
  }
}

TEST_CASE("residual graph keeps every node") {
  const auto g = gen::path(4);
  const auto h = residual_graph(g, scores_of({1, 5, 1}), 0.34, RemovalOrder::Descending);
  CHECK(h.node_count() == 4);
  REQUIRE(h.edge_count() == 2);
  CHECK(h.edge(0).tail == 0);
  CHECK(h.edge(1).tail == 2);
}

TEST_CASE("rankings CSV") {
  const auto g = gen::complete(3);
  std::ostringstream out;
  write_rankings(g, {}, scores_of({0.5, 0.5, 0.5}), out);
  CHECK(out.str() ==
        "edge_id,tail,head,weight,score,rank\n"
        "0,0,1,1,0.5,1\n"
        "1,0,2,1,0.5,1\n"
        "2,1,2,1,0.5,1\n");

  std::ostringstream out2;
  write_rankings(gen::path(4), {"a", "b", "c", "d"}, scores_of({0.25, 1.0 / 3, 0.25}), out2);
  CHECK(out2.str() ==
        "edge_id,tail,head,weight,score,rank\n"
        "1,b,c,1,0.333333333333,1\n"
        "0,a,b,1,0.25,2\n"
        "2,c,d,1,0.25,2\n");

  std::istringstream in(out2.str());
  const auto back = read_ranking_scores(in, 3);
  CHECK(back[0] == 0.25);
  CHECK(back[1] == doctest::Approx(1.0 / 3).epsilon(1e-11));
  CHECK(back[2] == 0.25);
}

TEST_CASE("number formatting") {
  CHECK(format_weight(1.0) == "1");
  CHECK(format_weight(0.1) == "0.1");
  CHECK(format_score(1.0 / 3) == "0.333333333333");
  CHECK(format_score(2.0) == "2");
}
