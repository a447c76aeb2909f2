#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "edgerake/centrality.hpp"
#include "edgerake/graph.hpp"

namespace edgerake::io {

// Raised for malformed input text; carries the 1-based line number.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

struct LabeledTriple {
  std::string tail;
  std::string head;
  std::optional<double> weight;
};

struct EdgeListDocument {
  std::vector<std::string> node_labels;  // first-seen order; index = node id
  std::vector<LabeledTriple> triples;
  bool directed = false;
};

struct ParsedGraph {
  EdgeListDocument doc;
  Graph graph;
};

// `<tail> <head> [<weight>]` per line; blank lines and lines starting with
// '#' or '%' are skipped. Missing weights default to 1.
ParsedGraph parse_edge_list(std::istream& in, bool directed);
ParsedGraph parse_edge_list_file(const std::string& path, bool directed);

// Writes `tail head weight` lines using `labels` (node id when empty).
// Weights use the shortest round-trip decimal form.
void write_edge_list(const Graph& g, const std::vector<std::string>& labels, std::ostream& out);

enum class RemovalOrder { Ascending, Descending };

// Edge ids that survive removing floor(m * rho) edges from the front of the
// score order (ties: lower edge id first), in original order.
std::vector<EdgeId> residual_edges(const std::vector<double>& scores, double rho, RemovalOrder order);

// Same nodes, surviving edges in original order.
Graph residual_graph(const Graph& g, const CentralityVector& scores, double rho, RemovalOrder order);

// CSV `edge_id,tail,head,weight,score,rank`, rows by rank then edge id.
// Scores use 12 significant digits; rank 1 is the highest score and equal
// printed scores share the smaller rank.
void write_rankings(const Graph& g, const std::vector<std::string>& labels,
                    const CentralityVector& scores, std::ostream& out);

// Reads the `score` column of a rankings CSV back into edge order.
std::vector<double> read_ranking_scores(std::istream& in, std::size_t edge_count);

std::string format_score(double v);
std::string format_weight(double v);

}  // namespace edgerake::io
