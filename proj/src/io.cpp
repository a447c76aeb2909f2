#include "edgerake/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <unordered_map>

#include "edgerake/error.hpp"

namespace edgerake::io {

ParseError::ParseError(std::size_t line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

namespace {

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    const auto start = i;
    while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    if (i > start) out.push_back(s.substr(start, i - start));
  }
  return out;
}

std::optional<double> parse_double(std::string_view s) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

}  // namespace

ParsedGraph parse_edge_list(std::istream& in, bool directed) {
  ParsedGraph out;
  out.doc.directed = directed;
  std::unordered_map<std::string, NodeId> index;
  std::vector<Edge> edges;
  auto intern = [&](std::string_view label) {
    auto [it, fresh] = index.try_emplace(std::string(label), static_cast<NodeId>(index.size()));
    if (fresh) out.doc.node_labels.emplace_back(label);
    return it->second;
  };

  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto tok = split_ws(line);
    if (tok.empty() || tok[0].front() == '#' || tok[0].front() == '%') continue;
    if (tok.size() < 2) throw ParseError(lineno, "expected `<tail> <head> [<weight>]`");
    if (tok.size() > 3) throw ParseError(lineno, "too many fields");
    LabeledTriple t{std::string(tok[0]), std::string(tok[1]), std::nullopt};
    double w = 1.0;
    if (tok.size() == 3) {
      const auto v = parse_double(tok[2]);
      if (!v) throw ParseError(lineno, "weight '" + std::string(tok[2]) + "' is not a number");
      if (!(*v > 0.0) || !std::isfinite(*v))
        throw ParseError(lineno, "weight must be positive and finite");
      w = *v;
      t.weight = w;
    }
    if (t.tail == t.head) throw ParseError(lineno, "self-loop on '" + t.tail + "'");
    const NodeId a = intern(tok[0]);
    const NodeId b = intern(tok[1]);
    edges.push_back({a, b, w});
    out.doc.triples.push_back(std::move(t));
  }
  if (in.bad()) throw ParseError(lineno, "read failure");
  out.graph = build_graph(std::move(edges), directed, out.doc.node_labels.size());
  return out;
}

ParsedGraph parse_edge_list_file(const std::string& path, bool directed) {
  std::ifstream f(path);
  if (!f) throw InvalidInput("cannot open '" + path + "'");
  return parse_edge_list(f, directed);
}

std::string format_score(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string format_weight(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

void write_edge_list(const Graph& g, const std::vector<std::string>& labels, std::ostream& out) {
  auto label = [&](NodeId v) { return v < labels.size() ? labels[v] : std::to_string(v); };
  for (const auto& e : g.edges())
    out << label(e.tail) << ' ' << label(e.head) << ' ' << format_weight(e.weight) << '\n';
  if (!out) throw InvalidInput("write failure");
}

std::vector<EdgeId> residual_edges(const std::vector<double>& scores, double rho,
                                   RemovalOrder order) {
  if (!(rho >= 0.0 && rho <= 1.0)) throw InvalidInput("rho must lie in [0, 1]");
  const auto m = scores.size();
  std::vector<EdgeId> ids(m);
  std::iota(ids.begin(), ids.end(), EdgeId{0});
  std::stable_sort(ids.begin(), ids.end(), [&](EdgeId a, EdgeId b) {
    return order == RemovalOrder::Ascending ? scores[a] < scores[b] : scores[a] > scores[b];
  });
  const auto drop = static_cast<std::size_t>(std::floor(static_cast<double>(m) * rho));
  std::vector<bool> removed(m, false);
  for (std::size_t i = 0; i < drop; ++i) removed[ids[i]] = true;
  std::vector<EdgeId> kept;
  kept.reserve(m - drop);
  for (EdgeId e = 0; e < m; ++e)
    if (!removed[e]) kept.push_back(e);
  return kept;
}

Graph residual_graph(const Graph& g, const CentralityVector& scores, double rho,
                     RemovalOrder order) {
  if (scores.scores.size() != g.edge_count())
    throw InvalidInput("residual_graph: expected one score per edge");
  std::vector<Edge> kept;
  for (EdgeId e : residual_edges(scores.scores, rho, order)) kept.push_back(g.edge(e));
  return build_graph(std::move(kept), g.directed(), g.node_count());
}

void write_rankings(const Graph& g, const std::vector<std::string>& labels,
                    const CentralityVector& scores, std::ostream& out) {
  const auto m = g.edge_count();
  if (scores.scores.size() != m) throw InvalidInput("write_rankings: expected one score per edge");
  std::vector<std::string> text(m);
  std::vector<double> shown(m);
  for (EdgeId e = 0; e < m; ++e) {
    text[e] = format_score(scores.scores[e]);
    shown[e] = std::strtod(text[e].c_str(), nullptr);
  }
  std::vector<EdgeId> ids(m);
  std::iota(ids.begin(), ids.end(), EdgeId{0});
  std::stable_sort(ids.begin(), ids.end(), [&](EdgeId a, EdgeId b) { return shown[a] > shown[b]; });

  auto label = [&](NodeId v) { return v < labels.size() ? labels[v] : std::to_string(v); };
  out << "edge_id,tail,head,weight,score,rank\n";
  std::size_t rank = 0;
  for (std::size_t i = 0; i < m; ++i) {
    const EdgeId e = ids[i];
    if (i == 0 || shown[e] != shown[ids[i - 1]]) rank = i + 1;
    const auto& ed = g.edge(e);
    out << e << ',' << label(ed.tail) << ',' << label(ed.head) << ',' << format_weight(ed.weight)
        << ',' << text[e] << ',' << rank << '\n';
  }
  if (!out) throw InvalidInput("write failure");
}

std::vector<double> read_ranking_scores(std::istream& in, std::size_t edge_count) {
  std::string line;
  if (!std::getline(in, line)) throw ParseError(1, "missing rankings header");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "edge_id,tail,head,weight,score,rank")
    throw ParseError(1, "unexpected rankings header '" + line + "'");
  std::vector<double> scores(edge_count, 0.0);
  std::vector<bool> seen(edge_count, false);
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<std::string> f;
    std::stringstream ss(line);
    for (std::string cell; std::getline(ss, cell, ',');) f.push_back(cell);
    if (f.size() != 6) throw ParseError(lineno, "expected 6 columns");
    std::size_t id = 0;
    const auto [p, ec] = std::from_chars(f[0].data(), f[0].data() + f[0].size(), id);
    if (ec != std::errc() || p != f[0].data() + f[0].size() || id >= edge_count)
      throw ParseError(lineno, "bad edge_id '" + f[0] + "'");
    const auto v = parse_double(f[4]);
    if (!v) throw ParseError(lineno, "bad score '" + f[4] + "'");
    if (seen[id]) throw ParseError(lineno, "duplicate edge_id " + f[0]);
    seen[id] = true;
    scores[id] = *v;
  }
  for (std::size_t e = 0; e < edge_count; ++e)
    if (!seen[e]) throw ParseError(lineno, "no score for edge " + std::to_string(e));
  return scores;
}

}  // namespace edgerake::io
