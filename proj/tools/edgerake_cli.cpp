// edgerake: edge centrality ranking, residual graphs, resistance sparsification
// and randomized invariant checks from the command line.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "edgerake/baselines.hpp"
#include "edgerake/erwr.hpp"
#include "edgerake/error.hpp"
#include "edgerake/io.hpp"
#include "edgerake/kernels.hpp"
#include "edgerake/spectral.hpp"
#include "edgerake/sparsifier.hpp"
#include "edgerake/verify.hpp"

namespace {

using namespace edgerake;

struct MeasureArgs {
  std::string measure = "erk";
  double alpha = erwr::kDefaultAlpha;
  double epsilon = erwr::kDefaultEpsilon;
  std::optional<std::uint64_t> iters;
};

void add_measure_options(CLI::App* cmd, MeasureArgs& a) {
  cmd->add_option("--measure", a.measure,
                  "erk (EdgeRAKE), ep, ek, gtom, eb (ordered pairs), er, bdrc")
      ->check(CLI::IsMember({"erk", "ep", "ek", "gtom", "eb", "er", "bdrc"}));
  cmd->add_option("--alpha", a.alpha, "jump probability for erk/ep/ek")->capture_default_str();
  auto* eps = cmd->add_option("--epsilon", a.epsilon, "erk accuracy target")->capture_default_str();
  auto* it = cmd->add_option("--iters", a.iters, "erk/ep/ek iteration count (overrides --epsilon)");
  eps->excludes(it);
}

CentralityVector compute(const Graph& g, const MeasureArgs& a) {
  switch (*parse_measure(a.measure)) {
    case Measure::EdgeRake: {
      const auto t = a.iters ? *a.iters
                             : std::min(erwr::iterations_for_epsilon(a.alpha, a.epsilon),
                                        erwr::kIterationCap);
      auto c = erwr::edgerake_approx(g, a.alpha, t);
      if (!a.iters) c.params.epsilon = a.epsilon;
      return c;
    }
    case Measure::EdgePageRank:
      return baselines::edge_pagerank(g, a.alpha, a.iters.value_or(baselines::kDefaultMaxIters));
    case Measure::EdgeKatz:
      return baselines::edge_katz(g, a.alpha, a.iters.value_or(baselines::kDefaultMaxIters));
    case Measure::Gtom: return baselines::gtom(g);
    case Measure::EdgeBetweenness: return baselines::edge_betweenness(g);
    case Measure::EffectiveResistance: return baselines::effective_resistance_centrality(g);
    case Measure::Bdrc: return baselines::bdrc(g);
  }
  throw InvalidInput("unknown measure");
}

// Writes to `path`, or stdout when empty or "-".
template <typename Fn>
void with_output(const std::string& path, Fn&& fn) {
  if (path.empty() || path == "-") {
    fn(std::cout);
    std::cout.flush();
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw InvalidInput("cannot open '" + path + "' for writing");
  fn(f);
  if (!f) throw InvalidInput("write to '" + path + "' failed");
}

io::ParsedGraph load(const std::string& path, bool directed) {
  if (path.empty() || path == "-") return io::parse_edge_list(std::cin, directed);
  return io::parse_edge_list_file(path, directed);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Edge centrality (EdgeRAKE and baselines), residual graphs and sparsification"};
  app.require_subcommand(1);
  std::string simd = "auto";
  app.add_option("--simd", simd, "kernel variant: auto, scalar, avx2, neon")
      ->check(CLI::IsMember({"auto", "scalar", "avx2", "neon"}));

  std::string input, output;
  bool directed = false;
  auto add_io = [&](CLI::App* cmd) {
    cmd->add_option("--input,-i", input, "edge list (`tail head [weight]`), '-' for stdin");
    cmd->add_option("--output,-o", output, "output path, stdout by default");
    cmd->add_flag("--directed", directed, "treat edges as directed arcs");
  };

  MeasureArgs rank_args;
  auto* rank = app.add_subcommand("rank", "score every edge and write a rankings CSV");
  add_io(rank);
  add_measure_options(rank, rank_args);

  MeasureArgs res_args;
  std::string scores_path;
  double rho = 0.0;
  std::string order = "asc";
  auto* residual = app.add_subcommand("residual", "remove the first floor(m*rho) edges by score");
  add_io(residual);
  add_measure_options(residual, res_args);
  residual->add_option("--scores", scores_path, "rankings CSV produced by `rank`");
  residual->add_option("--rho", rho, "fraction of edges to remove")->required()->check(CLI::Range(0.0, 1.0));
  residual->add_option("--order", order, "asc removes lowest scores first")
      ->check(CLI::IsMember({"asc", "desc"}))
      ->capture_default_str();

  std::uint64_t ns = 0, seed = 0;
  bool paper_weights = false;
  auto* sparsify = app.add_subcommand("sparsify", "effective-resistance edge sampling");
  add_io(sparsify);
  sparsify->add_option("--ns", ns, "number of draws")->required();
  sparsify->add_option("--seed", seed, "RNG seed")->capture_default_str();
  sparsify->add_flag("--paper-weights", paper_weights,
                     "weight sampled edges by counts/n_s * r/(n-1) instead of the unbiased estimator");

  bool bounds = false;
  auto* resistance = app.add_subcommand("resistance", "per-edge effective resistance");
  add_io(resistance);
  resistance->add_flag("--bounds", bounds, "also emit lower, Lovasz upper and triangle upper bounds");

  std::string suite;
  verify::Config vcfg;
  auto* verify_cmd = app.add_subcommand("verify", "random-graph invariant runner");
  verify_cmd->add_option("--suite", suite, "lemma2, lemma3, theorem, foster, qmatrix, balance")
      ->required()
      ->check(CLI::IsMember({"lemma2", "lemma3", "theorem", "foster", "qmatrix", "balance"}));
  verify_cmd->add_option("--n", vcfg.max_nodes, "maximum node count")->capture_default_str();
  verify_cmd->add_option("--trials", vcfg.trials, "number of random graphs")->capture_default_str();
  verify_cmd->add_option("--seed", vcfg.seed, "RNG seed")->capture_default_str();
  verify_cmd->add_option("--alpha", vcfg.alpha, "jump probability")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // Help and version requests exit 0; usage errors share the input-error status.
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (simd == "scalar") kernels::select(kernels::Isa::Scalar);
    else if (simd == "avx2") kernels::select(kernels::Isa::Avx2);
    else if (simd == "neon") kernels::select(kernels::Isa::Neon);

    if (rank->parsed()) {
      const auto pg = load(input, directed);
      const auto c = compute(pg.graph, rank_args);
      with_output(output, [&](std::ostream& os) { io::write_rankings(pg.graph, pg.doc.node_labels, c, os); });
    } else if (residual->parsed()) {
      const auto pg = load(input, directed);
      CentralityVector c;
      if (!scores_path.empty()) {
        std::ifstream f(scores_path);
        if (!f) throw InvalidInput("cannot open '" + scores_path + "'");
        c.scores = io::read_ranking_scores(f, pg.graph.edge_count());
      } else {
        c = compute(pg.graph, res_args);
      }
      const auto g = io::residual_graph(pg.graph, c, rho,
                                        order == "asc" ? io::RemovalOrder::Ascending
                                                       : io::RemovalOrder::Descending);
      with_output(output, [&](std::ostream& os) { io::write_edge_list(g, pg.doc.node_labels, os); });
    } else if (sparsify->parsed()) {
      const auto pg = load(input, directed);
      const auto s = sparsifier::sparsify(pg.graph, ns, seed,
                                          paper_weights ? sparsifier::WeightRule::Literal
                                                        : sparsifier::WeightRule::Unbiased);
      const auto g = sparsifier::sparsified_graph(pg.graph, s);
      with_output(output, [&](std::ostream& os) { io::write_edge_list(g, pg.doc.node_labels, os); });
    } else if (resistance->parsed()) {
      const auto pg = load(input, directed);
      const auto& g = pg.graph;
      const auto r = spectral::effective_resistance_all(g);
      std::vector<spectral::ResistanceBounds> b;
      if (bounds) b = spectral::resistance_bounds_all(g);
      const auto& labels = pg.doc.node_labels;
      with_output(output, [&](std::ostream& os) {
        os << "edge_id,tail,head,resistance";
        if (bounds) os << ",lower,upper_lovasz,upper_triangle";
        os << '\n';
        for (EdgeId e = 0; e < g.edge_count(); ++e) {
          const auto& ed = g.edge(e);
          os << e << ',' << labels[ed.tail] << ',' << labels[ed.head] << ',' << io::format_score(r[e]);
          if (bounds)
            os << ',' << io::format_score(b[e].lower) << ',' << io::format_score(b[e].upper_lovasz)
               << ',' << io::format_score(b[e].upper_triangle);
          os << '\n';
        }
      });
    } else if (verify_cmd->parsed()) {
      const auto rep = verify::run(*verify::parse_suite(suite), vcfg);
      std::cout << "suite " << suite << ": " << rep.graphs << " graphs, " << rep.checks
                << " checks, " << rep.violations << " violations ("
                << kernels::name(kernels::active().isa) << " kernels)\n";
      for (const auto& f : rep.failures) std::cout << "  FAIL " << f << '\n';
      return rep.ok() ? 0 : 1;
    }
  } catch (const io::ParseError& e) {
    std::cerr << "edgerake: parse error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "edgerake: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
