#include "edgerake/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

#include "edgerake/erwr.hpp"
#include "edgerake/random.hpp"
#include "edgerake/spectral.hpp"

namespace edgerake::verify {

namespace {

constexpr std::array<std::pair<Suite, std::string_view>, 6> kSuites{{
    {Suite::Lemma2, "lemma2"},
    {Suite::Lemma3, "lemma3"},
    {Suite::Theorem, "theorem"},
    {Suite::Foster, "foster"},
    {Suite::QMatrix, "qmatrix"},
    {Suite::Balance, "balance"},
}};

class Checker {
 public:
  explicit Checker(Report& r) : r_(r) {}

  // Records one check of `value <= limit`.
  void at_most(double value, double limit, const std::string& what) {
    ++r_.checks;
    const double excess = value - limit;
    r_.worst = std::max(r_.worst, value);
    if (!(excess <= 0.0)) {
      ++r_.violations;
      if (r_.failures.size() < 10) {
        std::ostringstream os;
        os.precision(17);
        os << what << ": " << value << " > " << limit;
        r_.failures.push_back(os.str());
      }
    }
  }

 private:
  Report& r_;
};

std::size_t pick_nodes(Rng& rng, std::size_t max_nodes) {
  return 2 + rng.below(std::max<std::size_t>(max_nodes, 3) - 1);
}

Graph undirected_sample(Rng& rng, std::size_t max_nodes, bool weighted, bool connected) {
  gen::RandomGraphOptions opt;
  opt.nodes = pick_nodes(rng, max_nodes);
  opt.edges = opt.nodes - 1 + rng.below(2 * opt.nodes);
  opt.weighted = weighted;
  opt.connected = connected;
  return gen::random_graph(opt, rng);
}

double max_row_sum_error(const Eigen::MatrixXd& p) {
  return (p.rowwise().sum().array() - 1.0).abs().maxCoeff();
}

void lemma2(const Config& cfg, Rng& rng, Report& r, Checker& c) {
  for (std::size_t t = 0; t < cfg.trials; ++t) {
    gen::RandomGraphOptions opt;
    opt.nodes = pick_nodes(rng, cfg.max_nodes);
    opt.edges = opt.nodes + rng.below(2 * opt.nodes);
    opt.directed = rng.coin();
    opt.weighted = rng.coin();
    opt.no_dangling = true;
    const Graph g = gen::random_graph(opt, rng);
    ++r.graphs;
    if (g.edge_count() == 0) continue;
    const auto p = erwr::dense_transition(g);
    c.at_most(max_row_sum_error(p), 1e-10, "row sum, trial " + std::to_string(t));
    if (!g.directed() && g.unweighted()) {
      const erwr::TransitionOperator op(g);
      const std::vector<double> ones(g.edge_count(), 1.0), zero(g.edge_count(), 0.0);
      const auto col = op.apply(ones, zero, 1.0);
      double err = 0.0;
      for (double v : col) err = std::max(err, std::abs(v - 1.0));
      c.at_most(err, 1e-10, "column sum, trial " + std::to_string(t));
    }
  }
  for (std::size_t t = 0; t < std::max<std::size_t>(cfg.trials / 4, 1); ++t) {
    const Graph g = gen::random_balanced_digraph(pick_nodes(rng, cfg.max_nodes), 1 + rng.below(4), rng);
    ++r.graphs;
    const auto p = erwr::dense_transition(g);
    c.at_most(max_row_sum_error(p), 1e-10, "balanced digraph row sum");
    c.at_most((p.colwise().sum().array() - 1.0).abs().maxCoeff(), 1e-10,
              "balanced digraph column sum");
  }
}

void lemma3(const Config& cfg, Rng& rng, Report& r, Checker& c) {
  for (std::size_t t = 0; t < cfg.trials; ++t) {
    const Graph g = undirected_sample(rng, cfg.max_nodes, rng.coin(), false);
    ++r.graphs;
    if (g.edge_count() == 0) continue;
    const auto exact = erwr::edgerake_exact(g, cfg.alpha).scores;
    double lo = INFINITY, hi = 0.0;
    for (const auto& e : g.edges()) {
      const double s = std::sqrt(g.out_strength(e.tail) + g.out_strength(e.head));
      lo = std::min(lo, s);
      hi = std::max(hi, s);
    }
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      const double w = g.edge(e).weight;
      c.at_most(w / hi - exact[e], 1e-10, "lower range");
      c.at_most(exact[e] - w / lo, 1e-10, "upper range");
    }
  }
}

void theorem(const Config& cfg, Rng& rng, Report& r, Checker& c) {
  for (std::size_t t = 0; t < cfg.trials; ++t) {
    const bool weighted = t % 2 == 1;
    const Graph g = undirected_sample(rng, cfg.max_nodes, weighted, false);
    ++r.graphs;
    if (g.edge_count() == 0) continue;
    const auto exact = erwr::edgerake_exact(g, cfg.alpha).scores;
    double min_s = INFINITY;
    for (const auto& e : g.edges())
      min_s = std::min(min_s, std::sqrt(g.out_strength(e.tail) + g.out_strength(e.head)));
    for (double eps : {1e-2, 1e-4}) {
      const auto approx =
          erwr::edgerake_approx(g, cfg.alpha, erwr::iterations_for_epsilon(cfg.alpha, eps)).scores;
      for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const double gap = exact[e] - approx[e];
        const double bound = weighted ? g.edge(e).weight * eps / min_s : eps / std::sqrt(2.0);
        c.at_most(-gap, 1e-12, "approximation below exact");
        c.at_most(gap, bound + 1e-12, "approximation gap");
      }
    }
  }
}

void foster(const Config& cfg, Rng& rng, Report& r, Checker& c) {
  for (std::size_t t = 0; t < cfg.trials; ++t) {
    const Graph g = undirected_sample(rng, cfg.max_nodes, false, rng.coin());
    ++r.graphs;
    const auto res = spectral::effective_resistance_all(g);
    double sum = 0.0;
    for (double v : res) sum += v;
    const auto comps = connected_components(g).count;
    c.at_most(std::abs(sum - static_cast<double>(g.node_count() - comps)), 1e-8, "Foster sum");
  }
}

void qmatrix(const Config& cfg, Rng& rng, Report& r, Checker& c) {
  for (std::size_t t = 0; t < cfg.trials; ++t) {
    const Graph g = undirected_sample(rng, cfg.max_nodes, false, rng.coin());
    ++r.graphs;
    if (g.edge_count() == 0) continue;
    const auto q = spectral::q_matrix(g);
    const auto res = spectral::effective_resistance_all(g);
    double diag = 0.0;
    for (EdgeId e = 0; e < g.edge_count(); ++e) diag = std::max(diag, std::abs(q(e, e) - res[e]));
    c.at_most(diag, 1e-10, "diag(Q) vs resistance");
    c.at_most((q * q - q).norm(), 1e-8, "idempotence");
    const auto comps = connected_components(g).count;
    c.at_most(std::abs(q.trace() - static_cast<double>(g.node_count() - comps)), 1e-8, "trace");
  }
}

void balance(const Config& cfg, Rng& rng, Report& r, Checker& c) {
  for (std::size_t t = 0; t < cfg.trials; ++t) {
    const Graph g = undirected_sample(rng, cfg.max_nodes, true, false);
    ++r.graphs;
    if (g.edge_count() == 0) continue;
    const auto p = erwr::dense_transition(g);
    const auto m = static_cast<Eigen::Index>(g.edge_count());
    Eigen::VectorXd w(m);
    for (Eigen::Index e = 0; e < m; ++e) w[e] = g.edge(static_cast<EdgeId>(e)).weight;
    Eigen::MatrixXd pl = p;
    for (int l = 1; l <= 4; ++l) {
      const Eigen::MatrixXd flow = w.asDiagonal() * pl;
      double worst = 0.0;
      for (Eigen::Index i = 0; i < m; ++i)
        for (Eigen::Index j = i + 1; j < m; ++j) {
          const double a = flow(i, j), b = flow(j, i);
          const double scale = std::max(std::abs(a), std::abs(b));
          if (scale > 0.0) worst = std::max(worst, std::abs(a - b) / scale);
        }
      c.at_most(worst, 1e-10, "detailed balance, power " + std::to_string(l));
      pl = pl * p;
    }
  }
}

}  // namespace

std::optional<Suite> parse_suite(std::string_view s) {
  for (const auto& [k, v] : kSuites)
    if (v == s) return k;
  return std::nullopt;
}

std::string_view suite_name(Suite s) {
  for (const auto& [k, v] : kSuites)
    if (k == s) return v;
  return "unknown";
}

Report run(Suite suite, const Config& cfg) {
  Report r;
  r.suite = suite;
  Rng rng(cfg.seed);
  Checker c(r);
  switch (suite) {
    case Suite::Lemma2: lemma2(cfg, rng, r, c); break;
    case Suite::Lemma3: lemma3(cfg, rng, r, c); break;
    case Suite::Theorem: theorem(cfg, rng, r, c); break;
    case Suite::Foster: foster(cfg, rng, r, c); break;
    case Suite::QMatrix: qmatrix(cfg, rng, r, c); break;
    case Suite::Balance: balance(cfg, rng, r, c); break;
  }
  return r;
}

}  // namespace edgerake::verify
