#pragma once

// Seedable generator with a fixed, portable stream, plus graph families used
// by the verifier and the tests.

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "edgerake/graph.hpp"

namespace edgerake {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }
  // Uniform in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  // Uniform in [0, bound), unbiased (Lemire).
  std::uint64_t below(std::uint64_t bound);
  bool coin(double p = 0.5) { return uniform() < p; }

 private:
  std::mt19937_64 eng_;
};

// Walker/Vose alias table for O(1) categorical draws.
class AliasTable {
 public:
  // Weights must be non-negative with a positive sum.
  explicit AliasTable(std::span<const double> weights);
  std::size_t sample(Rng& rng) const;
  std::size_t size() const { return prob_.size(); }

 private:
  std::vector<double> prob_;
  std::vector<std::uint32_t> alias_;
};

namespace gen {

struct RandomGraphOptions {
  std::size_t nodes = 10;
  std::size_t edges = 20;
  bool directed = false;
  bool weighted = false;
  double min_weight = 0.5;
  double max_weight = 2.0;
  bool simple = true;      // reject parallel edges
  bool connected = false;  // seed with a random spanning tree
  bool no_dangling = false;  // directed: give every node an out-edge
};

// Uniform random edges over the options above. The edge count is clamped to
// what a simple graph can hold.
Graph random_graph(const RandomGraphOptions& opt, Rng& rng);

// Directed graph with in-degree == out-degree everywhere: union of random cycles.
Graph random_balanced_digraph(std::size_t nodes, std::size_t cycles, Rng& rng);

Graph path(std::size_t n);
Graph cycle(std::size_t n);
Graph complete(std::size_t n);
Graph star(std::size_t leaves);
Graph hypercube(std::size_t dim);
// Node i joined to i +- k (mod n) for every k in offsets; regular if 2k != n.
Graph circulant(std::size_t n, std::span<const std::size_t> offsets);

}  // namespace gen

}  // namespace edgerake
