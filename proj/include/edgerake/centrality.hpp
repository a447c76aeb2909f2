#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace edgerake {

enum class Measure { EdgeRake, EdgePageRank, EdgeKatz, Gtom, EdgeBetweenness, EffectiveResistance, Bdrc };

// CLI spelling: erk, ep, ek, gtom, eb, er, bdrc.
std::string_view measure_name(Measure m);
std::optional<Measure> parse_measure(std::string_view s);

struct CentralityParams {
  std::optional<double> alpha;
  std::optional<std::uint64_t> iterations;  // iterations requested or performed
  std::optional<double> epsilon;
  std::optional<std::uint64_t> seed;
};

// Per-edge scores in graph edge order.
struct CentralityVector {
  std::vector<double> scores;
  Measure measure = Measure::EdgeRake;
  CentralityParams params;
};

}  // namespace edgerake
