#include "edgerake/centrality.hpp"

#include <array>
#include <utility>

namespace edgerake {

namespace {

constexpr std::array<std::pair<Measure, std::string_view>, 7> kNames{{
    {Measure::EdgeRake, "erk"},
    {Measure::EdgePageRank, "ep"},
    {Measure::EdgeKatz, "ek"},
    {Measure::Gtom, "gtom"},
    {Measure::EdgeBetweenness, "eb"},
    {Measure::EffectiveResistance, "er"},
    {Measure::Bdrc, "bdrc"},
}};

}  // namespace

std::string_view measure_name(Measure m) {
  for (const auto& [k, v] : kNames)
    if (k == m) return v;
  return "unknown";
}

std::optional<Measure> parse_measure(std::string_view s) {
  for (const auto& [k, v] : kNames)
    if (v == s) return k;
  return std::nullopt;
}

}  // namespace edgerake
