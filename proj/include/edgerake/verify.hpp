#pragma once

// Randomized invariant runner behind `edgerake verify`.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace edgerake::verify {

enum class Suite { Lemma2, Lemma3, Theorem, Foster, QMatrix, Balance };

std::optional<Suite> parse_suite(std::string_view s);
std::string_view suite_name(Suite s);

struct Config {
  std::size_t max_nodes = 30;
  std::size_t trials = 20;
  std::uint64_t seed = 1;
  double alpha = 0.5;
};

struct Report {
  Suite suite{};
  std::size_t graphs = 0;
  std::size_t checks = 0;
  std::size_t violations = 0;
  double worst = 0.0;  // largest checked quantity
  std::vector<std::string> failures;  // first few, human readable

  bool ok() const { return violations == 0; }
};

Report run(Suite suite, const Config& cfg);

}  // namespace edgerake::verify
