#ifndef FAIRAGG_CLI_HPP_
#define FAIRAGG_CLI_HPP_

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "fairagg/axiom_harness.hpp"
#include "fairagg/rules.hpp"

namespace fairagg {

// Exit codes of every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitError = 2;

inline constexpr std::uint64_t kDefaultSeed = GeneratorConfig{}.seed;

// args[0] is the program name. Diagnostics go to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// The six counterexample rules in the order indifference, leximin, parity,
// max_weight, belief-weighted utilitarian, nash, each paired with the axiom
// it is designed to violate.
struct Counterexample {
  AggregationRule rule;
  Axiom axiom;
};
std::vector<Counterexample> counterexample_rules();

struct GalleryOptions {
  std::uint64_t seed = kDefaultSeed;
  std::size_t trials = 1000;
  std::size_t samples = 10000;  // property matrix samples
};

// Writes the gallery files into dir and returns their names.
std::vector<std::string> write_gallery(const std::string& dir, const GalleryOptions& options,
                                       std::ostream& log);

}  // namespace fairagg

#endif  // FAIRAGG_CLI_HPP_
