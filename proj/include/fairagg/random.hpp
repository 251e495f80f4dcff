#ifndef FAIRAGG_RANDOM_HPP_
#define FAIRAGG_RANDOM_HPP_

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

namespace fairagg {

// Deterministic sub-seed for (base seed, stream tag, index).
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream, std::uint64_t index);

// Thin wrapper over mt19937_64. Draws are computed here rather than through
// <random> distributions so streams agree across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  // Uniform on [0, 1).
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  // Uniform on {0, ..., n-1}; n must be positive.
  std::size_t index(std::size_t n);
  bool bernoulli(double p) { return uniform() < p; }
  std::vector<double> dirichlet(std::size_t k);
  std::vector<std::size_t> permutation(std::size_t n);
  // k distinct indices out of n, in increasing order.
  std::vector<std::size_t> subset(std::size_t n, std::size_t k);

 private:
  std::mt19937_64 engine_;
};

}  // namespace fairagg

#endif  // FAIRAGG_RANDOM_HPP_
