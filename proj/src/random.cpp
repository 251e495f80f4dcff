#include "fairagg/random.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace fairagg {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream, std::uint64_t index) {
  return splitmix64(splitmix64(splitmix64(base) ^ stream) + index);
}

std::size_t Rng::index(std::size_t n) {
  // Rejection keeps the draw unbiased.
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return static_cast<std::size_t>(x % n);
}

std::vector<double> Rng::dirichlet(std::size_t k) {
  std::vector<double> out(k);
  double total = 0.0;
  for (auto& v : out) {
    v = -std::log1p(-uniform());
    total += v;
  }
  if (!(total > 0.0)) {
    std::fill(out.begin(), out.end(), 1.0 / static_cast<double>(k));
    return out;
  }
  for (auto& v : out) v /= total;
  return out;
}

std::vector<std::size_t> Rng::permutation(std::size_t n) {
  std::vector<std::size_t> out(n);
  std::iota(out.begin(), out.end(), 0);
  for (std::size_t i = n; i > 1; --i) std::swap(out[i - 1], out[index(i)]);
  return out;
}

std::vector<std::size_t> Rng::subset(std::size_t n, std::size_t k) {
  auto perm = permutation(n);
  perm.resize(std::min(k, n));
  std::sort(perm.begin(), perm.end());
  return perm;
}

}  // namespace fairagg
