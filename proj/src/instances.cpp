#include "cardqubo/instances.hpp"

#include <vector>

#include "cardqubo/rng.hpp"

namespace cardqubo {
namespace {

std::vector<double> normal_matrix(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<double> g(n * n);
  for (double& v : g) v = rng.normal();
  return g;
}

}  // namespace

SymmetricMatrix gaussian_symmetric(std::size_t n, std::uint64_t seed) {
  SymmetricMatrix a(n);
  const auto r = normal_matrix(n, seed);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) a.set(i, j, (r[i * n + j] + r[j * n + i]) / 2.0);
  return a;
}

SymmetricMatrix psd(std::size_t n, std::uint64_t seed) {
  SymmetricMatrix a(n);
  const auto g = normal_matrix(n, seed);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      double s = 0.0;
      for (std::size_t k = 0; k < n; ++k) s += g[k * n + i] * g[k * n + j];
      a.set(i, j, s / static_cast<double>(n));
    }
  }
  return a;
}

}  // namespace cardqubo
