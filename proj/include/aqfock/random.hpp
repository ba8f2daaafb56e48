#pragma once

#include <cstdint>
#include <random>

#include "aqfock/fock_core.hpp"

namespace aqfock {

/// Default seed for randomized property checks.
inline constexpr std::uint64_t kDefaultSeed = 20240917;

using Rng = std::mt19937_64;

/// Standard complex Gaussian entries (or real ones when `real` is set).
inline Vector random_vector(std::size_t d, Rng& rng, bool real = false) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Vector v(static_cast<Eigen::Index>(d));
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const double re = normal(rng);
    const double im = real ? 0.0 : normal(rng);
    v(i) = cplx(re, im);
  }
  return v;
}

inline FockVector random_fock_vector(std::size_t d, int max_degree, Rng& rng, bool real = false) {
  FockVector f(d, max_degree);
  for (int n = 0; n <= max_degree; ++n) {
    const std::size_t size = upow(d, n);
    f.level(n) = random_vector(size, rng, real);
  }
  return f;
}

inline double random_uniform(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

}  // namespace aqfock
