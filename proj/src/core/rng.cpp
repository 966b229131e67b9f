#include "rffmkl/core/rng.hpp"

#include <cmath>
#include <numbers>

namespace rffmkl {

double Rng::normal() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  // 1 - u keeps the argument of log strictly positive.
  const double u1 = 1.0 - uniform01();
  const double u2 = uniform01();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double theta = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(theta);
  have_spare_ = true;
  return r * std::cos(theta);
}

std::uint64_t Rng::below(std::uint64_t n) {
  const std::uint64_t threshold = (0 - n) % n;
  for (;;) {
    const std::uint64_t r = next_u64();
    if (r >= threshold) return r % n;
  }
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a) {
  SplitMix64 sm(master ^ (0x9E3779B97F4A7C15ULL * (a + 1)));
  return sm.next();
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a, std::uint64_t b) {
  SplitMix64 sm(derive_seed(master, a) ^ (0xBF58476D1CE4E5B9ULL * (b + 1)));
  return sm.next();
}

}  // namespace rffmkl
