#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace hog {

// mt19937_64-backed uniforms built directly from the raw 64-bit stream, so
// sequences do not depend on the standard library's distribution details.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  double log_uniform(double lo, double hi) {
    return std::exp(uniform(std::log(lo), std::log(hi)));
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace hog
