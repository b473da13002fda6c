#include "fifogap/rng.hpp"

#include <cmath>
#include <numbers>

namespace fifogap {

std::uint64_t RandomStream::uniform_below(std::uint64_t bound) {
  // Largest multiple of bound representable in [0, 2^64); reject above it.
  const std::uint64_t limit = -bound % bound;  // == 2^64 mod bound
  for (;;) {
    const std::uint64_t r = engine_();
    if (r >= limit) return r % bound;
  }
}

double RandomStream::standard_normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  const double u1 = uniform_open01();
  const double u2 = uniform01();
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  spare_ = radius * std::sin(angle);
  has_spare_ = true;
  return radius * std::cos(angle);
}

}  // namespace fifogap
