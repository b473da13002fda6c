#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>

namespace fifogap {

/// splitmix64 finalizer: a bijective 64-bit avalanche mix.
constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Folds a tuple of keys into one seed:
///   h0 = splitmix64(master), h_{i+1} = splitmix64(h_i ^ splitmix64(key_i)).
constexpr std::uint64_t derive_seed(std::uint64_t master,
                                    std::initializer_list<std::uint64_t> keys) {
  std::uint64_t h = splitmix64(master);
  for (std::uint64_t k : keys) h = splitmix64(h ^ splitmix64(k));
  return h;
}

/// Seeded random stream. All derived variates are computed from the raw
/// mt19937_64 output with fixed formulas, so sequences are identical on every
/// platform for the same seed (std:: distributions do not guarantee this).
/// Not thread-safe; each stream has exactly one owner.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform on [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Uniform on the open interval (0, 1); safe to pass to log or pow.
  double uniform_open01() {
    return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
  }

  /// Unbiased integer in [0, bound) by rejection; bound must be > 0.
  std::uint64_t uniform_below(std::uint64_t bound);

  /// Standard normal via Box–Muller; the second variate is cached.
  double standard_normal();

 private:
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace fifogap
