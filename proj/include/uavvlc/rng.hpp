#ifndef UAVVLC_RNG_HPP
#define UAVVLC_RNG_HPP

#include <algorithm>
#include <cstdint>
#include <random>
#include <span>

namespace uavvlc {

/// Seeded pseudo-random stream. Identical seeds give identical streams.
/// Not thread-safe; give each thread its own instance.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  std::uint64_t seed() const { return seed_; }

  /// Uniform index in [0, n).
  std::size_t index(std::size_t n) {
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(engine_);
  }

  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(engine_);
  }

  template <typename T>
  void shuffle(std::span<T> values) {
    std::shuffle(values.begin(), values.end(), engine_);
  }

  std::mt19937_64& engine() { return engine_; }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

}  // namespace uavvlc

#endif  // UAVVLC_RNG_HPP
