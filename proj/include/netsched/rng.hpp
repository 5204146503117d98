#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include <Eigen/Dense>

namespace netsched::rng {

/// One splitmix64 step; advances the state and returns the next word.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

/// Hashes a key tuple into a stream seed. Order-sensitive.
inline std::uint64_t mix(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0,
                         std::uint64_t c = 0, std::uint64_t d = 0) {
  std::uint64_t s = seed;
  for (std::uint64_t w : {a, b, c, d}) {
    s ^= splitmix64(w) + 0x9E3779B97F4A7C15ull + (s << 6) + (s >> 2);
    splitmix64(s);
  }
  return s;
}

/// Counter-based substream: draws are a pure function of (key, counter), so
/// per-(run, plant, time, source) streams never interleave no matter how the
/// surrounding loops are scheduled.
class Substream {
 public:
  explicit Substream(std::uint64_t key) : key_(key) {}
  Substream(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0, std::uint64_t c = 0,
            std::uint64_t d = 0)
      : key_(mix(seed, a, b, c, d)) {}

  std::uint64_t next_u64() {
    std::uint64_t s = key_ + 0xD1B54A32D192ED03ull * (++counter_);
    return splitmix64(s);
  }

  /// Uniform double strictly inside (0, 1).
  double next_unit() {
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
  }

  /// Standard normal via Box-Muller; one value per call, pairs cached.
  double next_gaussian() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const double u1 = next_unit();
    const double u2 = next_unit();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * M_PI * u2;
    spare_ = r * std::sin(theta);
    have_spare_ = true;
    return r * std::cos(theta);
  }

  void fill_gaussian(Eigen::Ref<Eigen::VectorXd> out) {
    for (Eigen::Index i = 0; i < out.size(); ++i) out[i] = next_gaussian();
  }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

/// Unbiased uniform draw from {0, ..., n-1} by rejection sampling.
inline std::uint64_t uniform_below(std::mt19937_64& engine, std::uint64_t n) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % n;
  std::uint64_t x;
  do {
    x = engine();
  } while (x >= limit);
  return x % n;
}

}  // namespace netsched::rng
