#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace ane {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Deterministic random stream. The engine is mt19937_64 (bit-stable across
// platforms); all distributions are implemented here instead of <random>'s,
// whose outputs are implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(splitmix64(seed)) {}

  // Independent stream derived from (seed, a, b). Used to make parallel
  // units (per-node walks, per-repeat evals) independent of thread count.
  static Rng derived(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0) {
    std::uint64_t s = splitmix64(seed);
    s = splitmix64(s ^ (0x9e3779b97f4a7c15ULL + a));
    s = splitmix64(s ^ (0xc2b2ae3d27d4eb4fULL + b));
    return Rng(s);
  }

  std::uint64_t u64() { return engine_(); }

  // Uniform integer in [0, n). Rejection sampling, no modulo bias.
  std::uint64_t uniform_u64(std::uint64_t n) {
    const std::uint64_t limit = n * ((~std::uint64_t{0}) / n);
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % n;
  }

  std::size_t index(std::size_t n) { return static_cast<std::size_t>(uniform_u64(n)); }

  // Uniform double in [0, 1).
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  // Uniform double in (0, 1]; safe as a log() argument.
  double uniform_pos() { return static_cast<double>((engine_() >> 11) + 1) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  bool bernoulli(double p) { return uniform() < p; }

  // Box-Muller, one value per two draws.
  double normal(double mean, double stddev) {
    const double u1 = uniform_pos();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    return mean + stddev * r * std::cos(2.0 * 3.14159265358979323846 * u2);
  }

  // Fisher-Yates. std::shuffle is implementation-defined, this is not.
  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::swap(v[i - 1], v[index(i)]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace ane
