#pragma once
// Deterministic randomness. mt19937_64 is fully specified by the standard;
// the helpers below replace std::uniform_int_distribution / std::shuffle /
// std::sample, whose outputs may differ between standard libraries.

#include <cstdint>
#include <random>
#include <vector>

namespace vantage {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

// Master seed plus counter -> per-task seed.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t counter) {
  return splitmix64(master + 0x9E3779B97F4A7C15ull * (counter + 1));
}

class Prng {
 public:
  explicit Prng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // Unbiased integer in [0, bound) via rejection.
  std::uint64_t below(std::uint64_t bound) {
    if (bound == 0) return 0;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t r = engine_();
    while (r >= limit) r = engine_();
    return r % bound;
  }

  int index(int bound) { return static_cast<int>(below(static_cast<std::uint64_t>(bound))); }

  template <typename T>
  void shuffle(std::vector<T>& values) {
    for (std::size_t i = values.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(below(i));
      std::swap(values[i - 1], values[j]);
    }
  }

  // Uniform sample of `count` distinct elements, in pool order agnostic
  // (result sorted by value for stable output).
  std::vector<int> sample_without_replacement(std::vector<int> pool, int count) {
    if (count >= static_cast<int>(pool.size())) return pool;
    for (int i = 0; i < count; ++i) {
      std::size_t j = static_cast<std::size_t>(i) +
                      static_cast<std::size_t>(below(pool.size() - static_cast<std::size_t>(i)));
      std::swap(pool[static_cast<std::size_t>(i)], pool[j]);
    }
    pool.resize(static_cast<std::size_t>(count));
    return pool;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace vantage
