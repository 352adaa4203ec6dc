#pragma once

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

namespace tempods {

std::uint64_t fnv1a64(std::string_view s);

/// Stateless mixer used to derive sub-stream seeds; every piece of pipeline
/// randomness is seeded through chains of mix64 calls so that parallel
/// schedules and rerun order cannot change outputs.
std::uint64_t mix64(std::uint64_t a, std::uint64_t b);
std::uint64_t mix64(std::uint64_t a, std::string_view tag);

/// Deterministic random source. std::mt19937_64's output sequence is fixed by
/// the standard; all distributions are hand-rolled on top of it because the
/// standard library distribution algorithms are implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }

  /// Uniform double in [0, 1).
  double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  /// Uniform integer in [0, n), unbiased. n must be > 0.
  std::uint64_t below(std::uint64_t n);

  bool bernoulli(double p) { return uniform() < p; }

  /// Knuth's method; exact for the mean range used here (< ~700).
  int poisson(double mean);

  /// Picks an index from an unnormalized weight vector.
  std::size_t categorical(const std::vector<double>& weights);

  template <typename T>
  void shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(below(i));
      std::swap(items[i - 1], items[j]);
    }
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace tempods
