#include "tempods/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace tempods {

std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

namespace {
std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}
}  // namespace

std::uint64_t mix64(std::uint64_t a, std::uint64_t b) {
  return splitmix64(splitmix64(a) ^ b);
}

std::uint64_t mix64(std::uint64_t a, std::string_view tag) {
  return mix64(a, fnv1a64(tag));
}

std::uint64_t Rng::below(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("Rng::below: n must be positive");
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  std::uint64_t v;
  do {
    v = eng_();
  } while (v >= limit);
  return v % n;
}

int Rng::poisson(double mean) {
  if (mean < 0) throw std::invalid_argument("Rng::poisson: negative mean");
  if (mean == 0) return 0;
  // Sum of exponential inter-arrival times, accumulated in log space.
  double sum = 0.0;
  int k = 0;
  for (;;) {
    double u = uniform();
    if (u <= 0.0) u = 0x1.0p-53;
    sum -= std::log(u);
    if (sum >= mean) return k;
    ++k;
    if (k > 10'000'000) throw std::runtime_error("Rng::poisson: runaway draw");
  }
}

std::size_t Rng::categorical(const std::vector<double>& weights) {
  double total = 0.0;
  for (double w : weights) total += w;
  if (total <= 0.0)
    throw std::invalid_argument("Rng::categorical: non-positive total weight");
  double x = uniform() * total;
  double acc = 0.0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    acc += weights[i];
    if (x < acc) return i;
  }
  return weights.size() - 1;
}

}  // namespace tempods
