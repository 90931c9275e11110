#include "gscramble/rng.hpp"

#include <cmath>

namespace gsc {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::uint64_t derive_seed(std::uint64_t master, std::string_view label,
                          std::uint64_t index) {
  std::uint64_t state = master;
  std::uint64_t a = splitmix64(state);
  state ^= fnv1a64(label);
  std::uint64_t b = splitmix64(state);
  state ^= index * 0xd1342543de82ef95ULL + 1;
  std::uint64_t c = splitmix64(state);
  return a ^ (b + 0x9e3779b97f4a7c15ULL) ^ (c << 1);
}

double Rng::uniform01() {
  // 53-bit mantissa fill; result is in [0, 1).
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double Rng::uniform(double a, double b) { return a + (b - a) * uniform01(); }

double Rng::normal() {
  if (has_cached_) {
    has_cached_ = false;
    return cached_normal_;
  }
  // u1 in (0, 1] keeps the log finite.
  double u1 = 1.0 - uniform01();
  double u2 = uniform01();
  double r = std::sqrt(-2.0 * std::log(u1));
  double a = 2.0 * kPi * u2;
  cached_normal_ = r * std::sin(a);
  has_cached_ = true;
  return r * std::cos(a);
}

double Rng::exponential(double rate) {
  double u = 1.0 - uniform01();
  return -std::log(u) / rate;
}

Complex Rng::normal_complex() {
  constexpr double inv_sqrt2 = 0.70710678118654752440;
  return Complex(normal() * inv_sqrt2, normal() * inv_sqrt2);
}

std::uint64_t Rng::below(std::uint64_t n) {
  // Rejection sampling to keep the draw unbiased.
  std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  std::uint64_t x;
  do {
    x = next_u64();
  } while (x >= limit);
  return x % n;
}

}  // namespace gsc
