#pragma once

#include <cstdint>
#include <random>
#include <string_view>

#include "gscramble/types.hpp"

namespace gsc {

// Mixes a master seed, a purpose label and a sample index into one stream
// seed. Distinct (label, index) pairs give statistically independent streams,
// so ensemble members can run in any order (or in parallel) and still
// reproduce bit-for-bit.
std::uint64_t derive_seed(std::uint64_t master, std::string_view label,
                          std::uint64_t index = 0);

// 64-bit FNV-1a; used for label mixing above and for config fingerprints.
std::uint64_t fnv1a64(std::string_view s);

// Seeded random stream. The engine is std::mt19937_64 (its sequence is fixed
// by the standard); the variate transforms live here because the standard
// library's distribution algorithms are implementation-defined and would
// break cross-toolchain reproducibility.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  static Rng from(std::uint64_t master, std::string_view label,
                  std::uint64_t index = 0) {
    return Rng(derive_seed(master, label, index));
  }

  std::uint64_t next_u64() { return eng_(); }

  // Uniform on [0, 1).
  double uniform01();
  double uniform(double a, double b);
  // Standard normal via Box-Muller; the partner variate is cached.
  double normal();
  // Exponential with the given rate (mean 1/rate).
  double exponential(double rate);
  // Complex normal with E|z|^2 = 1.
  Complex normal_complex();
  // Integer in [0, n).
  std::uint64_t below(std::uint64_t n);

 private:
  std::mt19937_64 eng_;
  double cached_normal_ = 0.0;
  bool has_cached_ = false;
};

}  // namespace gsc
