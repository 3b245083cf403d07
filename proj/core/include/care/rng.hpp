#pragma once

// Seeded RNG streams and samplers. Everything here is hand-rolled on top of
// splitmix64 because run artifacts and frozen Monte Carlo regression
// constants must be byte-reproducible; std::<random> distribution algorithms
// are implementation-defined and would pin results to one stdlib version.

#include <cmath>
#include <cstdint>
#include <string>

namespace care::rng {

// splitmix64 (Steele, Lea, Flood 2014). Full 64-bit state, passes as a
// statistical generator for simulation workloads at this scale.
class Stream {
 public:
  explicit Stream(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) { return uniform01() < p; }

  // Unbiased integer in [0, n) via masked rejection.
  std::uint64_t bounded(std::uint64_t n);

  double normal(double mean = 0.0, double sd = 1.0);
  double gamma(double shape);  // scale 1
  double beta(double alpha, double beta);

 private:
  std::uint64_t state_;
  bool have_spare_ = false;  // Box-Muller second deviate
  double spare_ = 0.0;
};

// Deterministic substream derivation: mixes `seed` and `index` through two
// splitmix steps so adjacent indices land far apart.
std::uint64_t mix(std::uint64_t seed, std::uint64_t index);

// Stream keyed by structured strings, e.g. (master_seed, study_id, role,
// call_index). Uses SHA-256 underneath so text keys cannot collide by
// concatenation.
Stream stream_for(std::uint64_t master_seed, const std::string& scope,
                  const std::string& key, std::uint64_t index);

}  // namespace care::rng
