#ifndef ELGI_SAMPLING_HPP
#define ELGI_SAMPLING_HPP

#include <cstdint>

#include "elgi/entropy.hpp"
#include "elgi/prob_table.hpp"
#include "elgi/protocols.hpp"

namespace elgi {

// SplitMix64 stream, used to derive independent substream seeds.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();

 private:
  std::uint64_t state_;
};

// xoshiro256** by Blackman and Vigna; 256-bit state seeded through
// SplitMix64. Statistical quality is ample for multinomial sampling and the
// stream is bit-reproducible across platforms.
class Xoshiro256StarStar {
 public:
  explicit Xoshiro256StarStar(std::uint64_t seed);

  std::uint64_t next_u64();
  // Uniform double in [0, 1) with 53 random bits.
  double next_double();

 private:
  std::uint64_t state_[4];
};

struct ShotConfig {
  std::uint64_t shots = 4096;
  int reps = 10;
  std::uint64_t seed = 0;
  double readout_flip = 0.0;  // epsilon of the per-index binary symmetric channel

  void validate() const;
};

struct Estimate {
  double mean;
  double std;  // sample standard deviation over repetitions
  int reps;
};

// Empirical frequencies of a multinomial draw; deterministic given the rng
// state. The input table must have mass 1.
ProbTable sample_table(const ProbTable& p, std::uint64_t shots, Xoshiro256StarStar& rng);

// Passes each outcome index independently through a binary symmetric channel
// with flip probability eps. Defined for binary outcomes.
ProbTable apply_readout_noise(const ProbTable& p, double eps);

// Finite-shot emulation of the n=3 deficit: per repetition, samples the
// step-angle and total-angle joint tables and computes the deficit from the
// empirical entropies. Each repetition draws from an independent substream
// derived from (seed, rep index), so results do not depend on scheduling.
Estimate estimate_deficit(int n, double theta, const ShotConfig& config, MeasurementMode mode);

// Number of standard deviations by which the mean violates the
// macrorealistic bound: -mean/std when mean < 0, else 0. A zero std with a
// negative mean reports infinite confidence.
double sigma_violation(const Estimate& e);

}  // namespace elgi

#endif  // ELGI_SAMPLING_HPP
