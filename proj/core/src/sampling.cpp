#include "elgi/sampling.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace elgi {

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

namespace {
inline std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
}  // namespace

Xoshiro256StarStar::Xoshiro256StarStar(std::uint64_t seed) {
  SplitMix64 sm(seed);
  for (auto& word : state_) word = sm.next();
}

std::uint64_t Xoshiro256StarStar::next_u64() {
  const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
  const std::uint64_t t = state_[1] << 17;
  state_[2] ^= state_[0];
  state_[3] ^= state_[1];
  state_[1] ^= state_[2];
  state_[0] ^= state_[3];
  state_[2] ^= t;
  state_[3] = rotl(state_[3], 45);
  return result;
}

double Xoshiro256StarStar::next_double() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

void ShotConfig::validate() const {
  if (shots < 1) throw std::invalid_argument("ShotConfig: shots >= 1 required");
  if (reps < 2) throw std::invalid_argument("ShotConfig: reps >= 2 required for std estimates");
  if (readout_flip < 0.0 || readout_flip >= 1.0) {
    throw std::invalid_argument("ShotConfig: readout_flip must be in [0, 1)");
  }
}

ProbTable sample_table(const ProbTable& p, std::uint64_t shots, Xoshiro256StarStar& rng) {
  if (std::abs(p.mass() - 1.0) > 1e-9) {
    throw std::invalid_argument("sample_table: table mass must be 1");
  }
  if (shots < 1) throw std::invalid_argument("sample_table: shots >= 1 required");

  const std::vector<double>& values = p.values();
  std::vector<double> cdf(values.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    acc += values[i] > 0.0 ? values[i] : 0.0;
    cdf[i] = acc;
  }

  std::vector<std::uint64_t> counts(values.size(), 0);
  for (std::uint64_t shot = 0; shot < shots; ++shot) {
    const double u = rng.next_double() * acc;
    std::size_t k = 0;
    while (k + 1 < cdf.size() && u >= cdf[k]) ++k;
    ++counts[k];
  }

  ProbTable empirical(p.arity(), p.outcome_dim(), 1.0);
  for (std::size_t i = 0; i < counts.size(); ++i) {
    empirical.values()[i] = static_cast<double>(counts[i]) / static_cast<double>(shots);
  }
  empirical.validate();
  return empirical;
}

ProbTable apply_readout_noise(const ProbTable& p, double eps) {
  if (eps < 0.0 || eps >= 1.0) {
    throw std::invalid_argument("apply_readout_noise: eps must be in [0, 1)");
  }
  if (p.outcome_dim() != 2) {
    throw std::invalid_argument("apply_readout_noise: binary outcomes required");
  }
  if (eps == 0.0) return p;

  const int arity = p.arity();
  const int n = static_cast<int>(p.values().size());
  ProbTable out(arity, 2, p.mass());
  for (int y = 0; y < n; ++y) {
    double acc = 0.0;
    for (int x = 0; x < n; ++x) {
      double weight = 1.0;
      for (int bit = 0; bit < arity; ++bit) {
        const bool flipped = ((x >> bit) & 1) != ((y >> bit) & 1);
        weight *= flipped ? eps : 1.0 - eps;
      }
      acc += weight * p.values()[x];
    }
    out.values()[y] = acc;
  }
  out.validate();
  return out;
}

Estimate estimate_deficit(int n, double theta, const ShotConfig& config, MeasurementMode mode) {
  config.validate();
  if (n != 3) throw std::invalid_argument("estimate_deficit: n = 3 supported");

  const double step = theta / (n - 1);
  auto true_table = [&](double angle) {
    ProbTable table = mode == MeasurementMode::kAnalytic
                          ? analytic_joint2(0.5, angle)
                          : joint2_circuit(ProtocolConfig{0.5, {0.0, angle}, mode}, 0, 1);
    return apply_readout_noise(table, config.readout_flip);
  };
  const ProbTable step_table = true_table(step);
  const ProbTable total_table = true_table(theta);

  // Substream per repetition: seeds are decorrelated through SplitMix64 so
  // repetitions may run in any order (or concurrently) with identical output.
  SplitMix64 stream_seeds(config.seed);
  std::vector<std::uint64_t> rep_seeds(config.reps);
  for (auto& rep_seed : rep_seeds) rep_seed = stream_seeds.next();

  std::vector<double> deficits(config.reps);
  for (int rep = 0; rep < config.reps; ++rep) {
    Xoshiro256StarStar rng(rep_seeds[rep]);
    const ProbTable step_emp = sample_table(step_table, config.shots, rng);
    const ProbTable total_emp = sample_table(total_table, config.shots, rng);
    deficits[rep] = (n - 1) * conditional_entropy(step_emp) - conditional_entropy(total_emp);
  }

  double mean = 0.0;
  for (double d : deficits) mean += d;
  mean /= config.reps;
  double var = 0.0;
  for (double d : deficits) var += (d - mean) * (d - mean);
  var /= config.reps - 1;

  return Estimate{mean, std::sqrt(var), config.reps};
}

double sigma_violation(const Estimate& e) {
  if (e.mean >= 0.0) return 0.0;
  if (e.std == 0.0) return std::numeric_limits<double>::infinity();
  return -e.mean / e.std;
}

}  // namespace elgi
