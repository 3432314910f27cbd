#include <doctest.h>

#include <cmath>
#include <numbers>

#include "elgi/sampling.hpp"

using namespace elgi;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_SUITE("sampling") {

TEST_CASE("xoshiro: deterministic, seed-sensitive, roughly uniform") {
  Xoshiro256StarStar a(123), b(123), c(124);
  bool all_equal = true, any_diff = false;
  double mean = 0.0;
  for (int i = 0; i < 100000; ++i) {
    const double va = a.next_double();
    all_equal = all_equal && va == b.next_double();
    any_diff = any_diff || va != c.next_double();
    mean += va;
  }
  CHECK(all_equal);
  CHECK(any_diff);
  CHECK(mean / 100000.0 == doctest::Approx(0.5).epsilon(0.01));
}

TEST_CASE("sample_table: deterministic table stays exact") {
  ProbTable det(2, 2, 1.0);
  det.at(0, 0) = 1.0;
  Xoshiro256StarStar rng(5);
  const ProbTable emp = sample_table(det, 1000, rng);
  CHECK(emp.at(0, 0) == 1.0);
  CHECK(emp.sum() == doctest::Approx(1.0));
}

TEST_CASE("sample_table: same seed reproduces the draw exactly") {
  const ProbTable p = analytic_joint2(0.5, kPi / 4.0);
  Xoshiro256StarStar rng1(99), rng2(99);
  const ProbTable e1 = sample_table(p, 4096, rng1);
  const ProbTable e2 = sample_table(p, 4096, rng2);
  for (std::size_t i = 0; i < e1.values().size(); ++i) CHECK(e1.values()[i] == e2.values()[i]);
}

TEST_CASE("sample_table: empirical error shrinks as 1/sqrt(shots)") {
  const ProbTable p = analytic_joint2(0.5, kPi / 4.0);
  for (std::uint64_t shots : {1000ULL, 10000ULL, 100000ULL}) {
    Xoshiro256StarStar rng(7);
    const ProbTable emp = sample_table(p, shots, rng);
    // Binomial std per entry is at most 0.5/sqrt(N); allow 3 sigma.
    const double bound = 3.0 * 0.5 / std::sqrt(static_cast<double>(shots));
    for (std::size_t i = 0; i < emp.values().size(); ++i) {
      CHECK(std::abs(emp.values()[i] - p.values()[i]) < bound);
    }
  }
  Xoshiro256StarStar rng(8);
  const ProbTable big = sample_table(p, 1000000, rng);
  for (std::size_t i = 0; i < big.values().size(); ++i) {
    CHECK(std::abs(big.values()[i] - p.values()[i]) < 0.005);
  }
}

TEST_CASE("sample_table: rejects invalid inputs") {
  ProbTable half(1, 2, 0.5);
  half.at(0) = 0.5;
  Xoshiro256StarStar rng(1);
  CHECK_THROWS_AS(sample_table(half, 100, rng), std::invalid_argument);
}

TEST_CASE("apply_readout_noise: channel definition") {
  const ProbTable p = analytic_joint2(0.5, 0.9);
  const ProbTable same = apply_readout_noise(p, 0.0);
  for (std::size_t i = 0; i < p.values().size(); ++i) CHECK(same.values()[i] == p.values()[i]);

  ProbTable pure(1, 2, 1.0);
  pure.at(0) = 1.0;
  const ProbTable flipped = apply_readout_noise(pure, 0.01);
  CHECK(flipped.at(0) == doctest::Approx(0.99).epsilon(1e-14));
  CHECK(flipped.at(1) == doctest::Approx(0.01).epsilon(1e-14));

  const ProbTable scrambled = apply_readout_noise(pure, 0.5);
  CHECK(scrambled.at(0) == doctest::Approx(0.5));
  CHECK(scrambled.at(1) == doctest::Approx(0.5));
}

TEST_CASE("apply_readout_noise: independent per-index channel on pairs") {
  ProbTable p(2, 2, 1.0);
  p.at(0, 0) = 1.0;
  const double eps = 0.1;
  const ProbTable noisy = apply_readout_noise(p, eps);
  CHECK(noisy.at(0, 0) == doctest::Approx(0.81).epsilon(1e-12));
  CHECK(noisy.at(0, 1) == doctest::Approx(0.09).epsilon(1e-12));
  CHECK(noisy.at(1, 0) == doctest::Approx(0.09).epsilon(1e-12));
  CHECK(noisy.at(1, 1) == doctest::Approx(0.01).epsilon(1e-12));
  CHECK(noisy.sum() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("apply_readout_noise: rejects bad parameters") {
  const ProbTable p = analytic_joint2(0.5, 0.9);
  CHECK_THROWS_AS(apply_readout_noise(p, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(apply_readout_noise(p, -0.1), std::invalid_argument);
  const ProbTable spin1 = analytic_joint2(1.0, 0.9);
  CHECK_THROWS_AS(apply_readout_noise(spin1, 0.1), std::invalid_argument);
}

TEST_CASE("estimate_deficit: desk-scale run brackets the theory value") {
  const ShotConfig config{4096, 10, 42, 0.0};
  const Estimate e = estimate_deficit(3, kPi / 4.0, config, MeasurementMode::kAnalytic);
  // Consistency allowance: sampling spread plus a plug-in bias budget.
  const double allowance = 3.0 * (e.std / std::sqrt(10.0) + 0.01);
  CHECK(std::abs(e.mean - (-0.134)) < allowance);
  CHECK(e.reps == 10);
  CHECK(e.std > 0.0);
}

TEST_CASE("estimate_deficit: near-deterministic tables keep the mean tiny") {
  const ShotConfig config{4096, 10, 42, 0.0};
  const Estimate e = estimate_deficit(3, 0.0, config, MeasurementMode::kAnalytic);
  CHECK(std::abs(e.mean) <= 0.02);
}

TEST_CASE("estimate_deficit: repeated runs with one seed are identical") {
  const ShotConfig config{2048, 5, 7, 0.0};
  const Estimate a = estimate_deficit(3, kPi / 4.0, config, MeasurementMode::kInrm);
  const Estimate b = estimate_deficit(3, kPi / 4.0, config, MeasurementMode::kInrm);
  CHECK(a.mean == b.mean);
  CHECK(a.std == b.std);
}

TEST_CASE("estimate_deficit: million-shot run converges") {
  const ShotConfig config{1000000, 5, 42, 0.0};
  const Estimate e = estimate_deficit(3, kPi / 4.0, config, MeasurementMode::kAnalytic);
  CHECK(std::abs(e.mean - (-0.134)) < 0.003);
}

TEST_CASE("estimate_deficit: rejects bad configurations") {
  CHECK_THROWS_AS(estimate_deficit(3, 1.0, ShotConfig{0, 10, 1, 0.0}, MeasurementMode::kAnalytic),
                  std::invalid_argument);
  CHECK_THROWS_AS(estimate_deficit(3, 1.0, ShotConfig{100, 1, 1, 0.0}, MeasurementMode::kAnalytic),
                  std::invalid_argument);
  CHECK_THROWS_AS(estimate_deficit(4, 1.0, ShotConfig{100, 5, 1, 0.0}, MeasurementMode::kAnalytic),
                  std::invalid_argument);
}

TEST_CASE("sigma_violation: arithmetic and edge cases") {
  CHECK(sigma_violation(Estimate{-0.134, 0.03, 10}) == doctest::Approx(4.4667).epsilon(1e-4));
  CHECK(sigma_violation(Estimate{0.1, 0.03, 10}) == 0.0);
  // The reported INRM case sits above four standard deviations.
  CHECK(sigma_violation(Estimate{-0.114, 0.027, 10}) == doctest::Approx(4.2222).epsilon(1e-4));
  CHECK(sigma_violation(Estimate{-0.114, 0.027, 10}) > 4.0);
  CHECK(std::isinf(sigma_violation(Estimate{-0.01, 0.0, 10})));
  CHECK(sigma_violation(Estimate{0.0, 0.0, 10}) == 0.0);
}

}  // TEST_SUITE
