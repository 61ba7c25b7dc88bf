#include <doctest.h>

#include <cmath>
#include <numbers>

#include "qgs/density.hpp"
#include "qgs/search.hpp"

using namespace qgs;

namespace {
constexpr double kPi = std::numbers::pi;
const SpinSystem kSys{};
}  // namespace

TEST_CASE("thermal_state: deviation populations at epsilon = 0.1") {
  const DensityMatrix rho = thermal_state(0.1);
  CHECK(rho.population(0) == doctest::Approx(0.286).epsilon(1e-12));
  CHECK(rho.population(1) == doctest::Approx(0.264).epsilon(1e-12));
  CHECK(rho.population(2) == doctest::Approx(0.236).epsilon(1e-12));
  CHECK(rho.population(3) == doctest::Approx(0.214).epsilon(1e-12));
  CHECK(rho.trace_real() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(rho.max_offdiagonal() == 0.0);
  CHECK_THROWS_AS(thermal_state(0.0), std::invalid_argument);
  CHECK_THROWS_AS(thermal_state(0.8), std::invalid_argument);
}

TEST_CASE("temporal_average: pure input is a fixed point of the cyclic average") {
  const auto preps = compile_pseudopure();
  const std::vector<PulseSequence> seqs(preps.begin(), preps.end());
  const DensityMatrix pure = DensityMatrix::pure_basis(4, 0);
  const DensityMatrix avg = temporal_average(pure, seqs, kSys);
  CHECK(avg.max_offdiagonal() < 1e-12);
  CHECK(avg.population(0) == doctest::Approx(1.0).epsilon(1e-12));
  for (std::size_t i = 1; i < 4; ++i) CHECK(std::abs(avg.population(i)) < 1e-12);
}

TEST_CASE("temporal_average: equalizes the non-|00> populations") {
  const auto preps = compile_pseudopure();
  const std::vector<PulseSequence> seqs(preps.begin(), preps.end());

  Matrix m(4);
  m(0, 0) = 0.35;
  m(1, 1) = 0.30;
  m(2, 2) = 0.20;
  m(3, 3) = 0.15;
  const DensityMatrix avg = temporal_average(DensityMatrix(m), seqs, kSys);
  const double mean = (0.30 + 0.20 + 0.15) / 3.0;
  CHECK(avg.population(0) == doctest::Approx(0.35).epsilon(1e-12));
  for (std::size_t i = 1; i < 4; ++i)
    CHECK(avg.population(i) == doctest::Approx(mean).epsilon(1e-12));
  CHECK(avg.max_offdiagonal() < 1e-12);
}

TEST_CASE("temporal_average: default thermal model gives a positive pure part") {
  const auto preps = compile_pseudopure();
  const std::vector<PulseSequence> seqs(preps.begin(), preps.end());
  const DensityMatrix avg = temporal_average(thermal_state(0.1), seqs, kSys);
  CHECK(avg.max_offdiagonal() < 1e-10);

  const PseudoPureSplit split = pseudopure_split(avg);
  CHECK(split.mu == doctest::Approx(1.92 * 0.1 / 4.0).epsilon(1e-10));
  CHECK(split.mu > 0.0);
  CHECK(split.lambda + split.mu == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("temporal_average: rejects non-diagonal thermal input") {
  Matrix m(4);
  m(0, 0) = 1.0;
  m(0, 1) = 0.2;
  m(1, 0) = 0.2;
  const auto preps = compile_pseudopure();
  CHECK_THROWS_AS(
      temporal_average(DensityMatrix(m), {preps.begin(), preps.end()}, kSys),
      std::invalid_argument);
}

TEST_CASE("evolve_density: identity, walsh populations, and conservation laws") {
  const DensityMatrix pure = DensityMatrix::pure_basis(4, 0);
  const DensityMatrix same = evolve_density(pure, PulseSequence{}, kSys);
  CHECK(max_abs_diff(same.m, pure.m) == 0.0);

  const DensityMatrix spread = evolve_density(pure, compile_walsh(), kSys);
  for (std::size_t i = 0; i < 4; ++i)
    CHECK(spread.population(i) == doctest::Approx(0.25).epsilon(1e-12));

  CHECK(spread.hermiticity_defect() < 1e-10);
  CHECK(spread.trace_real() == doctest::Approx(1.0).epsilon(1e-10));

  CHECK_THROWS_AS(evolve_density(DensityMatrix(Matrix(2)), PulseSequence{}, kSys),
                  std::invalid_argument);
}

TEST_CASE("evolve_density: six matched iterations concentrate the pure part") {
  const auto preps = compile_pseudopure();
  const DensityMatrix prepared =
      temporal_average(thermal_state(0.1), {preps.begin(), preps.end()}, kSys);
  const PseudoPureSplit split = pseudopure_split(prepared);

  DensityMatrix rho = evolve_density(prepared, compile_walsh(), kSys);
  const PulseSequence step = compile_iteration(kPi / 2.0, kPi / 2.0);
  for (int k = 0; k < 6; ++k) rho = evolve_density(rho, step, kSys);

  const double pure_part = (rho.population(3) - split.lambda / 4.0) / split.mu;
  CHECK(pure_part == doctest::Approx(16381.0 / 16384.0).epsilon(1e-10));
}

TEST_CASE("run_pulse_path: built-in mode matches the ideal engine") {
  SearchConfig config;
  config.n = 2;
  config.tau = 3;
  config.iterations = 10;

  for (double phi : {kPi / 2.0, 3.0 * kPi / 2.0}) {
    config.theta = kPi / 2.0;
    config.phi = phi;
    const IterationTrace ideal = grover_generalized(config);
    const PulsePathResult pulsed = run_pulse_path(kPi / 2.0, phi, 10, kSys);
    REQUIRE(pulsed.marked_population.size() == 11);
    for (std::size_t k = 0; k <= 10; ++k)
      CHECK(std::abs(pulsed.marked_population[k] - ideal.steps[k].p_success) < 1e-6);
  }
}

TEST_CASE("run_pulse_path: custom mode applies the sequence without W") {
  const PulsePathResult idle = run_pulse_path(PulseSequence{}, 3, kSys);
  // Pseudo-pure |00>: the pure-part population of |11> stays zero.
  for (double p : idle.marked_population) CHECK(std::abs(p) < 1e-12);
  CHECK(idle.final_rho.population(0) ==
        doctest::Approx(idle.split.lambda / 4.0 + idle.split.mu).epsilon(1e-10));
}

TEST_CASE("pseudopure_split: rejects states outside the model") {
  CHECK_THROWS_AS(pseudopure_split(thermal_state(0.1)), std::invalid_argument);
  Matrix m(4);
  m(0, 0) = 0.7;
  m(1, 1) = 0.1;
  m(2, 2) = 0.1;
  m(3, 3) = 0.1;
  m(0, 3) = 0.2;
  m(3, 0) = 0.2;
  CHECK_THROWS_AS(pseudopure_split(DensityMatrix(m)), std::invalid_argument);
}
