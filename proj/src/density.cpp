#include "qgs/density.hpp"

#include <cmath>
#include <stdexcept>

namespace qgs {

double DensityMatrix::trace_real() const {
  double tr = 0.0;
  for (std::size_t i = 0; i < dim(); ++i) tr += m(i, i).real();
  return tr;
}

double DensityMatrix::hermiticity_defect() const {
  double worst = 0.0;
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = i; j < dim(); ++j)
      worst = std::max(worst, std::abs(m(i, j) - std::conj(m(j, i))));
  return worst;
}

double DensityMatrix::max_offdiagonal() const {
  double worst = 0.0;
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = 0; j < dim(); ++j)
      if (i != j) worst = std::max(worst, std::abs(m(i, j)));
  return worst;
}

DensityMatrix DensityMatrix::pure_basis(std::size_t dim, std::size_t index) {
  if (index >= dim) throw std::invalid_argument("pure_basis: index out of range");
  Matrix m(dim);
  m(index, index) = 1.0;
  return DensityMatrix(m);
}

DensityMatrix DensityMatrix::from_state(const Vector& psi) {
  Matrix m(psi.size());
  for (std::size_t i = 0; i < psi.size(); ++i)
    for (std::size_t j = 0; j < psi.size(); ++j) m(i, j) = psi[i] * std::conj(psi[j]);
  return DensityMatrix(m);
}

DensityMatrix thermal_state(double epsilon) {
  if (!(epsilon > 0.0) || epsilon >= 1.0 / 1.44)
    throw std::invalid_argument("thermal_state: epsilon must be in (0, 1/1.44)");
  constexpr double eA = 1.0, eB = 0.44;
  const double dev[4] = {eA + eB, eA - eB, -eA + eB, -eA - eB};
  Matrix m(4);
  for (std::size_t i = 0; i < 4; ++i) m(i, i) = 0.25 + epsilon * dev[i] / 4.0;
  return DensityMatrix(m);
}

DensityMatrix evolve_density(const DensityMatrix& rho, const PulseSequence& seq,
                             const SpinSystem& sys) {
  if (rho.dim() != 4) throw std::invalid_argument("evolve_density: dimension mismatch");
  const Matrix u = sequence_unitary(seq, sys);
  return DensityMatrix(u * rho.m * dagger(u));
}

DensityMatrix temporal_average(const DensityMatrix& thermal,
                               const std::vector<PulseSequence>& seqs,
                               const SpinSystem& sys) {
  if (thermal.dim() != 4)
    throw std::invalid_argument("temporal_average: dimension mismatch");
  if (thermal.max_offdiagonal() > 1e-10)
    throw std::invalid_argument("temporal_average: thermal input must be diagonal");
  if (seqs.empty()) throw std::invalid_argument("temporal_average: no sequences");

  Matrix acc(4);
  for (const PulseSequence& seq : seqs) {
    const DensityMatrix evolved = evolve_density(thermal, seq, sys);
    acc = acc + evolved.m;
  }
  const double inv = 1.0 / static_cast<double>(seqs.size());
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) acc(i, j) *= inv;
  return DensityMatrix(acc);
}

PseudoPureSplit pseudopure_split(const DensityMatrix& rho, double tol) {
  const std::size_t d = rho.dim();
  if (rho.max_offdiagonal() > tol)
    throw std::invalid_argument("pseudopure_split: off-diagonal weight present");
  const double background = rho.population(1);
  for (std::size_t i = 2; i < d; ++i)
    if (std::abs(rho.population(i) - background) > tol)
      throw std::invalid_argument("pseudopure_split: unequal background populations");
  PseudoPureSplit split;
  split.lambda = background * static_cast<double>(d);
  split.mu = rho.population(0) - background;
  return split;
}

namespace {

PulsePathResult run_path(const DensityMatrix& prepared, const PseudoPureSplit& split,
                         const PulseSequence* walsh, const PulseSequence& step,
                         int iterations, const SpinSystem& sys) {
  if (iterations < 0) throw std::invalid_argument("run_pulse_path: iterations must be >= 0");

  DensityMatrix rho = prepared;
  if (walsh) rho = evolve_density(rho, *walsh, sys);

  // The I/4 part is unitary-invariant, so the pure-part population of |11>
  // is (rho_33 - lambda/4)/mu at every step.
  const double lam4 = split.lambda / 4.0;
  PulsePathResult result;
  result.split = split;
  result.marked_population.reserve(static_cast<std::size_t>(iterations) + 1);
  result.marked_population.push_back((rho.population(3) - lam4) / split.mu);
  for (int k = 1; k <= iterations; ++k) {
    rho = evolve_density(rho, step, sys);
    result.marked_population.push_back((rho.population(3) - lam4) / split.mu);
  }
  result.final_rho = rho;
  return result;
}

}  // namespace

PulsePathResult run_pulse_path(double theta, double phi, int iterations,
                               const SpinSystem& sys, double epsilon) {
  const auto preps = compile_pseudopure();
  const DensityMatrix prepared = temporal_average(
      thermal_state(epsilon), {preps.begin(), preps.end()}, sys);
  const PseudoPureSplit split = pseudopure_split(prepared);
  const PulseSequence walsh = compile_walsh();
  const PulseSequence step = compile_iteration(theta, phi);
  return run_path(prepared, split, &walsh, step, iterations, sys);
}

PulsePathResult run_pulse_path(const PulseSequence& per_iteration, int iterations,
                               const SpinSystem& sys, double epsilon) {
  const auto preps = compile_pseudopure();
  const DensityMatrix prepared = temporal_average(
      thermal_state(epsilon), {preps.begin(), preps.end()}, sys);
  const PseudoPureSplit split = pseudopure_split(prepared);
  return run_path(prepared, split, nullptr, per_iteration, iterations, sys);
}

}  // namespace qgs
