#pragma once

#include <cstddef>
#include <vector>

#include "qgs/algebra.hpp"
#include "qgs/pulse.hpp"

namespace qgs {

// Hermitian complex matrix; trace 1 for states, trace 0 allowed when used as
// a deviation matrix. Invariants are checked by the helpers, not enforced at
// construction (ingested experimental data is noisy).
struct DensityMatrix {
  Matrix m;

  DensityMatrix() = default;
  explicit DensityMatrix(Matrix mat) : m(std::move(mat)) {}

  std::size_t dim() const { return m.dim(); }
  double trace_real() const;
  double population(std::size_t i) const { return m(i, i).real(); }
  double hermiticity_defect() const;      // max |m_ij - conj(m_ji)|
  double max_offdiagonal() const;

  static DensityMatrix pure_basis(std::size_t dim, std::size_t index);
  static DensityMatrix from_state(const Vector& psi);
};

// High-temperature two-spin deviation model: populations
// 1/4 + epsilon/4 * (eA+eB, eA-eB, -eA+eB, -eA-eB) with eA = 1, eB = 0.44
// (the Larmor ratio 220/500). Diagonal, trace 1.
DensityMatrix thermal_state(double epsilon = 0.1);

// U rho U† along the compiled path; preserves Hermiticity and trace.
DensityMatrix evolve_density(const DensityMatrix& rho, const PulseSequence& seq,
                             const SpinSystem& sys);

// (1/k) sum_i U_i rho U_i† over the preparation sequences. Requires a
// diagonal input. With compile_pseudopure() the result is lambda I/4 + mu
// |00><00| with equal populations on the three unmarked-by-prep states.
DensityMatrix temporal_average(const DensityMatrix& thermal,
                               const std::vector<PulseSequence>& seqs,
                               const SpinSystem& sys);

// rho = lambda I/dim + mu |00><00|. Throws if rho is not of that shape
// within tolerance.
struct PseudoPureSplit {
  double lambda = 0.0;
  double mu = 0.0;
};
PseudoPureSplit pseudopure_split(const DensityMatrix& rho, double tol = 1e-8);

// Full compiled-path run: temporal-averaged pseudo-pure prep, then either
// W followed by `iterations` compiled search iterations (built-in mode) or
// `iterations` applications of a caller-supplied sequence (custom mode, no W).
// marked_population[k] is the pure-part population of |11> after k steps.
struct PulsePathResult {
  std::vector<double> marked_population;
  DensityMatrix final_rho;
  PseudoPureSplit split;
};

PulsePathResult run_pulse_path(double theta, double phi, int iterations,
                               const SpinSystem& sys, double epsilon = 0.1);
PulsePathResult run_pulse_path(const PulseSequence& per_iteration, int iterations,
                               const SpinSystem& sys, double epsilon = 0.1);

}  // namespace qgs
