#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "qgs/algebra.hpp"

namespace qgs {

// Largest qubit count for which explicit 2^n x 2^n operator matrices are
// constructed. The iteration engine itself never materializes matrices and
// accepts larger registers (see SearchConfig::kMaxQubits).
inline constexpr int kMaxOperatorQubits = 12;

// One search experiment: rotate the prepared state |0..0> by theta and the
// marked state |tau> by phi each iteration, starting from the uniform
// superposition.
struct SearchConfig {
  int n = 2;
  std::size_t tau = 3;
  double theta = 0.0;
  double phi = 0.0;
  int iterations = 0;

  static constexpr int kMaxQubits = 24;

  std::size_t dim() const { return std::size_t{1} << n; }
  void validate() const;  // throws std::invalid_argument
};

struct TraceStep {
  int step = 0;
  Vector state;
  cdouble a_tau;       // <tau|psi>
  double abs_a_tau = 0.0;
  double abs_c = 0.0;  // |<c|psi>| with |c> the unit-norm unmarked superposition
  double p_success = 0.0;
};

// steps[0] is the uniform start; steps[k] the state after k applications.
struct IterationTrace {
  SearchConfig config;
  std::vector<TraceStep> steps;
};

// n-fold tensor power of the one-qubit Hadamard; entries +-2^{-n/2}.
Matrix walsh_hadamard(int n);

// diag(1,..,1,e^{i phi},1,..,1) with the phase at index tau.
Matrix oracle_phase(int n, std::size_t tau, double phi);

// diag(e^{i theta},1,..,1).
Matrix zero_phase(int n, double theta);

// W * zero_phase * W. Since W|0..0> is uniform, this equals
// I + ((e^{i theta}-1)/2^n) J with J the all-ones matrix.
Matrix diffusion_general(int n, double theta);

// diffusion_general * oracle_phase as an explicit matrix (n <= 12).
Matrix iteration_operator(const SearchConfig& config);

// Runs the iteration matrix-free (diagonal phases + per-qubit Hadamard
// passes) and records a full trace.
IterationTrace grover_generalized(const SearchConfig& config);

// (a, b) with a = <tau|state>, b = <c|state>, |c> = (N-1)^{-1/2} sum_{i!=tau}|i>.
std::pair<cdouble, cdouble> tau_c_decomposition(const Vector& state, std::size_t tau);

// 2 sin(theta/2) 2^{-n/2}: the approximate per-iteration angular step.
double approx_step_size(double theta, int n);

// Mean per-step advance of arcsin|a_tau(k)| over the initial monotone run.
// Throws std::invalid_argument for short or immediately non-monotone traces
// (the latter signals mismatched phases).
double extract_rotation_angle(const IterationTrace& trace);

// In-place n-qubit Hadamard transform (butterfly per tensor factor).
void hadamard_all(Vector& psi, int n);

}  // namespace qgs
