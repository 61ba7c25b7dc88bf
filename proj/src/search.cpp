#include "qgs/search.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

namespace qgs {

void SearchConfig::validate() const {
  if (n < 1) throw std::invalid_argument("search: n must be >= 1");
  if (n > kMaxQubits) throw std::invalid_argument("search: n exceeds supported register size");
  if (tau >= dim()) throw std::invalid_argument("search: tau out of range");
  if (!std::isfinite(theta) || !std::isfinite(phi))
    throw std::invalid_argument("search: phases must be finite");
  if (iterations < 0) throw std::invalid_argument("search: iterations must be >= 0");
}

namespace {

void check_operator_size(int n) {
  if (n < 1) throw std::invalid_argument("operator: n must be >= 1");
  if (n > kMaxOperatorQubits)
    throw std::length_error("operator: explicit matrix exceeds memory budget (n > 12)");
}

}  // namespace

Matrix walsh_hadamard(int n) {
  check_operator_size(n);
  const std::size_t dim = std::size_t{1} << n;
  const double scale = std::pow(2.0, -0.5 * n);
  Matrix w(dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      w(i, j) = (std::popcount(i & j) & 1) ? -scale : scale;
  return w;
}

Matrix oracle_phase(int n, std::size_t tau, double phi) {
  check_operator_size(n);
  const std::size_t dim = std::size_t{1} << n;
  if (tau >= dim) throw std::invalid_argument("oracle_phase: tau out of range");
  Vector d(dim, 1.0);
  d[tau] = std::polar(1.0, phi);
  return Matrix::diagonal(d);
}

Matrix zero_phase(int n, double theta) {
  check_operator_size(n);
  Vector d(std::size_t{1} << n, 1.0);
  d[0] = std::polar(1.0, theta);
  return Matrix::diagonal(d);
}

Matrix diffusion_general(int n, double theta) {
  check_operator_size(n);
  const std::size_t dim = std::size_t{1} << n;
  const cdouble off = (std::polar(1.0, theta) - 1.0) / static_cast<double>(dim);
  Matrix d(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) d(i, j) = off;
    d(i, i) += 1.0;
  }
  return d;
}

Matrix iteration_operator(const SearchConfig& config) {
  config.validate();
  check_operator_size(config.n);
  Matrix q = diffusion_general(config.n, config.theta);
  const cdouble phase = std::polar(1.0, config.phi);
  for (std::size_t i = 0; i < q.dim(); ++i) q(i, config.tau) *= phase;
  return q;
}

void hadamard_all(Vector& psi, int n) {
  const std::size_t size = psi.size();
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  for (int q = 0; q < n; ++q) {
    const std::size_t half = std::size_t{1} << q;
    const std::size_t stride = half << 1;
    for (std::size_t base = 0; base < size; base += stride) {
      for (std::size_t i = 0; i < half; ++i) {
        const cdouble a = psi[base + i];
        const cdouble b = psi[base + i + half];
        psi[base + i] = (a + b) * inv_sqrt2;
        psi[base + i + half] = (a - b) * inv_sqrt2;
      }
    }
  }
}

namespace {

TraceStep make_step(int k, const Vector& psi, std::size_t tau, bool keep_state) {
  TraceStep step;
  step.step = k;
  auto [a, b] = tau_c_decomposition(psi, tau);
  step.a_tau = a;
  step.abs_a_tau = std::abs(a);
  step.abs_c = std::abs(b);
  step.p_success = std::norm(a);
  if (keep_state) step.state = psi;
  return step;
}

}  // namespace

IterationTrace grover_generalized(const SearchConfig& config) {
  config.validate();
  const std::size_t dim = config.dim();
  const cdouble oracle = std::polar(1.0, config.phi);
  const cdouble zero = std::polar(1.0, config.theta);

  Vector psi(dim, cdouble{1.0 / std::sqrt(static_cast<double>(dim)), 0.0});
  IterationTrace trace;
  trace.config = config;
  trace.steps.reserve(static_cast<std::size_t>(config.iterations) + 1);
  trace.steps.push_back(make_step(0, psi, config.tau, true));

  for (int k = 1; k <= config.iterations; ++k) {
    psi[config.tau] *= oracle;
    hadamard_all(psi, config.n);
    psi[0] *= zero;
    hadamard_all(psi, config.n);
    trace.steps.push_back(make_step(k, psi, config.tau, true));
  }
  return trace;
}

std::pair<cdouble, cdouble> tau_c_decomposition(const Vector& state, std::size_t tau) {
  const std::size_t dim = state.size();
  if (tau >= dim) throw std::invalid_argument("tau_c_decomposition: tau out of range");
  cdouble sum{};
  for (const cdouble& c : state) sum += c;
  const cdouble a = state[tau];
  const cdouble b = (dim > 1)
                        ? (sum - a) / std::sqrt(static_cast<double>(dim - 1))
                        : cdouble{};
  return {a, b};
}

double approx_step_size(double theta, int n) {
  if (n < 1) throw std::invalid_argument("approx_step_size: n must be >= 1");
  return 2.0 * std::sin(theta / 2.0) * std::pow(2.0, -0.5 * n);
}

double extract_rotation_angle(const IterationTrace& trace) {
  if (trace.steps.size() < 3)
    throw std::invalid_argument("extract_rotation_angle: trace too short (need >= 3 steps)");

  // arcsin|a| folds at pi/2, so only the initial strictly increasing run is
  // trusted; amplitudes are clamped against 1+eps rounding.
  std::vector<double> s;
  s.push_back(std::asin(std::clamp(trace.steps[0].abs_a_tau, 0.0, 1.0)));
  for (std::size_t k = 1; k < trace.steps.size(); ++k) {
    const double v = std::asin(std::clamp(trace.steps[k].abs_a_tau, 0.0, 1.0));
    if (v <= s.back()) break;
    s.push_back(v);
  }
  if (s.size() < 3)
    throw std::invalid_argument(
        "extract_rotation_angle: non-monotone early segment (mismatched phases?)");

  std::size_t diffs = s.size() - 1;
  // The increment that straddles the arcsin fold under-measures; drop it when
  // the monotone run ended inside the trace.
  if (s.size() < trace.steps.size() && diffs > 1) --diffs;
  return (s[diffs] - s[0]) / static_cast<double>(diffs);
}

}  // namespace qgs
