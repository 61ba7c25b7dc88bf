#include "qgs/algebra.hpp"

#include <cmath>
#include <stdexcept>

namespace qgs {

Matrix Matrix::identity(std::size_t dim) {
  Matrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

Matrix Matrix::diagonal(const Vector& entries) {
  Matrix m(entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
  return m;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  const std::size_t da = a.dim(), db = b.dim();
  Matrix out(da * db);
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < da; ++j) {
      const cdouble aij = a(i, j);
      if (aij == cdouble{}) continue;
      for (std::size_t k = 0; k < db; ++k)
        for (std::size_t l = 0; l < db; ++l)
          out(i * db + k, j * db + l) = aij * b(k, l);
    }
  return out;
}

Vector apply(const Matrix& u, const Vector& v) {
  if (u.dim() != v.size()) throw std::invalid_argument("apply: dimension mismatch");
  Vector out(v.size());
  for (std::size_t i = 0; i < u.dim(); ++i) {
    cdouble acc{};
    for (std::size_t j = 0; j < u.dim(); ++j) acc += u(i, j) * v[j];
    out[i] = acc;
  }
  return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("matmul: dimension mismatch");
  const std::size_t n = a.dim();
  Matrix out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const cdouble aik = a(i, k);
      if (aik == cdouble{}) continue;
      for (std::size_t j = 0; j < n; ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("add: dimension mismatch");
  Matrix out(a.dim());
  for (std::size_t i = 0; i < a.data().size(); ++i)
    out(i / a.dim(), i % a.dim()) = a.data()[i] + b.data()[i];
  return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("sub: dimension mismatch");
  Matrix out(a.dim());
  for (std::size_t i = 0; i < a.data().size(); ++i)
    out(i / a.dim(), i % a.dim()) = a.data()[i] - b.data()[i];
  return out;
}

Matrix dagger(const Matrix& m) {
  Matrix out(m.dim());
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j) out(j, i) = std::conj(m(i, j));
  return out;
}

double norm(const Vector& v) {
  double acc = 0.0;
  for (const cdouble& c : v) acc += std::norm(c);
  return std::sqrt(acc);
}

double frobenius_norm(const Matrix& m) {
  double acc = 0.0;
  for (const cdouble& c : m.data()) acc += std::norm(c);
  return std::sqrt(acc);
}

double global_phase_fidelity(const Matrix& u, const Matrix& v) {
  if (u.dim() != v.dim())
    throw std::invalid_argument("global_phase_fidelity: dimension mismatch");
  cdouble tr{};
  for (std::size_t i = 0; i < u.dim(); ++i)
    for (std::size_t j = 0; j < u.dim(); ++j) tr += std::conj(u(j, i)) * v(j, i);
  return std::abs(tr) / static_cast<double>(u.dim());
}

double unitarity_defect(const Matrix& u) {
  return frobenius_norm(dagger(u) * u - Matrix::identity(u.dim()));
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("max_abs_diff: dimension mismatch");
  double worst = 0.0;
  for (std::size_t i = 0; i < a.data().size(); ++i)
    worst = std::max(worst, std::abs(a.data()[i] - b.data()[i]));
  return worst;
}

}  // namespace qgs
