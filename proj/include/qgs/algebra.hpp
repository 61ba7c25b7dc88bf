#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace qgs {

using cdouble = std::complex<double>;
using Vector = std::vector<cdouble>;

// Dense square complex matrix, row-major. Target dimensions stay small
// (<= 4096), so there is no sparse machinery here on purpose.
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(std::size_t dim) : dim_(dim), a_(dim * dim) {}

  static Matrix identity(std::size_t dim);
  static Matrix diagonal(const Vector& entries);

  std::size_t dim() const { return dim_; }
  cdouble& operator()(std::size_t r, std::size_t c) { return a_[r * dim_ + c]; }
  const cdouble& operator()(std::size_t r, std::size_t c) const { return a_[r * dim_ + c]; }

  const std::vector<cdouble>& data() const { return a_; }

 private:
  std::size_t dim_ = 0;
  std::vector<cdouble> a_;
};

// Kronecker product; the first factor is the high-order subsystem.
Matrix kron(const Matrix& a, const Matrix& b);

// Matrix-vector product. Throws std::invalid_argument on dimension mismatch.
Vector apply(const Matrix& u, const Vector& v);

Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix dagger(const Matrix& m);

double norm(const Vector& v);
double frobenius_norm(const Matrix& m);

// |tr(u† v)| / dim in [0,1]; equals 1 iff v = e^{ia} u for unitary inputs.
double global_phase_fidelity(const Matrix& u, const Matrix& v);

// ||u† u - I||_F; zero for exact unitaries.
double unitarity_defect(const Matrix& u);

double max_abs_diff(const Matrix& a, const Matrix& b);

}  // namespace qgs
