#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "qgs/algebra.hpp"
#include "test_helpers.hpp"

using namespace qgs;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("kron: identity blocks") {
  const Matrix i2 = Matrix::identity(2);
  const Matrix i4 = kron(i2, i2);
  CHECK(i4.dim() == 4);
  CHECK(max_abs_diff(i4, Matrix::identity(4)) == 0.0);
}

TEST_CASE("kron: first factor is the high-order subsystem") {
  const cdouble phase = std::polar(1.0, 0.9);
  const Matrix d = Matrix::diagonal({1.0, phase});
  const Matrix out = kron(d, Matrix::identity(2));
  CHECK(out(0, 0) == cdouble{1.0, 0.0});
  CHECK(out(1, 1) == cdouble{1.0, 0.0});
  CHECK(std::abs(out(2, 2) - phase) < 1e-15);
  CHECK(std::abs(out(3, 3) - phase) < 1e-15);
}

TEST_CASE("kron: H (x) H has entries +-1/2") {
  Matrix h(2);
  const double s = 1.0 / std::sqrt(2.0);
  h(0, 0) = s;
  h(0, 1) = s;
  h(1, 0) = s;
  h(1, 1) = -s;
  const Matrix w = kron(h, h);
  const double expected[4][4] = {
      {0.5, 0.5, 0.5, 0.5},
      {0.5, -0.5, 0.5, -0.5},
      {0.5, 0.5, -0.5, -0.5},
      {0.5, -0.5, -0.5, 0.5},
  };
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      CHECK(std::abs(w(i, j) - expected[i][j]) < 1e-15);
}

TEST_CASE("apply: identity and uniform row sums") {
  std::mt19937 rng(7);
  const Vector v = test::random_unit_vector(rng, 4);
  const Vector same = apply(Matrix::identity(4), v);
  for (std::size_t i = 0; i < 4; ++i) CHECK(std::abs(same[i] - v[i]) == 0.0);

  Matrix h(2);
  const double s = 1.0 / std::sqrt(2.0);
  h(0, 0) = s;
  h(0, 1) = s;
  h(1, 0) = s;
  h(1, 1) = -s;
  const Vector uniform = apply(kron(h, h), {1.0, 0.0, 0.0, 0.0});
  for (const cdouble& c : uniform) CHECK(std::abs(c - 0.5) < 1e-15);
}

TEST_CASE("apply: diagonal phase scaling") {
  const Matrix d = Matrix::diagonal({1.0, 1.0, 1.0, cdouble{0.0, 1.0}});
  const Vector out = apply(d, {0.5, 0.5, 0.5, 0.5});
  CHECK(std::abs(out[3] - cdouble{0.0, 0.5}) < 1e-15);
  CHECK(std::abs(out[0] - 0.5) < 1e-15);
}

TEST_CASE("apply: dimension mismatch throws") {
  CHECK_THROWS_AS(apply(Matrix::identity(4), Vector(2)), std::invalid_argument);
}

TEST_CASE("frobenius_norm: zero, identity, single entry") {
  CHECK(frobenius_norm(Matrix(4)) == 0.0);
  CHECK(frobenius_norm(Matrix::identity(4)) == doctest::Approx(2.0).epsilon(1e-15));
  const Matrix d = Matrix::diagonal({1.0, 1.0, 1.0, -1.0}) - Matrix::identity(4);
  CHECK(frobenius_norm(d) == doctest::Approx(2.0).epsilon(1e-15));
}

TEST_CASE("global_phase_fidelity: invariances and the half case") {
  std::mt19937 rng(11);
  const Matrix u = test::random_unitary(rng, 4);
  CHECK(global_phase_fidelity(u, u) == doctest::Approx(1.0).epsilon(1e-12));

  Matrix v = u;
  const cdouble phase = std::polar(1.0, 1.234);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) v(i, j) = u(i, j) * phase;
  CHECK(global_phase_fidelity(u, v) == doctest::Approx(1.0).epsilon(1e-12));

  CHECK(global_phase_fidelity(Matrix::identity(4), Matrix::diagonal({1.0, 1.0, 1.0, -1.0})) ==
        doctest::Approx(0.5).epsilon(1e-15));
  CHECK_THROWS_AS(global_phase_fidelity(Matrix::identity(2), Matrix::identity(4)),
                  std::invalid_argument);
}

TEST_CASE("property: unitaries preserve vector norm") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t dim = 2 + (rng() % 6);
    const Matrix u = test::random_unitary(rng, dim);
    const Vector v = test::random_unit_vector(rng, dim);
    CHECK(std::abs(norm(apply(u, v)) - 1.0) < 1e-12);
  }
}

TEST_CASE("property: kron dimension associativity") {
  std::mt19937 rng(29);
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t da = 1 + rng() % 3, db = 1 + rng() % 3, dc = 1 + rng() % 3;
    const Matrix a = test::random_matrix(rng, da);
    const Matrix b = test::random_matrix(rng, db);
    const Matrix c = test::random_matrix(rng, dc);
    CHECK(kron(kron(a, b), c).dim() == da * db * dc);
    CHECK(max_abs_diff(kron(kron(a, b), c), kron(a, kron(b, c))) < 1e-12);
  }
}

TEST_CASE("property: global_phase_fidelity symmetric and bounded on unitaries") {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 25; ++trial) {
    const Matrix u = test::random_unitary(rng, 4);
    const Matrix v = test::random_unitary(rng, 4);
    const double f = global_phase_fidelity(u, v);
    CHECK(f >= 0.0);
    CHECK(f <= 1.0 + 1e-12);
    CHECK(f == doctest::Approx(global_phase_fidelity(v, u)).epsilon(1e-12));
  }
}

TEST_CASE("property: frobenius triangle inequality") {
  std::mt19937 rng(37);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t dim = 2 + rng() % 4;
    const Matrix a = test::random_matrix(rng, dim);
    const Matrix b = test::random_matrix(rng, dim);
    CHECK(frobenius_norm(a + b) <= frobenius_norm(a) + frobenius_norm(b) + 1e-12);
  }
}

TEST_CASE("unitarity_defect: zero for rotations, positive for junk") {
  std::mt19937 rng(41);
  const Matrix u = test::random_unitary(rng, 4);
  CHECK(unitarity_defect(u) < 1e-12);
  Matrix bad = u;
  bad(0, 0) += 0.1;
  CHECK(unitarity_defect(bad) > 0.01);
}
