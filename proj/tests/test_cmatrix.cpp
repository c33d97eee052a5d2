#include <doctest.h>

#include <cmath>

#include "qgame/cmatrix.hpp"
#include "qgame/game.hpp"
#include "qgame/rng.hpp"

using namespace qgame;

namespace {

CMatrix random_matrix(SeededRng& rng, std::size_t n) {
  CMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m(i, j) = Complex{rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
  return m;
}

CMatrix random_hermitian(SeededRng& rng, std::size_t n) {
  const CMatrix m = random_matrix(rng, n);
  return Complex{0.5, 0.0} * (m + adjoint(m));
}

}  // namespace

TEST_CASE("tensor product basics") {
  const CMatrix i2 = CMatrix::identity(2);
  CHECK(max_abs_diff(tensor_product(i2, i2), CMatrix::identity(4)) == 0.0);

  const CMatrix zz = tensor_product(pauli_z(), pauli_z());
  CMatrix expect(4, 4);
  expect(0, 0) = 1.0;
  expect(1, 1) = -1.0;
  expect(2, 2) = -1.0;
  expect(3, 3) = 1.0;
  CHECK(max_abs_diff(zz, expect) == 0.0);

  CMatrix p0(2, 2), p1(2, 2);
  p0(0, 0) = 1.0;  // |0><0|
  p1(1, 1) = 1.0;  // |1><1|
  const CMatrix p01 = tensor_product(p0, p1);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      CHECK(p01(i, j) == (i == 1 && j == 1 ? Complex{1.0, 0.0} : Complex{0.0, 0.0}));
}

TEST_CASE("tensor product is associative") {
  SeededRng rng(11);
  for (int k = 0; k < 10; ++k) {
    const CMatrix a = random_matrix(rng, 2), b = random_matrix(rng, 2), c = random_matrix(rng, 2);
    CHECK(max_abs_diff(tensor_product(a, tensor_product(b, c)),
                       tensor_product(tensor_product(a, b), c)) <= 1e-14);
  }
}

TEST_CASE("adjoint") {
  const Complex i{0.0, 1.0};
  const CMatrix m{{0.0, i}, {i, 0.0}};
  const CMatrix ma = adjoint(m);
  CHECK(ma(0, 1) == -i);
  CHECK(ma(1, 0) == -i);
  CHECK(max_abs_diff(adjoint(ma), m) == 0.0);

  SeededRng rng(12);
  const CMatrix h = random_hermitian(rng, 4);
  CHECK(max_abs_diff(adjoint(h), h) <= 1e-15);

  for (int k = 0; k < 20; ++k) {
    const CMatrix a = random_matrix(rng, 4), b = random_matrix(rng, 4);
    CHECK(max_abs_diff(adjoint(a * b), adjoint(b) * adjoint(a)) <= 1e-14);
  }
}

TEST_CASE("strategy unitary is inverted by its adjoint") {
  SeededRng rng(13);
  for (int k = 0; k < 50; ++k) {
    const CMatrix u = strategy_unitary(
        StrategyParams(rng.uniform(0.0, kPi), rng.uniform(-kPi, kPi), rng.uniform(-kPi, kPi)));
    CHECK(max_abs_diff(u * adjoint(u), CMatrix::identity(2)) <= 1e-12);
  }
}

TEST_CASE("trace") {
  CHECK(trace(CMatrix::identity(4)) == Complex{4.0, 0.0});
  CHECK_THROWS_AS(trace(CMatrix(2, 3)), DimensionError);

  SeededRng rng(14);
  for (int k = 0; k < 20; ++k) {
    const CMatrix a = random_matrix(rng, 4), b = random_matrix(rng, 4);
    CHECK(std::abs(trace(a * b) - trace(b * a)) <= 1e-12);
  }
}

TEST_CASE("dimension conformance errors") {
  CHECK_THROWS_AS(CMatrix(2, 2) * CMatrix(3, 3), DimensionError);
  CHECK_THROWS_AS(CMatrix(2, 2) + CMatrix(2, 3), DimensionError);
  CHECK_THROWS_AS(max_abs_diff(CMatrix(2, 2), CMatrix(4, 4)), DimensionError);
}

TEST_CASE("hermiticity check tolerance boundary") {
  SeededRng rng(15);
  CMatrix h = random_hermitian(rng, 4);
  CHECK(is_hermitian(h));
  h(0, 1) += Complex{0.0, 1e-9};
  CHECK(!is_hermitian(h));            // deviation 1e-9 > 1e-10
  CHECK(is_hermitian(h, 1e-8));
}

TEST_CASE("hermitian eigenvalues against Newton-sum identities") {
  SeededRng rng(16);
  for (int k = 0; k < 20; ++k) {
    const CMatrix h = random_hermitian(rng, 4);
    const auto ev = hermitian_eigenvalues(h);
    REQUIRE(ev.size() == 4);
    CMatrix power = CMatrix::identity(4);
    for (int n = 1; n <= 4; ++n) {
      power = power * h;
      double sum = 0.0;
      for (double v : ev) sum += std::pow(v, n);
      CHECK(std::abs(sum - trace(power).real()) <= 1e-10);
    }
  }
}

TEST_CASE("eigenvalues of known matrices") {
  CMatrix d(3, 3);
  d(0, 0) = -2.0;
  d(1, 1) = 0.5;
  d(2, 2) = 7.0;
  const auto ev = hermitian_eigenvalues(d);
  CHECK(ev[0] == doctest::Approx(-2.0).epsilon(1e-14));
  CHECK(ev[1] == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(ev[2] == doctest::Approx(7.0).epsilon(1e-14));

  // rank-1 projector: spectrum {1, 0, 0, 0}
  CMatrix v(4, 1);
  v(0, 0) = Complex{0.5, 0.0};
  v(3, 0) = Complex{0.0, std::sqrt(3.0) / 2.0};
  const auto pev = hermitian_eigenvalues(v * adjoint(v));
  CHECK(std::abs(pev[3] - 1.0) <= 1e-12);
  CHECK(std::abs(pev[0]) <= 1e-12);
}

TEST_CASE("positive semidefinite check") {
  SeededRng rng(17);
  const CMatrix b = random_matrix(rng, 4);
  const CMatrix psd = adjoint(b) * b;
  CHECK(is_positive_semidefinite(psd, 1e-10));
  const double lift = hermitian_eigenvalues(psd).front() + 1.0;
  const CMatrix shifted = psd - (Complex{lift, 0.0} * CMatrix::identity(4));
  CHECK(!is_positive_semidefinite(shifted, 1e-8));
}
