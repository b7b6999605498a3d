#include <doctest.h>

#include <random>

#include "aptsim/errors.hpp"
#include "aptsim/linalg.hpp"
#include "oracles.hpp"

using namespace aptsim;

namespace {

ComplexMatrix2 random_matrix(std::mt19937_64& rng, double scale = 1.0) {
  std::normal_distribution<double> n(0.0, scale);
  ComplexMatrix2 m;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) m(i, j) = {n(rng), n(rng)};
  return m;
}

}  // namespace

TEST_CASE("pauli algebra") {
  const auto x = pauli::x(), y = pauli::y(), z = pauli::z(), id = pauli::identity();
  CHECK(max_abs_diff(x * x, id) == 0.0);
  CHECK(max_abs_diff(y * y, id) == 0.0);
  CHECK(max_abs_diff(z * z, id) == 0.0);
  CHECK(max_abs_diff(x * y, kI * z) == 0.0);
}

TEST_CASE("kron of pauli matrices") {
  const ComplexMatrix4 xz = kron(pauli::x(), pauli::z());
  ComplexMatrix4 expected = ComplexMatrix4::Zero();
  expected(0, 2) = 1.0;
  expected(1, 3) = -1.0;
  expected(2, 0) = 1.0;
  expected(3, 1) = -1.0;
  CHECK(max_abs_diff(xz, expected) == 0.0);

  Ket2 h(1.0, 0.0), v(0.0, 1.0);
  const Ket4 hv = kron(h, v);
  CHECK(hv(1) == Complex(1.0));
  CHECK(hv.squaredNorm() == doctest::Approx(1.0));
}

TEST_CASE("kron mixed-product property") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const auto a = random_matrix(rng), b = random_matrix(rng), c = random_matrix(rng), d = random_matrix(rng);
    CHECK(max_abs_diff(kron(a, b) * kron(c, d), kron(ComplexMatrix2(a * c), ComplexMatrix2(b * d))) < 1e-12);
  }
}

TEST_CASE("expm_series matches an independent Pade exponential") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const auto m = random_matrix(rng);
    const double t = std::uniform_real_distribution<double>(-3.0, 3.0)(rng);
    const ComplexMatrix2 ours = expm_series(m, t);
    const oracle::M2 ref = oracle::expm(m, t);
    const double scale = std::max(1.0, ref.cwiseAbs().maxCoeff());
    CHECK(oracle::max_abs(ours, ref) / scale < 1e-11);
  }
}

TEST_CASE("expm_series group property and determinant") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 50; ++trial) {
    const auto m = random_matrix(rng, 0.5);
    const double s = 0.7, t = -1.3;
    const ComplexMatrix2 lhs = expm_series(m, s + t);
    const ComplexMatrix2 rhs = expm_series(m, s) * expm_series(m, t);
    CHECK(max_abs_diff(lhs, rhs) / std::max(1.0, lhs.cwiseAbs().maxCoeff()) < 1e-12);
    // det exp(X) = exp(tr X)
    const Complex det = expm_series(m, t).determinant();
    const Complex expected = std::exp(-kI * t * m.trace());
    CHECK(std::abs(det - expected) / std::abs(expected) < 1e-12);
  }
}

TEST_CASE("expm_series edge cases") {
  const ComplexMatrix2 h = pauli::x();
  CHECK(max_abs_diff(expm_series(h, 0.0), pauli::identity()) == 0.0);
  CHECK(max_abs_diff(expm_series(ComplexMatrix2::Zero(), 5.0), pauli::identity()) == 0.0);
  CHECK_THROWS_AS(expm_series(h, 101.0), ValidationError);
  CHECK_THROWS_AS(expm_series(h, -101.0), ValidationError);
  // exp(-i (i 400 sz) t) grows as e^{400 t}; overflows the bound.
  const ComplexMatrix2 growing = kI * 400.0 * pauli::z();
  CHECK_THROWS_AS(expm_series(growing, 1.0), OverflowError);
}

TEST_CASE("eig2 ordering") {
  ComplexMatrix2 m;
  m << 1.0, 2.0, 2.0, 1.0;  // eigenvalues 3, -1
  const auto [l1, l2] = eig2(m);
  CHECK(std::abs(l1 - Complex(3.0)) < 1e-14);
  CHECK(std::abs(l2 - Complex(-1.0)) < 1e-14);

  // i sx + 0.5 sz: eigenvalues +/- i sqrt(0.75), larger imaginary part first.
  const ComplexMatrix2 apt = kI * pauli::x() + 0.5 * pauli::z();
  const auto [m1, m2] = eig2(apt);
  CHECK(std::abs(m1 - Complex(0.0, std::sqrt(0.75))) < 1e-14);
  CHECK(std::abs(m2 - Complex(0.0, -std::sqrt(0.75))) < 1e-14);
}

TEST_CASE("all_finite") {
  ComplexMatrix2 m = pauli::identity();
  CHECK(all_finite(m));
  m(0, 1) = Complex(std::nan(""), 0.0);
  CHECK_FALSE(all_finite(m));
}

TEST_CASE("kron small cases") {
  CHECK(max_abs_diff(kron(pauli::identity(), pauli::identity()), ComplexMatrix4::Identity()) == 0.0);

  Ket4 bell = Ket4::Zero();
  bell(1) = bell(2) = 1.0 / std::sqrt(2.0);
  CHECK(max_abs_diff(kron(pauli::x(), pauli::x()) * bell, bell) == 0.0);

  ComplexMatrix2 d = ComplexMatrix2::Zero();
  d(0, 0) = 2.0;
  d(1, 1) = 3.0;
  ComplexMatrix4 expected = ComplexMatrix4::Zero();
  expected.diagonal() << 2.0, 2.0, 3.0, 3.0;
  CHECK(max_abs_diff(kron(d, pauli::identity()), expected) == 0.0);
}

TEST_CASE("expm_series diagonal case") {
  const ComplexMatrix2 u = expm_series(pauli::z(), M_PI);
  CHECK(max_abs_diff(u, -pauli::identity()) < 1e-14);
}

TEST_CASE("eig2 on the APT family") {
  const auto ep = eig2(kI * pauli::x() + 1.0 * pauli::z());
  CHECK(std::abs(ep.first) < 1e-7);  // square-root branch point: O(sqrt(eps)) error is expected
  CHECK(std::abs(ep.second) < 1e-7);
  const auto broken = eig2(kI * pauli::x() + 0.8 * pauli::z());
  CHECK(std::abs(broken.first - Complex(0.0, 0.6)) < 1e-14);
  CHECK(std::abs(broken.second - Complex(0.0, -0.6)) < 1e-14);
  const auto unbroken = eig2(kI * pauli::x() + 2.0 * pauli::z());
  CHECK(std::abs(unbroken.first - std::sqrt(3.0)) < 1e-14);
  CHECK(std::abs(unbroken.second + std::sqrt(3.0)) < 1e-14);
}
