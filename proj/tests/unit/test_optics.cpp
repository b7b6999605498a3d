#include <doctest.h>

#include <cmath>

#include "aptsim/errors.hpp"
#include "aptsim/optics.hpp"
#include "aptsim/propagator.hpp"

using namespace aptsim;

TEST_CASE("wave-plate matrices") {
  const double r = 1.0 / std::sqrt(2.0);
  ComplexMatrix2 h225, h675;
  h225 << r, r, r, -r;
  h675 << -r, r, r, r;
  CHECK(max_abs_diff(waveplate_matrix({PlateKind::HWP, 22.5}), h225) < 1e-15);
  CHECK(max_abs_diff(waveplate_matrix({PlateKind::HWP, 67.5}), h675) < 1e-15);

  // QWP(0) is diag(1, i); both plates are 180-degree periodic.
  ComplexMatrix2 q0 = ComplexMatrix2::Zero();
  q0(0, 0) = 1.0;
  q0(1, 1) = kI;
  CHECK(max_abs_diff(waveplate_matrix({PlateKind::QWP, 0.0}), q0) < 1e-15);
  CHECK(WavePlate(PlateKind::HWP, 200.0).angle_deg() == doctest::Approx(20.0));
  CHECK(WavePlate(PlateKind::HWP, -10.0).angle_deg() == doctest::Approx(170.0));
  CHECK(max_abs_diff(waveplate_matrix({PlateKind::QWP, 30.0}), waveplate_matrix({PlateKind::QWP, 210.0})) < 1e-14);
  CHECK_THROWS_AS(WavePlate(PlateKind::QWP, std::nan("")), ValidationError);
}

TEST_CASE("QWP-HWP-QWP sandwich is diagonal") {
  // diag(-e^{-2i theta}, e^{2i theta}) up to the global phase -i carried by the
  // printed QWP convention.
  for (double theta : {0.0, 10.0, 33.3, 90.0, 140.0}) {
    const ComplexMatrix2 q = waveplate_matrix({PlateKind::QWP, 45.0});
    const ComplexMatrix2 m = q * waveplate_matrix({PlateKind::HWP, theta}) * q;
    const double th = deg_to_rad(theta);
    ComplexMatrix2 expected = ComplexMatrix2::Zero();
    expected(0, 0) = -std::exp(-2.0 * kI * th);
    expected(1, 1) = std::exp(2.0 * kI * th);
    CHECK(max_abs_diff(m, -kI * expected) < 1e-14);
  }
}

TEST_CASE("decomposition at t = 0 and at the exceptional point") {
  const auto d0 = decompose(AptParams::apt(1.2), 0.0);
  CHECK(d0.lambda1 == doctest::Approx(1.0));
  CHECK(d0.lambda2 == doctest::Approx(1.0));
  CHECK(d0.xi1_deg == doctest::Approx(45.0));
  CHECK(d0.xi2_deg == doctest::Approx(45.0));
  CHECK(max_abs_diff(reconstruct(d0), pauli::identity()) < 1e-12);

  const auto d = decompose(AptParams::apt(1.0), 1.0);
  CHECK(d.lambda1 == doctest::Approx(std::sqrt(2.0) - 1.0).epsilon(1e-14));
  CHECK(d.lambda2 == doctest::Approx(std::sqrt(2.0) + 1.0).epsilon(1e-14));
  CHECK(d.c == doctest::Approx(std::sqrt(2.0) + 1.0).epsilon(1e-14));
  // theta1 = (pi/4 + k pi) / 4
  CHECK(d.theta1_deg == doctest::Approx(rad_to_deg((M_PI / 4 + d.k * M_PI) / 4)).epsilon(1e-12));
}

TEST_CASE("quarter period of the unbroken regime") {
  const double a = 1.5, w = std::sqrt(a * a - 1.0);
  const auto d = decompose(AptParams::apt(a), M_PI / (2.0 * w));
  CHECK(d.lambda1 == doctest::Approx((a - 1.0) / w).epsilon(1e-12));
  CHECK(d.lambda2 == doctest::Approx((a + 1.0) / w).epsilon(1e-12));
}

TEST_CASE("round trip and positive proportionality") {
  for (double a : {0.5, 0.8, 1.0, 1.2, 1.8, 3.0})
    for (double t : {0.01, 0.1, 0.5, 1.0, 2.0, 5.0, 7.7}) {
      const AptParams p = AptParams::apt(a);
      const auto d = decompose(p, t);
      const ComplexMatrix2 u = closed_form(p, t);
      CHECK(max_abs_diff(d.c * reconstruct(d), u) < 1e-9 * std::max(1.0, u.cwiseAbs().maxCoeff()));
      CHECK(d.c >= 1.0 - 1e-12);
      CHECK(d.xi1_deg >= 0.0);
      CHECK(d.xi1_deg <= 45.0 + 1e-12);
    }
  const auto d = decompose(AptParams::apt(1.2), 1.0);
  const ComplexMatrix2 u = closed_form(AptParams::apt(1.2), 1.0);
  const ComplexMatrix2 r = reconstruct(d);
  const Complex ratio = u(0, 0) / r(0, 0);
  CHECK(ratio.real() > 0.0);
  CHECK(std::abs(ratio.imag()) < 1e-12);
  CHECK_THROWS_AS(decompose(AptParams::pt(0.5), 1.0), ValidationError);
}

TEST_CASE("beam-displacer loss element") {
  const Ket2 h(1.0, 0.0), v(0.0, 1.0);
  for (double x1 : {0.0, 12.0, 30.0, 45.0})
    for (double x2 : {5.0, 22.5, 45.0}) {
      const auto oh = bd_circuit(h, x1, x2);
      const auto ov = bd_circuit(v, x1, x2);
      const double s1 = std::sin(2 * deg_to_rad(x1)), c1 = std::cos(2 * deg_to_rad(x1));
      const double s2 = std::sin(2 * deg_to_rad(x2)), c2 = std::cos(2 * deg_to_rad(x2));
      CHECK(std::abs(oh.path2(1) - s2) < 1e-15);
      CHECK(std::abs(oh.path2(0)) < 1e-15);
      CHECK(std::abs(oh.path3(0) - c2) < 1e-15);
      CHECK(std::abs(ov.path2(0) - s1) < 1e-15);
      CHECK(std::abs(ov.path1(1) + c1) < 1e-15);
      // energy is conserved across the three paths
      CHECK(oh.path1.squaredNorm() + oh.path2.squaredNorm() + oh.path3.squaredNorm() == doctest::Approx(1.0));

      const ComplexMatrix2 l = loss_operator(x1, x2);
      const Ket2 in = Ket2(Complex(0.3, 0.1), Complex(-0.5, 0.8)).normalized();
      CHECK(max_abs_diff(bd_circuit(in, x1, x2).path2, l * in) < 1e-12);
    }
  const auto swap = bd_circuit(Ket2(0.6, 0.8), 45.0, 45.0);
  CHECK(swap.survival_probability() == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(std::abs(swap.path2(0) - 0.8) < 1e-15);
}

TEST_CASE("stage matrices are unitary") {
  for (double th : {0.0, 17.0, 100.0}) {
    const ComplexMatrix2 a = input_stage(th), b = output_stage(th);
    CHECK(max_abs_diff(a * a.adjoint(), pauli::identity()) < 1e-14);
    CHECK(max_abs_diff(b * b.adjoint(), pauli::identity()) < 1e-14);
  }
}
