#include "aptsim/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <string>

#include <Eigen/Eigenvalues>

#include "aptsim/errors.hpp"

namespace aptsim {

namespace {

constexpr double kClamp = -1e-10;
constexpr double kPurity = 1e-12;

double clamp_eigenvalue(double x, const char* what) {
  if (x < kClamp) throw InvalidStateError(std::string(what) + ": eigenvalue " + std::to_string(x) + " below clamp");
  return std::max(x, 0.0);
}

ComplexMatrix4 spin_flip(const ComplexMatrix4& rho) {
  const ComplexMatrix4 yy = kron(pauli::y(), pauli::y());
  return yy * rho.conjugate() * yy;
}

}  // namespace

double concurrence_pure(const Ket4& psi) {
  const double n = psi.squaredNorm();
  if (!(n > 0.0)) throw InvalidStateError("concurrence of a zero vector");
  return 2.0 * std::abs(psi(0) * psi(3) - psi(1) * psi(2)) / n;
}

ConcurrenceReport concurrence(const DensityMatrix& rho) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix4> es(rho.matrix());
  if (es.info() != Eigen::Success) throw NumericalError("concurrence: eigensolver failed");
  Eigen::Vector4d p = es.eigenvalues();  // ascending
  for (int i = 0; i < 4; ++i) p(i) = clamp_eigenvalue(p(i), "concurrence(rho)");

  ConcurrenceReport report;
  if (p(3) >= 1.0 - kPurity) {
    const double c = std::min(1.0, concurrence_pure(es.eigenvectors().col(3)));
    report.value = c;
    report.r_eigenvalues = {c * c, 0.0, 0.0, 0.0};
    return report;
  }

  const ComplexMatrix4 sqrt_rho =
      es.eigenvectors() * p.cwiseSqrt().cast<Complex>().asDiagonal() * es.eigenvectors().adjoint();
  ComplexMatrix4 m = sqrt_rho * spin_flip(rho.matrix()) * sqrt_rho;
  m = 0.5 * (m + m.adjoint()).eval();
  Eigen::SelfAdjointEigenSolver<ComplexMatrix4> rs(m, Eigen::EigenvaluesOnly);
  if (rs.info() != Eigen::Success) throw NumericalError("concurrence: eigensolver failed on R");

  std::array<double, 4> lam{};
  for (int i = 0; i < 4; ++i) lam[i] = clamp_eigenvalue(rs.eigenvalues()(i), "concurrence(R)");
  std::sort(lam.begin(), lam.end(), std::greater<>());
  report.r_eigenvalues = lam;
  const double c = std::sqrt(lam[0]) - std::sqrt(lam[1]) - std::sqrt(lam[2]) - std::sqrt(lam[3]);
  report.value = std::clamp(c, 0.0, 1.0);
  return report;
}

double analytic_concurrence_identical(double a, double t) {
  if (!(a > 1.0)) throw ValidationError("analytic_concurrence_identical: requires a > 1");
  const double w = (a - 1.0) * (a + 1.0);
  const double sn = std::sin(std::sqrt(w) * t);
  const double s = sn * sn;
  return w * w / (w * w + 8.0 * w * s + 8.0 * s * s);
}

double concurrence_period(double a, Family family) {
  if (family == Family::APT) {
    if (!(a > 1.0)) throw ValidationError("concurrence_period: APT requires a > 1");
    return std::numbers::pi / std::sqrt((a - 1.0) * (a + 1.0));
  }
  if (!(a > 0.0 && a < 1.0)) throw ValidationError("concurrence_period: PT requires 0 < a < 1");
  return std::numbers::pi / std::sqrt((1.0 - a) * (1.0 + a));
}

double concurrence_minimum_identical(double a) {
  if (!(a > 1.0)) throw ValidationError("concurrence_minimum_identical: requires a > 1");
  const double w = (a - 1.0) * (a + 1.0);
  // w^2 / (w^2 + 8w + 8), rearranged so a -> infinity gives 1 instead of inf/inf.
  return 1.0 / (1.0 + 8.0 / w + 8.0 / (w * w));
}

double ep_concurrence(double t) {
  if (!(t >= 0.0)) throw ValidationError("ep_concurrence: requires t >= 0");
  const double t2 = t * t;
  return 1.0 / (1.0 + 8.0 * t2 + 8.0 * t2 * t2);
}

}  // namespace aptsim
