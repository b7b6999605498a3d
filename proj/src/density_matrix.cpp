#include "aptsim/density_matrix.hpp"

#include <cmath>

#include <Eigen/Eigenvalues>

#include "aptsim/errors.hpp"

namespace aptsim {

DensityMatrix::DensityMatrix() : rho_(ComplexMatrix4::Zero()) { rho_(0, 0) = 1.0; }

std::string DensityMatrix::check(const ComplexMatrix4& m, const StateTolerances& tol) {
  if (!all_finite(m)) return "non-finite entries";
  const double herm = max_abs_diff(m, m.adjoint());
  if (herm > tol.hermiticity) return "not Hermitian (deviation " + std::to_string(herm) + ")";
  const Complex tr = m.trace();
  if (std::abs(tr - 1.0) > tol.trace) return "trace " + std::to_string(tr.real()) + " != 1";
  const ComplexMatrix4 h = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix4> es(h, Eigen::EigenvaluesOnly);
  const double lo = es.eigenvalues().minCoeff();
  if (lo < tol.min_eigenvalue) return "negative eigenvalue " + std::to_string(lo);
  return {};
}

DensityMatrix DensityMatrix::from_matrix(const ComplexMatrix4& m, const StateTolerances& tol) {
  if (auto why = check(m, tol); !why.empty()) throw InvalidStateError("invalid density matrix: " + why);
  return DensityMatrix(0.5 * (m + m.adjoint()));
}

DensityMatrix DensityMatrix::pure(const Ket4& psi) {
  const double n = psi.squaredNorm();
  if (!(n > 0.0) || !std::isfinite(n)) throw InvalidStateError("pure state from a zero or non-finite vector");
  return DensityMatrix((psi * psi.adjoint()) / n);
}

DensityMatrix DensityMatrix::maximally_mixed() { return DensityMatrix(ComplexMatrix4::Identity() / 4.0); }

DensityMatrix DensityMatrix::normalize_trusted(const ComplexMatrix4& m) {
  const ComplexMatrix4 h = 0.5 * (m + m.adjoint());
  return DensityMatrix(h / h.trace().real());
}

Ket4 bell_ket() {
  const double r = 1.0 / std::sqrt(2.0);
  Ket4 k;
  k << 0.0, r, r, 0.0;
  return k;
}

DensityMatrix bell_state() { return DensityMatrix::pure(bell_ket()); }

}  // namespace aptsim
