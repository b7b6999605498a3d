#pragma once

#include <array>

#include "aptsim/density_matrix.hpp"
#include "aptsim/model.hpp"

namespace aptsim {

struct ConcurrenceReport {
  double value = 0.0;
  // Eigenvalues of R = rho (Y (x) Y) rho* (Y (x) Y), descending, clamped >= 0.
  std::array<double, 4> r_eigenvalues{};
};

/// Wootters concurrence.
///
/// Pure states (largest eigenvalue within 1e-12 of one) use
/// C = 2|c00 c11 - c01 c10| on the leading eigenvector. Mixed states use the
/// Hermitian matrix sqrt(rho) rho~ sqrt(rho), which shares its spectrum with R.
/// Eigenvalues in (-1e-10, 0) are clamped to zero; anything more negative, in
/// rho or in R, raises InvalidStateError.
ConcurrenceReport concurrence(const DensityMatrix& rho);

/// 2|c00 c11 - c01 c10| / <psi|psi> for an unnormalised ket.
double concurrence_pure(const Ket4& psi);

/// Bell input, both qubits under the same APT Hamiltonian with a > 1:
///   C(t) = w^2 / (w^2 + 8 w s + 8 s^2),  w = a^2 - 1,  s = sin^2(sqrt(w) t).
/// Throws ValidationError for a <= 1.
double analytic_concurrence_identical(double a, double t);

/// pi / sqrt(a^2 - 1) for APT (a > 1), pi / sqrt(1 - a^2) for PT (0 < a < 1).
/// Throws ValidationError outside the unbroken regime.
double concurrence_period(double a, Family family);

/// Minimum of analytic_concurrence_identical (reached at s = 1).
double concurrence_minimum_identical(double a);

/// a -> 1 limit of analytic_concurrence_identical: 1 / (1 + 8 t^2 + 8 t^4).
double ep_concurrence(double t);

}  // namespace aptsim
