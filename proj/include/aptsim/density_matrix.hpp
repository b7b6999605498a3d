#pragma once

#include <string>

#include "aptsim/linalg.hpp"

namespace aptsim {

struct StateTolerances {
  double hermiticity = 1e-12;
  double trace = 1e-12;
  double min_eigenvalue = -1e-10;
};

/// Two-qubit density matrix in the basis {|HH>, |HV>, |VH>, |VV>}
/// (equivalently {|00>, |01>, |10>, |11>}).
///
/// Always Hermitian, unit-trace and positive semidefinite within
/// StateTolerances. Checked construction goes through from_matrix(); the
/// library's own evolution code builds states that satisfy the invariants by
/// construction.
class DensityMatrix {
 public:
  DensityMatrix();  // |HH><HH|

  /// Throws InvalidStateError if m violates the invariants.
  static DensityMatrix from_matrix(const ComplexMatrix4& m, const StateTolerances& tol = {});

  /// |psi><psi| / <psi|psi>. Throws InvalidStateError for a zero vector.
  static DensityMatrix pure(const Ket4& psi);

  static DensityMatrix maximally_mixed();

  /// Hermitian part of m divided by its real trace. No PSD check; callers
  /// guarantee positivity (e.g. congruence of a valid state).
  static DensityMatrix normalize_trusted(const ComplexMatrix4& m);

  const ComplexMatrix4& matrix() const noexcept { return rho_; }
  Complex operator()(int i, int j) const { return rho_(i, j); }

  /// Empty string when m satisfies the invariants, otherwise the reason.
  static std::string check(const ComplexMatrix4& m, const StateTolerances& tol = {});

 private:
  explicit DensityMatrix(const ComplexMatrix4& m) : rho_(m) {}
  ComplexMatrix4 rho_;
};

/// (|HV> + |VH>) / sqrt(2).
Ket4 bell_ket();
DensityMatrix bell_state();

}  // namespace aptsim
