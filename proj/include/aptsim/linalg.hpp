#pragma once

// Fixed-size dense complex kernels for one- and two-qubit operators.

#include <cmath>
#include <complex>
#include <utility>

#include <Eigen/Core>

namespace aptsim {

using Complex = std::complex<double>;
using ComplexMatrix2 = Eigen::Matrix<Complex, 2, 2>;
using ComplexMatrix4 = Eigen::Matrix<Complex, 4, 4>;
using Ket2 = Eigen::Matrix<Complex, 2, 1>;
using Ket4 = Eigen::Matrix<Complex, 4, 1>;

inline constexpr Complex kI{0.0, 1.0};

namespace pauli {
ComplexMatrix2 identity();
ComplexMatrix2 x();
ComplexMatrix2 y();
ComplexMatrix2 z();
}  // namespace pauli

ComplexMatrix4 kron(const ComplexMatrix2& a, const ComplexMatrix2& b);
Ket4 kron(const Ket2& a, const Ket2& b);

struct SeriesOptions {
  int order = 18;                 // Taylor terms after scaling to norm <= 1/2
  double max_abs_time = 100.0;
  double overflow_bound = 1e150;  // any intermediate entry above this throws
};

/// exp(-i * m * t) by scaling and squaring a fixed-order Taylor series.
///
/// Independent of any closed form; used as the reference the analytic
/// propagators are checked against. Throws ValidationError when |t| exceeds
/// options.max_abs_time and OverflowError when an intermediate entry exceeds
/// options.overflow_bound.
ComplexMatrix2 expm_series(const ComplexMatrix2& m, double t,
                           const SeriesOptions& options = {});

/// Eigenvalues of a 2x2 matrix, ordered by real part then imaginary part,
/// both descending.
std::pair<Complex, Complex> eig2(const ComplexMatrix2& m);

template <typename Derived>
bool all_finite(const Eigen::MatrixBase<Derived>& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (!std::isfinite(m(i, j).real()) || !std::isfinite(m(i, j).imag())) return false;
  return true;
}

template <typename A, typename B>
double max_abs_diff(const Eigen::MatrixBase<A>& a, const Eigen::MatrixBase<B>& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace aptsim
