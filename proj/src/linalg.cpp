#include "aptsim/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "aptsim/errors.hpp"

namespace aptsim {

namespace pauli {
ComplexMatrix2 identity() { return ComplexMatrix2::Identity(); }

ComplexMatrix2 x() {
  ComplexMatrix2 m;
  m << 0.0, 1.0, 1.0, 0.0;
  return m;
}

ComplexMatrix2 y() {
  ComplexMatrix2 m;
  m << 0.0, -kI, kI, 0.0;
  return m;
}

ComplexMatrix2 z() {
  ComplexMatrix2 m;
  m << 1.0, 0.0, 0.0, -1.0;
  return m;
}
}  // namespace pauli

ComplexMatrix4 kron(const ComplexMatrix2& a, const ComplexMatrix2& b) {
  ComplexMatrix4 out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
  return out;
}

Ket4 kron(const Ket2& a, const Ket2& b) {
  Ket4 out;
  out << a(0) * b(0), a(0) * b(1), a(1) * b(0), a(1) * b(1);
  return out;
}

namespace {

void check_bound(const ComplexMatrix2& m, double bound) {
  if (!all_finite(m) || m.cwiseAbs().maxCoeff() > bound)
    throw OverflowError("expm_series: intermediate magnitude exceeds " + std::to_string(bound));
}

}  // namespace

ComplexMatrix2 expm_series(const ComplexMatrix2& m, double t, const SeriesOptions& options) {
  if (!std::isfinite(t) || std::abs(t) > options.max_abs_time)
    throw ValidationError("expm_series: |t| must not exceed " +
                          std::to_string(options.max_abs_time));
  if (t == 0.0) return ComplexMatrix2::Identity();

  const ComplexMatrix2 x = (-kI * t) * m;
  // Induced 1-norm: max absolute column sum.
  const double norm = x.cwiseAbs().colwise().sum().maxCoeff();
  int squarings = 0;
  if (norm > 0.5) squarings = static_cast<int>(std::ceil(std::log2(norm / 0.5)));

  const ComplexMatrix2 y = x / std::ldexp(1.0, squarings);
  ComplexMatrix2 result = ComplexMatrix2::Identity();
  ComplexMatrix2 term = ComplexMatrix2::Identity();
  for (int k = 1; k <= options.order; ++k) {
    term = (term * y) / static_cast<double>(k);
    result += term;
  }
  for (int s = 0; s < squarings; ++s) {
    result = (result * result).eval();
    check_bound(result, options.overflow_bound);
  }
  return result;
}

std::pair<Complex, Complex> eig2(const ComplexMatrix2& m) {
  const Complex half_trace = 0.5 * (m(0, 0) + m(1, 1));
  const Complex det = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  const Complex disc = std::sqrt(half_trace * half_trace - det);
  Complex l1 = half_trace + disc;
  Complex l2 = half_trace - disc;
  const auto before = [](const Complex& p, const Complex& q) {
    if (p.real() != q.real()) return p.real() > q.real();
    return p.imag() > q.imag();
  };
  if (before(l2, l1)) std::swap(l1, l2);
  return {l1, l2};
}

}  // namespace aptsim
