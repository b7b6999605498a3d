#include "aptsim/propagator.hpp"

#include <cmath>

#include "aptsim/errors.hpp"

namespace aptsim {

PropagatorABC abc(const AptParams& p, double t, double eps) {
  if (p.family != Family::APT) throw ValidationError("abc: defined for the APT family only");
  if (!std::isfinite(t)) throw ValidationError("abc: time must be finite");
  const Regime regime = classify(p, eps);
  const double s = p.gamma * t;
  const double a = p.a;
  // (a - 1)(a + 1) keeps precision near the exceptional point.
  const double w = (a - 1.0) * (a + 1.0);

  switch (regime) {
    case Regime::ExceptionalPoint:
      return {1.0, s, s, regime};
    case Regime::Unbroken: {
      const double omega = std::sqrt(w);
      const double sn = std::sin(omega * s) / omega;
      return {std::cos(omega * s), a * sn, sn, regime};
    }
    case Regime::Broken: {
      const double omega = std::sqrt(-w);
      const double sh = std::sinh(omega * s) / omega;
      return {std::cosh(omega * s), a * sh, sh, regime};
    }
  }
  return {};
}

ComplexMatrix2 closed_form(const AptParams& p, double t) {
  if (p.family == Family::PT) return expm_series(hamiltonian(p), t);
  const PropagatorABC c = abc(p, t);
  ComplexMatrix2 u;
  u << Complex(c.A, -c.B), c.C, c.C, Complex(c.A, c.B);
  return u;
}

ComplexMatrix2 single_qubit(const QubitEvolution& q, double t) {
  if (std::holds_alternative<IdentityEvolution>(q)) return ComplexMatrix2::Identity();
  return closed_form(std::get<AptParams>(q), t);
}

ComplexMatrix4 two_qubit(const QubitEvolution& q1, const QubitEvolution& q2, double t) {
  return kron(single_qubit(q1, t), single_qubit(q2, t));
}

}  // namespace aptsim
