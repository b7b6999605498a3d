#pragma once

#include <variant>

#include "aptsim/linalg.hpp"
#include "aptsim/model.hpp"

namespace aptsim {

/// Real coefficients of the APT propagator [[A - iB, C], [C, A + iB]].
/// A^2 + B^2 - C^2 = 1 in every regime.
struct PropagatorABC {
  double A = 1.0;
  double B = 0.0;
  double C = 0.0;
  Regime regime = Regime::Unbroken;
};

/// Closed-form coefficients at time t (units of 1/gamma). APT family only.
PropagatorABC abc(const AptParams& p, double t, double eps = kDefaultEpTolerance);

/// exp(-i H t). APT uses the closed form; PT falls back to expm_series.
ComplexMatrix2 closed_form(const AptParams& p, double t);

/// Marker for a qubit that does not evolve (propagator is the identity).
struct IdentityEvolution {};

using QubitEvolution = std::variant<AptParams, IdentityEvolution>;

ComplexMatrix2 single_qubit(const QubitEvolution& q, double t);

/// U1(t) (x) U2(t).
ComplexMatrix4 two_qubit(const QubitEvolution& q1, const QubitEvolution& q2, double t);

}  // namespace aptsim
