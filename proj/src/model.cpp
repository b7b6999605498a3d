#include "aptsim/model.hpp"

#include <cmath>
#include <string>

#include "aptsim/errors.hpp"

namespace aptsim {

void AptParams::validate() const {
  if (!std::isfinite(a) || a <= 0.0)
    throw ValidationError("Hermiticity degree a must be > 0, got " + std::to_string(a));
  if (!std::isfinite(gamma) || gamma <= 0.0)
    throw ValidationError("energy scale gamma must be > 0, got " + std::to_string(gamma));
}

ComplexMatrix2 hamiltonian(const AptParams& p) {
  p.validate();
  if (p.family == Family::APT) return p.gamma * (kI * pauli::x() + p.a * pauli::z());
  return p.gamma * (pauli::x() - kI * p.a * pauli::z());
}

Regime classify(const AptParams& p, double eps) {
  if (eps < 0.0) throw ValidationError("classify: tolerance must be >= 0");
  p.validate();
  if (std::abs(p.a - 1.0) <= eps) return Regime::ExceptionalPoint;
  const bool above = p.a > 1.0;
  if (p.family == Family::APT) return above ? Regime::Unbroken : Regime::Broken;
  return above ? Regime::Broken : Regime::Unbroken;
}

std::string_view to_string(Regime r) {
  switch (r) {
    case Regime::Unbroken: return "unbroken";
    case Regime::ExceptionalPoint: return "exceptional-point";
    case Regime::Broken: return "broken";
  }
  return "?";
}

std::string_view to_string(Family f) { return f == Family::APT ? "APT" : "PT"; }

}  // namespace aptsim
