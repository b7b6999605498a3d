#pragma once

#include <string_view>

#include "aptsim/linalg.hpp"

namespace aptsim {

enum class Family { APT, PT };

enum class Regime { Unbroken, ExceptionalPoint, Broken };

inline constexpr double kDefaultEpTolerance = 1e-9;

/// Single-qubit Hamiltonian parameters.
///
/// `a` is the Hermiticity degree (ratio of the sigma_z coefficient to the
/// non-Hermitian sigma_x coefficient) and `gamma` the energy scale. Times
/// throughout the library are measured in units of 1/gamma.
struct AptParams {
  double a = 1.0;
  double gamma = 1.0;
  Family family = Family::APT;

  static AptParams apt(double a, double gamma = 1.0) { return {a, gamma, Family::APT}; }
  static AptParams pt(double a, double gamma = 1.0) { return {a, gamma, Family::PT}; }

  /// Throws ValidationError unless a > 0 and gamma > 0 (both finite).
  void validate() const;
};

/// APT: gamma (i sigma_x + a sigma_z).  PT: gamma (sigma_x - i a sigma_z).
ComplexMatrix2 hamiltonian(const AptParams& p);

/// APT is broken below a = 1 and unbroken above; PT is mirrored.
/// |a - 1| <= eps is the exceptional point for both families.
Regime classify(const AptParams& p, double eps = kDefaultEpTolerance);

std::string_view to_string(Regime r);
std::string_view to_string(Family f);

}  // namespace aptsim
