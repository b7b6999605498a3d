#pragma once

// Jones-calculus wave plates and the wave-plate/beam-displacer realisation
// of the single-qubit APT propagator.

#include "aptsim/linalg.hpp"
#include "aptsim/model.hpp"

namespace aptsim {

enum class PlateKind { HWP, QWP };

/// A wave plate with its fast-axis setting angle in degrees, normalised to
/// [0, 180). Both Jones matrices are 180-degree periodic in the angle.
class WavePlate {
 public:
  WavePlate(PlateKind kind, double angle_deg);

  PlateKind kind() const noexcept { return kind_; }
  double angle_deg() const noexcept { return angle_deg_; }

 private:
  PlateKind kind_;
  double angle_deg_;
};

/// QWP(a) = [[cos^2 a + i sin^2 a, sin a cos a (1 - i)], [sin a cos a (1 - i), sin^2 a + i cos^2 a]]
/// HWP(b) = [[cos 2b, sin 2b], [sin 2b, -cos 2b]]
ComplexMatrix2 waveplate_matrix(const WavePlate& w);

/// L(xi1, xi2) = [[0, sin 2 xi1], [sin 2 xi2, 0]].
ComplexMatrix2 loss_operator(double xi1_deg, double xi2_deg);

/// HWP(0) HWP(22.5) QWP(45) HWP(theta1) QWP(45).
ComplexMatrix2 input_stage(double theta1_deg);
/// QWP(45) HWP(theta2) QWP(45) HWP(67.5).
ComplexMatrix2 output_stage(double theta2_deg);

/// Global phase of output_stage * M * input_stage relative to the propagator.
/// Each QWP(45) HWP(theta) QWP(45) block equals -i diag(-e^{-2i theta}, e^{2i theta}),
/// so the two blocks together contribute (-i)^2.
inline constexpr Complex kWavePlateStringPhase{-1.0, 0.0};

struct DecompositionParams {
  double theta1_deg = 0.0;
  double theta2_deg = 0.0;
  double xi1_deg = 45.0;
  double xi2_deg = 45.0;
  int k = 0;
  double c = 1.0;  // max(lambda1, lambda2); propagator = c * reconstruct(...)
  double lambda1 = 1.0;
  double lambda2 = 1.0;
};

/// Wave-plate and loss-element settings realising the APT propagator at time t.
///
/// lambda1,2 = sqrt(A^2 + B^2) -/+ C, theta1,2 = [arg(A + iB) +/- k pi] / 4,
/// c = max(lambda1, lambda2) and xi1,2 = asin(lambda1,2 / c) / 2. The branch k
/// is the smallest |k| whose reconstruction matches the closed form.
/// Throws ValidationError for the PT family.
DecompositionParams decompose(const AptParams& p, double t);

/// output_stage(theta2) * L(xi1, xi2) * input_stage(theta1), times the
/// wave-plate string phase. Equals closed_form(p, t) / c.
ComplexMatrix2 reconstruct(const DecompositionParams& d);

/// Path-resolved output of the two-beam-displacer loss element.
struct BeamDisplacerOutput {
  Ket2 path1 = Ket2::Zero();  // blocked
  Ket2 path2 = Ket2::Zero();  // transmitted
  Ket2 path3 = Ket2::Zero();  // blocked

  double survival_probability() const { return path2.squaredNorm(); }
};

/// Polarisation state through BD1, per-path HWPs (xi1 upper, xi2 lower) and BD2.
///
/// The beam displacers pass V straight through and displace H downwards. After
/// BD1, H sits in the lower path and V in the upper one. BD2 merges upper-H and
/// lower-V into path 2; upper-V exits to path 1 and lower-H to path 3.
BeamDisplacerOutput bd_circuit(const Ket2& input, double xi1_deg, double xi2_deg);

double deg_to_rad(double deg);
double rad_to_deg(double rad);

}  // namespace aptsim
