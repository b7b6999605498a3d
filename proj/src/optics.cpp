#include "aptsim/optics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "aptsim/errors.hpp"
#include "aptsim/propagator.hpp"

namespace aptsim {

double deg_to_rad(double deg) { return deg * std::numbers::pi / 180.0; }
double rad_to_deg(double rad) { return rad * 180.0 / std::numbers::pi; }

WavePlate::WavePlate(PlateKind kind, double angle_deg) : kind_(kind) {
  if (!std::isfinite(angle_deg)) throw ValidationError("wave plate angle must be finite");
  double a = std::fmod(angle_deg, 180.0);
  if (a < 0.0) a += 180.0;
  if (a >= 180.0) a -= 180.0;
  angle_deg_ = a;
}

ComplexMatrix2 waveplate_matrix(const WavePlate& w) {
  const double x = deg_to_rad(w.angle_deg());
  ComplexMatrix2 m;
  if (w.kind() == PlateKind::QWP) {
    const double c = std::cos(x), s = std::sin(x);
    const Complex off = s * c * Complex(1.0, -1.0);
    m << Complex(c * c, s * s), off, off, Complex(s * s, c * c);
  } else {
    const double c2 = std::cos(2.0 * x), s2 = std::sin(2.0 * x);
    m << c2, s2, s2, -c2;
  }
  return m;
}

namespace {
ComplexMatrix2 hwp(double deg) { return waveplate_matrix(WavePlate(PlateKind::HWP, deg)); }
ComplexMatrix2 qwp(double deg) { return waveplate_matrix(WavePlate(PlateKind::QWP, deg)); }
}  // namespace

ComplexMatrix2 loss_operator(double xi1_deg, double xi2_deg) {
  ComplexMatrix2 m;
  m << 0.0, std::sin(2.0 * deg_to_rad(xi1_deg)), std::sin(2.0 * deg_to_rad(xi2_deg)), 0.0;
  return m;
}

ComplexMatrix2 input_stage(double theta1_deg) {
  return hwp(0.0) * hwp(22.5) * qwp(45.0) * hwp(theta1_deg) * qwp(45.0);
}

ComplexMatrix2 output_stage(double theta2_deg) {
  return qwp(45.0) * hwp(theta2_deg) * qwp(45.0) * hwp(67.5);
}

ComplexMatrix2 reconstruct(const DecompositionParams& d) {
  return kWavePlateStringPhase *
         (output_stage(d.theta2_deg) * loss_operator(d.xi1_deg, d.xi2_deg) * input_stage(d.theta1_deg));
}

DecompositionParams decompose(const AptParams& p, double t) {
  if (p.family != Family::APT) throw ValidationError("decompose: defined for the APT family only");
  const PropagatorABC abc_t = abc(p, t);
  const double r = std::hypot(abc_t.A, abc_t.B);
  if (!(r + std::abs(abc_t.C) > 0.0)) throw NumericalError("decompose: degenerate propagator");

  DecompositionParams d;
  d.lambda1 = r - abc_t.C;
  d.lambda2 = r + abc_t.C;
  d.c = std::max(d.lambda1, d.lambda2);
  d.xi1_deg = rad_to_deg(0.5 * std::asin(std::clamp(d.lambda1 / d.c, 0.0, 1.0)));
  d.xi2_deg = rad_to_deg(0.5 * std::asin(std::clamp(d.lambda2 / d.c, 0.0, 1.0)));

  const ComplexMatrix2 target = closed_form(p, t);
  const double scale = std::max(1.0, target.cwiseAbs().maxCoeff());
  const double arg = std::atan2(abc_t.B, abc_t.A);
  for (int k : {0, 1, -1, 2, -2}) {
    d.k = k;
    d.theta1_deg = WavePlate(PlateKind::HWP, rad_to_deg((arg + k * std::numbers::pi) / 4.0)).angle_deg();
    d.theta2_deg = WavePlate(PlateKind::HWP, rad_to_deg((arg - k * std::numbers::pi) / 4.0)).angle_deg();
    if (max_abs_diff(d.c * reconstruct(d), target) <= 1e-9 * scale) return d;
  }
  throw NumericalError("decompose: no branch k reproduces the propagator at t = " + std::to_string(t));
}

BeamDisplacerOutput bd_circuit(const Ket2& input, double xi1_deg, double xi2_deg) {
  const Complex h_amp = input(0);
  const Complex v_amp = input(1);

  // BD1: H displaced to the lower path, V transmitted to the upper path.
  Ket2 upper(0.0, v_amp);
  Ket2 lower(h_amp, 0.0);
  upper = hwp(xi1_deg) * upper;
  lower = hwp(xi2_deg) * lower;

  // BD2: H displaced down by one path, V transmitted.
  BeamDisplacerOutput out;
  out.path1 = Ket2(0.0, upper(1));
  out.path2 = Ket2(upper(0), lower(1));
  out.path3 = Ket2(lower(0), 0.0);
  return out;
}

}  // namespace aptsim
