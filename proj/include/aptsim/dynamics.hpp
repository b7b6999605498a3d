#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "aptsim/density_matrix.hpp"
#include "aptsim/propagator.hpp"

namespace aptsim {

inline constexpr double kNormUnderflow = 1e-300;

struct EvolutionSpec {
  QubitEvolution qubit1 = AptParams::apt(1.2);
  QubitEvolution qubit2 = AptParams::apt(1.2);
  double t_max = 14.0;
  double dt = 0.01;
  DensityMatrix initial = bell_state();
  bool keep_states = false;

  /// Throws ValidationError unless dt > 0, t_max >= 0 and both qubit
  /// parameter sets are valid.
  void validate() const;
};

struct Trajectory {
  std::vector<double> times;
  std::vector<double> concurrence;
  std::vector<double> unnormalized_norm;  // Tr[U(t) rho(0) U(t)^dagger]
  std::optional<std::vector<DensityMatrix>> states;

  std::size_t size() const noexcept { return times.size(); }
};

struct EvolvedState {
  DensityMatrix rho;
  double unnormalized_norm = 1.0;
};

/// U rho U^dagger / Tr[U rho U^dagger] with U = U1(t) (x) U2(t).
/// Throws DegenerateNormError when the trace drops below kNormUnderflow.
EvolvedState evolve(const DensityMatrix& initial, const QubitEvolution& q1,
                    const QubitEvolution& q2, double t);

DensityMatrix evolve_state(const DensityMatrix& initial, const QubitEvolution& q1,
                           const QubitEvolution& q2, double t);

/// {0, dt, 2 dt, ...} up to t_max, computed as i * dt (no accumulation).
std::vector<double> sample_times(double t_max, double dt);

/// Samples the trajectory on sample_times(spec.t_max, spec.dt). Every sample
/// is propagated from t = 0 with the closed-form propagator, so samples are
/// independent; they are distributed over OpenMP threads.
Trajectory run(const EvolutionSpec& spec);

/// One trajectory per spec, specs distributed over OpenMP threads.
std::vector<Trajectory> run_batch(std::span<const EvolutionSpec> specs);

/// Concurrence of the evolved state at a single time.
double concurrence_at(const QubitEvolution& q1, const QubitEvolution& q2,
                      const DensityMatrix& initial, double t);

namespace reference {
/// Single-threaded run(); kept as the reference the parallel kernel is
/// tested and benchmarked against.
Trajectory run(const EvolutionSpec& spec);
std::vector<Trajectory> run_batch(std::span<const EvolutionSpec> specs);
}  // namespace reference

}  // namespace aptsim
