#include "aptsim/dynamics.hpp"

#include <cmath>
#include <string>
#include <variant>

#include "aptsim/entanglement.hpp"
#include "aptsim/errors.hpp"
#include "dynamics_detail.hpp"
#include "parallel.hpp"

namespace aptsim {

void EvolutionSpec::validate() const {
  if (!(dt > 0.0) || !std::isfinite(dt)) throw ValidationError("dt must be > 0");
  if (!(t_max >= 0.0) || !std::isfinite(t_max)) throw ValidationError("t_max must be >= 0");
  for (const auto* q : {&qubit1, &qubit2})
    if (const auto* p = std::get_if<AptParams>(q)) p->validate();
}

EvolvedState evolve(const DensityMatrix& initial, const QubitEvolution& q1,
                    const QubitEvolution& q2, double t) {
  const ComplexMatrix4 u = two_qubit(q1, q2, t);
  const ComplexMatrix4 m = u * initial.matrix() * u.adjoint();
  const double norm = m.trace().real();
  if (!std::isfinite(norm))
    throw OverflowError("evolve: non-finite norm at t = " + std::to_string(t));
  if (!(norm > kNormUnderflow))
    throw DegenerateNormError("evolve: state norm underflowed at t = " + std::to_string(t), t);
  return {DensityMatrix::normalize_trusted(m), norm};
}

DensityMatrix evolve_state(const DensityMatrix& initial, const QubitEvolution& q1,
                           const QubitEvolution& q2, double t) {
  return evolve(initial, q1, q2, t).rho;
}

std::vector<double> sample_times(double t_max, double dt) {
  if (!(dt > 0.0)) throw ValidationError("dt must be > 0");
  if (!(t_max >= 0.0)) throw ValidationError("t_max must be >= 0");
  const auto n = static_cast<std::size_t>(std::floor(t_max / dt + 1e-9)) + 1;
  std::vector<double> times(n);
  for (std::size_t i = 0; i < n; ++i) times[i] = static_cast<double>(i) * dt;
  return times;
}

double concurrence_at(const QubitEvolution& q1, const QubitEvolution& q2,
                      const DensityMatrix& initial, double t) {
  return concurrence(evolve_state(initial, q1, q2, t)).value;
}

namespace detail {

Trajectory allocate(const EvolutionSpec& spec) {
  spec.validate();
  Trajectory traj;
  traj.times = sample_times(spec.t_max, spec.dt);
  traj.concurrence.assign(traj.size(), 0.0);
  traj.unnormalized_norm.assign(traj.size(), 0.0);
  if (spec.keep_states) traj.states.emplace(traj.size());
  return traj;
}

void fill_sample(const EvolutionSpec& spec, Trajectory& traj, std::size_t i) {
  const EvolvedState s = evolve(spec.initial, spec.qubit1, spec.qubit2, traj.times[i]);
  traj.concurrence[i] = concurrence(s.rho).value;
  traj.unnormalized_norm[i] = s.unnormalized_norm;
  if (traj.states) (*traj.states)[i] = s.rho;
}

}  // namespace detail

Trajectory run(const EvolutionSpec& spec) {
  Trajectory traj = detail::allocate(spec);
  detail::parallel_for(traj.size(), detail::Schedule::Static,
                       [&](std::size_t i) { detail::fill_sample(spec, traj, i); });
  return traj;
}

std::vector<Trajectory> run_batch(std::span<const EvolutionSpec> specs) {
  std::vector<Trajectory> out(specs.size());
  detail::parallel_for(specs.size(), detail::Schedule::Dynamic, [&](std::size_t i) {
    Trajectory traj = detail::allocate(specs[i]);
    for (std::size_t j = 0; j < traj.size(); ++j) detail::fill_sample(specs[i], traj, j);
    out[i] = std::move(traj);
  });
  return out;
}

}  // namespace aptsim
