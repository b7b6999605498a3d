#include "aptsim/dynamics.hpp"
#include "../dynamics_detail.hpp"

namespace aptsim::reference {

Trajectory run(const EvolutionSpec& spec) {
  Trajectory traj = detail::allocate(spec);
  for (std::size_t i = 0; i < traj.size(); ++i) detail::fill_sample(spec, traj, i);
  return traj;
}

std::vector<Trajectory> run_batch(std::span<const EvolutionSpec> specs) {
  std::vector<Trajectory> out;
  out.reserve(specs.size());
  for (const auto& spec : specs) out.push_back(reference::run(spec));
  return out;
}

}  // namespace aptsim::reference
