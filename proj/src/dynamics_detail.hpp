#pragma once

#include <cstddef>

#include "aptsim/dynamics.hpp"

namespace aptsim::detail {

Trajectory allocate(const EvolutionSpec& spec);
void fill_sample(const EvolutionSpec& spec, Trajectory& traj, std::size_t i);

}  // namespace aptsim::detail
