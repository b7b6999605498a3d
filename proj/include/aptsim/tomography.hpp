#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "aptsim/density_matrix.hpp"

namespace aptsim {

/// Analyzer setting for one photon: light passes the QWP, then the HWP, then
/// a polarising beam splitter transmitting H.
struct WavePlateSetting {
  double qwp_deg = 0.0;
  double hwp_deg = 0.0;
};

struct ProjectionBasis {
  std::string label;  // e.g. "HV": photon 1 projected on H, photon 2 on V
  Ket4 ket;
  std::array<WavePlateSetting, 2> settings;
};

/// H, V, D = (H+V)/sqrt2, R = (H-iV)/sqrt2, L = (H+iV)/sqrt2.
/// Throws ValidationError for any other label.
Ket2 polarization_state(char label);
WavePlateSetting analyzer_setting(char label);

/// State transmitted by an analyzer: (HWP(h) QWP(q))^dagger |H>.
Ket2 analyzer_state(const WavePlateSetting& s);

/// The sixteen two-photon projections HH, HV, VV, VH, RH, RV, DV, DH, DR, DD,
/// RD, HD, VD, VL, HL, RL, in that order.
const std::vector<ProjectionBasis>& basis_set();

/// Throws ValidationError for labels outside the set.
const ProjectionBasis& find_basis(std::string_view label);

struct CountRecord {
  std::string basis;
  std::optional<double> expected;  // total * <b|rho|b>, known only for simulated data
  std::uint64_t observed = 0;
  std::uint64_t total = 10000;
};

enum class CountNoise { Poisson, Noiseless };

/// One record per basis. Poisson draws come from a generator owned by the
/// call and seeded with `seed`; Noiseless rounds the expectation.
/// Throws ValidationError for total == 0.
std::vector<CountRecord> simulate_counts(const DensityMatrix& rho, std::uint64_t total,
                                         std::uint64_t seed, CountNoise noise = CountNoise::Poisson);

/// Sum over records of n log(mu) - mu, mu = total <b|rho|b>.
double log_likelihood(const DensityMatrix& rho, std::span<const CountRecord> counts);

/// Least-squares inversion of the frequencies, Hermitised, with negative
/// eigenvalues clipped and the trace renormalised.
DensityMatrix linear_inversion(std::span<const CountRecord> counts);

struct MleOptions {
  std::size_t max_iterations = 100000;
  double tolerance = 1e-10;      // log-likelihood improvement
  int stall_iterations = 3;      // consecutive small improvements to stop
};

struct MleResult {
  DensityMatrix rho_hat;
  double log_likelihood = 0.0;
  std::size_t iterations = 0;
  std::optional<double> fidelity_vs_truth;
};

/// Maximum-likelihood density matrix.
///
/// rho = L L^dagger / tr(L L^dagger) with L lower-triangular (16 real
/// parameters), so every iterate is a valid state. Starts from
/// linear_inversion and runs BFGS with an analytic gradient until the
/// improvement stays below options.tolerance for options.stall_iterations
/// consecutive iterations. Throws ValidationError when the records do not
/// cover all sixteen bases and ConvergenceError at the iteration cap.
MleResult mle_reconstruct(std::span<const CountRecord> counts, const MleOptions& options = {});

/// Uhlmann fidelity (tr sqrt(sqrt(a) b sqrt(a)))^2, clamped to [0, 1].
double fidelity(const DensityMatrix& a, const DensityMatrix& b);

/// Deterministic per-index seed (splitmix64 of seed + index) so parallel
/// trials do not share generator state.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

/// Simulate counts from `truth` with derive_seed(seed, i) for i < trials,
/// reconstruct each, and fill fidelity_vs_truth. Trials run on OpenMP threads.
std::vector<MleResult> reconstruct_trials(const DensityMatrix& truth, std::uint64_t total,
                                          std::uint64_t seed, std::size_t trials,
                                          CountNoise noise = CountNoise::Poisson);

namespace reference {
std::vector<MleResult> reconstruct_trials(const DensityMatrix& truth, std::uint64_t total,
                                          std::uint64_t seed, std::size_t trials,
                                          CountNoise noise = CountNoise::Poisson);
}  // namespace reference

namespace detail {
/// Parameter packing used by the MLE; exposed for gradient tests.
using MleParams = std::array<double, 16>;
ComplexMatrix4 lower_factor(const MleParams& x);
MleParams pack_factor(const ComplexMatrix4& lower);
/// Log-likelihood of rho(x) and its gradient with respect to x.
double mle_objective(const MleParams& x, std::span<const CountRecord> counts, MleParams* grad);
}  // namespace detail

}  // namespace aptsim
