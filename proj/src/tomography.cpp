#include "aptsim/tomography.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <set>
#include <string>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include "aptsim/errors.hpp"
#include "aptsim/optics.hpp"
#include "parallel.hpp"

namespace aptsim {

Ket2 polarization_state(char label) {
  const double r = 1.0 / std::sqrt(2.0);
  switch (label) {
    case 'H': return Ket2(1.0, 0.0);
    case 'V': return Ket2(0.0, 1.0);
    case 'D': return Ket2(r, r);
    case 'R': return Ket2(r, -kI * r);
    case 'L': return Ket2(r, kI * r);
    default: break;
  }
  throw ValidationError(std::string("unknown polarisation label '") + label + "'");
}

WavePlateSetting analyzer_setting(char label) {
  switch (label) {
    case 'H': return {0.0, 0.0};
    case 'V': return {0.0, 45.0};
    case 'D': return {45.0, 22.5};
    case 'R': return {0.0, 22.5};
    case 'L': return {45.0, 0.0};
    default: break;
  }
  throw ValidationError(std::string("unknown polarisation label '") + label + "'");
}

Ket2 analyzer_state(const WavePlateSetting& s) {
  const ComplexMatrix2 m = waveplate_matrix(WavePlate(PlateKind::HWP, s.hwp_deg)) *
                           waveplate_matrix(WavePlate(PlateKind::QWP, s.qwp_deg));
  return m.adjoint() * Ket2(1.0, 0.0);
}

const std::vector<ProjectionBasis>& basis_set() {
  static const std::vector<ProjectionBasis> bases = [] {
    std::vector<ProjectionBasis> out;
    for (const char* label : {"HH", "HV", "VV", "VH", "RH", "RV", "DV", "DH", "DR", "DD", "RD", "HD",
                              "VD", "VL", "HL", "RL"}) {
      ProjectionBasis b;
      b.label = label;
      b.ket = kron(polarization_state(label[0]), polarization_state(label[1]));
      b.settings = {analyzer_setting(label[0]), analyzer_setting(label[1])};
      out.push_back(std::move(b));
    }
    return out;
  }();
  return bases;
}

const ProjectionBasis& find_basis(std::string_view label) {
  for (const auto& b : basis_set())
    if (b.label == label) return b;
  throw ValidationError("unknown projection basis '" + std::string(label) + "'");
}

namespace {

double projection(const ComplexMatrix4& rho, const Ket4& ket) {
  return (ket.adjoint() * rho * ket)(0).real();
}

void require_complete(std::span<const CountRecord> counts) {
  std::set<std::string> seen;
  for (const auto& r : counts) {
    find_basis(r.basis);
    if (r.total == 0) throw ValidationError("count record for " + r.basis + " has total 0");
    seen.insert(r.basis);
  }
  if (seen.size() != basis_set().size())
    throw ValidationError("counts cover " + std::to_string(seen.size()) + " of 16 projection bases");
}

constexpr double kMinMean = 1e-300;

}  // namespace

std::vector<CountRecord> simulate_counts(const DensityMatrix& rho, std::uint64_t total,
                                         std::uint64_t seed, CountNoise noise) {
  if (total == 0) throw ValidationError("simulate_counts: total must be > 0");
  std::mt19937_64 rng(seed);
  std::vector<CountRecord> out;
  out.reserve(basis_set().size());
  for (const auto& b : basis_set()) {
    const double p = std::clamp(projection(rho.matrix(), b.ket), 0.0, 1.0);
    const double mean = static_cast<double>(total) * p;
    CountRecord r{b.label, mean, 0, total};
    if (noise == CountNoise::Noiseless) {
      r.observed = static_cast<std::uint64_t>(std::llround(mean));
    } else if (mean > 0.0) {
      std::poisson_distribution<std::uint64_t> dist(mean);
      r.observed = dist(rng);
    }
    out.push_back(std::move(r));
  }
  return out;
}

double log_likelihood(const DensityMatrix& rho, std::span<const CountRecord> counts) {
  double ll = 0.0;
  for (const auto& r : counts) {
    const double mu = std::max(kMinMean, static_cast<double>(r.total) * projection(rho.matrix(), find_basis(r.basis).ket));
    ll += (r.observed > 0 ? static_cast<double>(r.observed) * std::log(mu) : 0.0) - mu;
  }
  return ll;
}

DensityMatrix linear_inversion(std::span<const CountRecord> counts) {
  require_complete(counts);
  const std::array<ComplexMatrix2, 4> paulis{pauli::identity(), pauli::x(), pauli::y(), pauli::z()};
  std::array<ComplexMatrix4, 16> ops;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) ops[4 * i + j] = kron(paulis[i], paulis[j]) / 4.0;

  const auto n = static_cast<Eigen::Index>(counts.size());
  Eigen::MatrixXd design(n, 16);
  Eigen::VectorXd freq(n);
  for (Eigen::Index row = 0; row < n; ++row) {
    const auto& r = counts[static_cast<std::size_t>(row)];
    const Ket4& ket = find_basis(r.basis).ket;
    for (int k = 0; k < 16; ++k) design(row, k) = projection(ops[k], ket);
    freq(row) = static_cast<double>(r.observed) / static_cast<double>(r.total);
  }
  const Eigen::VectorXd coeff = design.colPivHouseholderQr().solve(freq);

  ComplexMatrix4 rho = ComplexMatrix4::Zero();
  for (int k = 0; k < 16; ++k) rho += coeff(k) * ops[k];
  rho = 0.5 * (rho + rho.adjoint()).eval();

  Eigen::SelfAdjointEigenSolver<ComplexMatrix4> es(rho);
  Eigen::Vector4d lam = es.eigenvalues().cwiseMax(0.0);
  if (!(lam.sum() > 0.0)) return DensityMatrix::maximally_mixed();
  lam /= lam.sum();
  const ComplexMatrix4 clipped = es.eigenvectors() * lam.cast<Complex>().asDiagonal() * es.eigenvectors().adjoint();
  return DensityMatrix::normalize_trusted(clipped);
}

namespace detail {

namespace {
constexpr std::array<std::pair<int, int>, 6> kOffDiagonal{{{1, 0}, {2, 0}, {2, 1}, {3, 0}, {3, 1}, {3, 2}}};
}

ComplexMatrix4 lower_factor(const MleParams& x) {
  ComplexMatrix4 l = ComplexMatrix4::Zero();
  for (int i = 0; i < 4; ++i) l(i, i) = x[i];
  for (std::size_t k = 0; k < kOffDiagonal.size(); ++k) {
    const auto [i, j] = kOffDiagonal[k];
    l(i, j) = Complex(x[4 + 2 * k], x[5 + 2 * k]);
  }
  return l;
}

MleParams pack_factor(const ComplexMatrix4& lower) {
  MleParams x{};
  for (int i = 0; i < 4; ++i) x[i] = lower(i, i).real();
  for (std::size_t k = 0; k < kOffDiagonal.size(); ++k) {
    const auto [i, j] = kOffDiagonal[k];
    x[4 + 2 * k] = lower(i, j).real();
    x[5 + 2 * k] = lower(i, j).imag();
  }
  return x;
}

double mle_objective(const MleParams& x, std::span<const CountRecord> counts, MleParams* grad) {
  const ComplexMatrix4 l = lower_factor(x);
  const ComplexMatrix4 a = l * l.adjoint();
  const double tau = a.trace().real();
  if (!(tau > 0.0)) return -std::numeric_limits<double>::infinity();
  const ComplexMatrix4 rho = a / tau;

  double ll = 0.0;
  ComplexMatrix4 g = ComplexMatrix4::Zero();
  for (const auto& r : counts) {
    const Ket4& ket = find_basis(r.basis).ket;
    const double total = static_cast<double>(r.total);
    const double mu = std::max(kMinMean, total * projection(rho, ket));
    const double n = static_cast<double>(r.observed);
    ll += (r.observed > 0 ? n * std::log(mu) : 0.0) - mu;
    if (grad) g += (total * (n / mu - 1.0)) * (ket * ket.adjoint());
  }
  if (grad) {
    const double g_rho = (g * rho).trace().real();
    const ComplexMatrix4 d = ((g - g_rho * ComplexMatrix4::Identity()) / tau) * l;
    for (int i = 0; i < 4; ++i) (*grad)[i] = 2.0 * d(i, i).real();
    for (std::size_t k = 0; k < kOffDiagonal.size(); ++k) {
      const auto [i, j] = kOffDiagonal[k];
      (*grad)[4 + 2 * k] = 2.0 * d(i, j).real();
      (*grad)[5 + 2 * k] = 2.0 * d(i, j).imag();
    }
  }
  return ll;
}

}  // namespace detail

MleResult mle_reconstruct(std::span<const CountRecord> counts, const MleOptions& options) {
  using Vec = Eigen::Matrix<double, 16, 1>;
  using Mat = Eigen::Matrix<double, 16, 16>;
  require_complete(counts);

  // Start slightly inside the cone so the Cholesky factor exists.
  constexpr double kMix = 1e-6;
  const ComplexMatrix4 start =
      (1.0 - kMix) * linear_inversion(counts).matrix() + (kMix / 4.0) * ComplexMatrix4::Identity();
  Eigen::LLT<ComplexMatrix4> llt(start);
  if (llt.info() != Eigen::Success) throw NumericalError("mle_reconstruct: initial factorisation failed");

  detail::MleParams xp = detail::pack_factor(llt.matrixL().toDenseMatrix());
  const auto to_vec = [](const detail::MleParams& p) { return Eigen::Map<const Vec>(p.data()); };
  const auto from_vec = [](const Vec& v) {
    detail::MleParams p;
    Eigen::Map<Vec>(p.data()) = v;
    return p;
  };
  // Minimise f = -log L.
  const auto objective = [&](const Vec& v, Vec* g) {
    detail::MleParams grad{};
    const double ll = detail::mle_objective(from_vec(v), counts, g ? &grad : nullptr);
    if (g) *g = -to_vec(grad);
    return -ll;
  };

  Vec x = to_vec(xp);
  Vec g;
  double f = objective(x, &g);
  Mat h_inv = Mat::Identity();
  int stalls = 0;
  std::size_t iter = 0;
  bool first_update = true;

  while (stalls < options.stall_iterations) {
    if (iter >= options.max_iterations)
      throw ConvergenceError("mle_reconstruct: no convergence after " + std::to_string(iter) + " iterations");
    ++iter;
    if (g.isZero(0.0)) break;

    Vec dir = -h_inv * g;
    if (dir.dot(g) >= 0.0) {
      h_inv.setIdentity();
      dir = -g;
    }

    double step = 1.0;
    double f_new = f;
    Vec x_new = x;
    bool accepted = false;
    for (int halvings = 0; halvings < 80; ++halvings, step *= 0.5) {
      x_new = x + step * dir;
      f_new = objective(x_new, nullptr);
      if (std::isfinite(f_new) && f_new <= f + 1e-4 * step * dir.dot(g)) {
        accepted = true;
        break;
      }
    }
    if (!accepted) {
      // No descent along the quasi-Newton direction; restart from steepest
      // descent next time and count this as a stalled iteration.
      h_inv.setIdentity();
      first_update = true;
      ++stalls;
      continue;
    }

    Vec g_new;
    f_new = objective(x_new, &g_new);
    const double improvement = f - f_new;
    const Vec s = x_new - x;
    const Vec y = g_new - g;
    const double sy = s.dot(y);
    if (sy > 1e-300) {
      if (first_update) {
        h_inv = Mat::Identity() * (sy / y.squaredNorm());
        first_update = false;
      }
      const double rho_k = 1.0 / sy;
      const Mat v = Mat::Identity() - rho_k * y * s.transpose();
      h_inv = v.transpose() * h_inv * v + rho_k * s * s.transpose();
    }
    x = x_new;
    f = f_new;
    g = g_new;
    stalls = improvement < options.tolerance ? stalls + 1 : 0;
  }

  const ComplexMatrix4 l = detail::lower_factor(from_vec(x));
  MleResult result{DensityMatrix::normalize_trusted(l * l.adjoint()), -f, iter, std::nullopt};
  return result;
}

double fidelity(const DensityMatrix& a, const DensityMatrix& b) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix4> ea(a.matrix());
  const Eigen::Vector4d sa = ea.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  const ComplexMatrix4 sqrt_a = ea.eigenvectors() * sa.cast<Complex>().asDiagonal() * ea.eigenvectors().adjoint();
  ComplexMatrix4 m = sqrt_a * b.matrix() * sqrt_a;
  m = 0.5 * (m + m.adjoint()).eval();
  Eigen::SelfAdjointEigenSolver<ComplexMatrix4> em(m, Eigen::EigenvaluesOnly);
  const double root_sum = em.eigenvalues().cwiseMax(0.0).cwiseSqrt().sum();
  return std::clamp(root_sum * root_sum, 0.0, 1.0);
}

}  // namespace aptsim

namespace aptsim {

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

namespace {
MleResult one_trial(const DensityMatrix& truth, std::uint64_t total, std::uint64_t seed,
                    std::size_t i, CountNoise noise) {
  const auto counts = simulate_counts(truth, total, derive_seed(seed, i), noise);
  MleResult r = mle_reconstruct(counts);
  r.fidelity_vs_truth = fidelity(truth, r.rho_hat);
  return r;
}
}  // namespace

std::vector<MleResult> reconstruct_trials(const DensityMatrix& truth, std::uint64_t total,
                                          std::uint64_t seed, std::size_t trials, CountNoise noise) {
  std::vector<std::optional<MleResult>> slots(trials);
  detail::parallel_for(trials, detail::Schedule::Dynamic,
                       [&](std::size_t i) { slots[i] = one_trial(truth, total, seed, i, noise); });
  std::vector<MleResult> out;
  out.reserve(trials);
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

namespace reference {
std::vector<MleResult> reconstruct_trials(const DensityMatrix& truth, std::uint64_t total,
                                          std::uint64_t seed, std::size_t trials, CountNoise noise) {
  std::vector<MleResult> out;
  out.reserve(trials);
  for (std::size_t i = 0; i < trials; ++i) out.push_back(one_trial(truth, total, seed, i, noise));
  return out;
}
}  // namespace reference

}  // namespace aptsim
