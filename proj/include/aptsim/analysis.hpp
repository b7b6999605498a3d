#pragma once

// Post-processing of sampled concurrence curves: extremum location and
// period detection.

#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace aptsim {

using ScalarCurve = std::function<double(double)>;

/// Indices of strict interior local maxima (ties resolved to the first
/// sample of a plateau).
std::vector<std::size_t> local_maxima(std::span<const double> values);
std::vector<std::size_t> local_minima(std::span<const double> values);

struct Extremum {
  double t = 0.0;
  double value = 0.0;
};

/// Golden-section search for the extremum of f on [lo, hi].
Extremum refine_extremum(const ScalarCurve& f, double lo, double hi, bool maximize,
                         double t_tol = 1e-10);

/// Interior maxima of a sampled curve, each refined on [t_{i-1}, t_{i+1}].
std::vector<Extremum> refined_maxima(const ScalarCurve& f, std::span<const double> times,
                                     std::span<const double> values);
std::vector<Extremum> refined_minima(const ScalarCurve& f, std::span<const double> times,
                                     std::span<const double> values);

/// Mean spacing of consecutive extremum times; nullopt with fewer than two.
std::optional<double> mean_spacing(std::span<const Extremum> extrema);

/// max over window samples t of |f(t + period) - f(t)|.
double period_mismatch(const ScalarCurve& f, std::span<const double> window, double period);

struct PeriodCandidate {
  double period = 0.0;
  double mismatch = 0.0;
};

/// Best recurrence of f with period in [min_period, max_period].
///
/// Shifts on a grid of spacing `step` are scanned first; each local minimum of
/// the mismatch is then refined continuously within +/- step, so a period that
/// is not a multiple of the grid spacing is still found exactly.
PeriodCandidate best_period(const ScalarCurve& f, std::span<const double> window,
                            double min_period, double max_period, double step);

}  // namespace aptsim
