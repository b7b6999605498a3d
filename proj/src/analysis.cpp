#include "aptsim/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "aptsim/errors.hpp"

namespace aptsim {

namespace {

std::vector<std::size_t> local_extrema(std::span<const double> v, bool maxima) {
  std::vector<std::size_t> out;
  const auto better = [&](double x, double y) { return maxima ? x > y : x < y; };
  std::size_t i = 1;
  while (i + 1 < v.size()) {
    if (!better(v[i], v[i - 1]) || v[i] == v[i - 1]) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j + 1 < v.size() && v[j + 1] == v[i]) ++j;
    if (j + 1 < v.size() && better(v[i], v[j + 1])) out.push_back(i);
    i = j + 1;
  }
  return out;
}

std::vector<Extremum> refine_all(const ScalarCurve& f, std::span<const double> times,
                                 std::span<const double> values, bool maximize) {
  std::vector<Extremum> out;
  for (std::size_t i : local_extrema(values, maximize))
    out.push_back(refine_extremum(f, times[i - 1], times[i + 1], maximize));
  return out;
}

}  // namespace

std::vector<std::size_t> local_maxima(std::span<const double> values) {
  return local_extrema(values, true);
}

std::vector<std::size_t> local_minima(std::span<const double> values) {
  return local_extrema(values, false);
}

Extremum refine_extremum(const ScalarCurve& f, double lo, double hi, bool maximize, double t_tol) {
  if (!(hi > lo)) throw ValidationError("refine_extremum: empty bracket");
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  const auto score = [&](double t) { return maximize ? f(t) : -f(t); };

  double a = lo, b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = score(c), fd = score(d);
  while (b - a > t_tol) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = score(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = score(d);
    }
  }
  // Keep the best point seen, including the bracket ends.
  Extremum best{c, fc};
  for (double t : {d, lo, hi, 0.5 * (a + b)}) {
    const double s = score(t);
    if (s > best.value) best = {t, s};
  }
  if (!maximize) best.value = -best.value;
  return best;
}

std::vector<Extremum> refined_maxima(const ScalarCurve& f, std::span<const double> times,
                                     std::span<const double> values) {
  return refine_all(f, times, values, true);
}

std::vector<Extremum> refined_minima(const ScalarCurve& f, std::span<const double> times,
                                     std::span<const double> values) {
  return refine_all(f, times, values, false);
}

std::optional<double> mean_spacing(std::span<const Extremum> extrema) {
  if (extrema.size() < 2) return std::nullopt;
  return (extrema.back().t - extrema.front().t) / static_cast<double>(extrema.size() - 1);
}

double period_mismatch(const ScalarCurve& f, std::span<const double> window, double period) {
  double worst = 0.0;
  for (double t : window) worst = std::max(worst, std::abs(f(t + period) - f(t)));
  return worst;
}

PeriodCandidate best_period(const ScalarCurve& f, std::span<const double> window,
                            double min_period, double max_period, double step) {
  if (!(step > 0.0) || !(max_period >= min_period) || !(min_period > 0.0))
    throw ValidationError("best_period: invalid search range");

  // Sample f once on the extended grid so the coarse scan is a pure shift.
  const double t0 = window.empty() ? 0.0 : window.front();
  const double t1 = window.empty() ? 0.0 : window.back();
  const auto n_window = static_cast<std::size_t>(std::floor((t1 - t0) / step + 1e-9)) + 1;
  const auto n_shift = static_cast<std::size_t>(std::floor(max_period / step + 1e-9));
  std::vector<double> grid(n_window + n_shift);
  for (std::size_t i = 0; i < grid.size(); ++i) grid[i] = f(t0 + static_cast<double>(i) * step);

  const auto first_shift = static_cast<std::size_t>(std::max(1.0, std::ceil(min_period / step - 1e-9)));
  std::vector<double> coarse(n_shift + 1, std::numeric_limits<double>::infinity());
  for (std::size_t k = first_shift; k <= n_shift; ++k) {
    double worst = 0.0;
    for (std::size_t i = 0; i < n_window; ++i) worst = std::max(worst, std::abs(grid[i + k] - grid[i]));
    coarse[k] = worst;
  }

  // Refine only the most promising coarse minima; each refinement costs a
  // full window of fresh evaluations per golden-section step.
  constexpr std::size_t kRefineCount = 8;
  std::vector<std::size_t> minima;
  for (std::size_t k = first_shift; k <= n_shift; ++k) {
    const bool left_ok = k == first_shift || coarse[k] <= coarse[k - 1];
    const bool right_ok = k == n_shift || coarse[k] <= coarse[k + 1];
    if (left_ok && right_ok) minima.push_back(k);
  }
  std::sort(minima.begin(), minima.end(),
            [&](std::size_t x, std::size_t y) { return coarse[x] < coarse[y]; });
  if (minima.size() > kRefineCount) minima.resize(kRefineCount);

  std::vector<double> base(window.size());
  for (std::size_t i = 0; i < window.size(); ++i) base[i] = f(window[i]);
  const auto mismatch = [&](double T) {
    double worst = 0.0;
    for (std::size_t i = 0; i < window.size(); ++i)
      worst = std::max(worst, std::abs(f(window[i] + T) - base[i]));
    return worst;
  };

  PeriodCandidate best{0.0, std::numeric_limits<double>::infinity()};
  for (std::size_t k : minima) {
    const double centre = static_cast<double>(k) * step;
    const double lo = std::max(min_period, centre - step);
    const double hi = std::min(max_period, centre + step);
    PeriodCandidate cand{centre, coarse[k]};
    if (hi > lo) {
      const Extremum e = refine_extremum(mismatch, lo, hi, false, 1e-12);
      if (e.value < cand.mismatch) cand = {e.t, e.value};
    }
    if (cand.mismatch < best.mismatch) best = cand;
  }
  return best;
}

}  // namespace aptsim
