#pragma once

// Experiment runner behind the `aptsim` command line tool. Each run_* call
// writes its output files and returns their paths; the same configuration
// and seed always produce byte-identical files.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "aptsim/dynamics.hpp"
#include "aptsim/optics.hpp"
#include "aptsim/tomography.hpp"

namespace aptsim {

enum class Command { Figure, Sweep, Decompose, Tomography };
enum class OutputFormat { Csv, Json };

struct RunConfig {
  Command command = Command::Figure;
  std::optional<std::string> figure_id;
  std::optional<double> a1;
  std::optional<double> a2;
  bool identity_qubit2 = false;
  std::optional<double> t_max;
  std::optional<double> dt;
  std::uint64_t seed = 0;
  std::uint64_t total = 10000;
  std::filesystem::path output_path = ".";
  OutputFormat format = OutputFormat::Csv;

  // sweep: a2 range (and optionally an a1 range) at fixed grid
  std::optional<double> a1_min, a1_max, a1_step;
  std::optional<double> a2_min, a2_max, a2_step;

  // tomography
  bool noiseless = false;
  std::size_t points = 10;
  std::optional<std::filesystem::path> counts_in;
  std::optional<std::filesystem::path> counts_out;
};

struct CurveSpec {
  QubitEvolution qubit1;
  QubitEvolution qubit2;
};

struct FigureDefinition {
  std::string id;
  std::vector<CurveSpec> curves;
  double t_max = 14.0;
  double dt = 0.01;
};

std::span<const std::string_view> figure_ids();

/// Parameter sets and time grid for a figure id. ValidationError if unknown.
FigureDefinition figure_definition(std::string_view id);

/// "fig<id>_<a1>_<a2>", with "id" standing in for an identity-evolved qubit.
std::string curve_stem(std::string_view figure_id, const CurveSpec& curve);

/// One CSV per curve (header t,concurrence,norm) in cfg.output_path, or a
/// single fig<id>.json with --format json.
std::vector<std::filesystem::path> run_figure(const RunConfig& cfg);

struct SweepRow {
  double a1 = 0.0;
  double a2 = 0.0;
  double t = 0.0;
  double concurrence = 0.0;
};

/// Rectangular (a1, a2, t) grid. OpenMP over (a1, a2) pairs.
std::vector<SweepRow> sweep_rows(const RunConfig& cfg);
std::filesystem::path run_sweep(const RunConfig& cfg);

struct DecompositionRow {
  double a = 0.0;
  double t = 0.0;
  DecompositionParams params;
};

std::vector<DecompositionRow> decomposition_rows(const RunConfig& cfg);
std::filesystem::path run_decompose(const RunConfig& cfg);

struct TomographyPoint {
  double t = 0.0;
  double concurrence_theory = 0.0;
  double concurrence_mle = 0.0;
  MleResult mle;
};

/// Bell state evolved to each time point, counts simulated with
/// derive_seed(cfg.seed, index), reconstructed by MLE.
std::vector<TomographyPoint> tomography_points(const RunConfig& cfg);

/// With cfg.counts_in set, reconstructs that count file and writes the MLE
/// JSON; otherwise writes the report for tomography_points(cfg).
std::filesystem::path run_tomography(const RunConfig& cfg);

/// Dispatch on cfg.command; returns the written paths.
std::vector<std::filesystem::path> run(const RunConfig& cfg);

}  // namespace aptsim
