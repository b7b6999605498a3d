#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "aptsim/errors.hpp"
#include "aptsim/experiments.hpp"

namespace {

using aptsim::Command;
using aptsim::RunConfig;

void add_common(CLI::App& sub, RunConfig& cfg, std::string& format) {
  sub.add_option("--a1", cfg.a1, "parameter a of qubit 1");
  sub.add_option("--a2", cfg.a2, "parameter a of qubit 2");
  sub.add_flag("--identity-qubit2", cfg.identity_qubit2, "qubit 2 does not evolve");
  sub.add_option("--t-max", cfg.t_max, "last sample time (units of 1/gamma)");
  sub.add_option("--dt", cfg.dt, "sample spacing");
  sub.add_option("--out", cfg.output_path, "output directory or file");
  sub.add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Two-qubit entanglement under anti-parity-time symmetric evolution"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string format = "csv";
  std::string figure;
  std::uint32_t total = 10000;

  auto* fig = app.add_subcommand("figure", "curve data for one figure, or a custom --a1/--a2 pair");
  auto* sweep = app.add_subcommand("sweep", "(a1, a2, t, concurrence) grid");
  auto* dec = app.add_subcommand("decompose", "wave-plate settings of the propagator");
  auto* tomo = app.add_subcommand("tomography", "simulated counts and maximum-likelihood reconstruction");

  for (auto* sub : {fig, sweep, dec, tomo}) add_common(*sub, cfg, format);
  for (auto* sub : {fig, sweep}) {
    sub->add_option("--figure", figure, "figure id")
        ->check(CLI::IsMember({"2a", "2b", "3a", "3b", "4a", "4b", "4c", "4d", "A4", "A5"}));
  }
  sweep->add_option("--a1-min", cfg.a1_min);
  sweep->add_option("--a1-max", cfg.a1_max);
  sweep->add_option("--a1-step", cfg.a1_step);
  sweep->add_option("--a2-min", cfg.a2_min);
  sweep->add_option("--a2-max", cfg.a2_max);
  sweep->add_option("--a2-step", cfg.a2_step);

  tomo->add_option("--seed", cfg.seed, "RNG seed");
  tomo->add_option("--total", total, "counts per basis");
  tomo->add_option("--points", cfg.points, "number of evenly spaced times on [0, t-max]");
  tomo->add_flag("--noiseless", cfg.noiseless, "use expected counts instead of Poisson draws");
  tomo->add_option("--counts-in", cfg.counts_in, "reconstruct a single count file");
  tomo->add_option("--counts-out", cfg.counts_out, "directory for the simulated count files");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  if (fig->parsed()) cfg.command = Command::Figure;
  else if (sweep->parsed()) cfg.command = Command::Sweep;
  else if (dec->parsed()) cfg.command = Command::Decompose;
  else cfg.command = Command::Tomography;
  if (!figure.empty()) cfg.figure_id = figure;
  cfg.format = format == "json" ? aptsim::OutputFormat::Json : aptsim::OutputFormat::Csv;
  cfg.total = total;

  try {
    for (const auto& path : aptsim::run(cfg)) std::cout << path.string() << '\n';
  } catch (const aptsim::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const aptsim::NumericalError& e) {
    std::cerr << "numerical error: " << e.what() << '\n';
    return 3;
  } catch (const aptsim::IoError& e) {
    std::cerr << "i/o error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
